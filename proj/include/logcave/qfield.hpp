#pragma once
// Values of the form a + b*sqrt(d) with rational a, b and a square-free
// integer radicand d >= 0.  d == 0 encodes a plain rational (b is then 0), so
// equality is componentwise.  All arithmetic is exact; sign and comparison
// are decided by rational case analysis, never by floating point.
//
// Two values combine arithmetically only when they share one extension
// (equal d, or either side rational).  cross_field_cmp additionally orders
// values from *different* extensions through a nested squared comparison, the
// path used to settle facts like 1+sqrt(2) < (3+sqrt(5))/2 exactly.

#include <string>

#include "logcave/rat.hpp"

namespace logcave {

class QField {
  public:
    QField() : a_(0), b_(0), d_(0) {}
    QField(const Rat& rational) : a_(rational), b_(0), d_(0) {}  // NOLINT(runtime/explicit)
    QField(long value) : a_(value), b_(0), d_(0) {}              // NOLINT(runtime/explicit)
    // a + b*sqrt(d); d is reduced to its square-free core, and a collapsed
    // radical (b == 0 or d <= 1) falls back to the rational encoding.
    QField(Rat a, Rat b, Int d);

    const Rat& rat_part() const { return a_; }
    const Rat& rad_coeff() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    // The represented value when rational; error otherwise.
    const Rat& as_rat() const;

    friend bool operator==(const QField&, const QField&) = default;

  private:
    struct normalized_tag {};
    QField(normalized_tag, Rat a, Rat b, Int d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    Rat a_;
    Rat b_;
    Int d_;  // square-free, 0 for rationals

    friend QField qf_add(const QField&, const QField&);
    friend QField qf_sub(const QField&, const QField&);
    friend QField qf_mul(const QField&, const QField&);
    friend QField qf_div(const QField&, const QField&);
    friend QField qf_neg(const QField&);
};

// True when x and y may combine arithmetically (shared or rational field).
bool same_field(const QField& x, const QField& y);

QField qf_add(const QField& x, const QField& y);
QField qf_sub(const QField& x, const QField& y);
QField qf_mul(const QField& x, const QField& y);
QField qf_div(const QField& x, const QField& y);  // y must be nonzero
QField qf_neg(const QField& x);

inline QField operator+(const QField& x, const QField& y) { return qf_add(x, y); }
inline QField operator-(const QField& x, const QField& y) { return qf_sub(x, y); }
inline QField operator*(const QField& x, const QField& y) { return qf_mul(x, y); }
inline QField operator/(const QField& x, const QField& y) { return qf_div(x, y); }
inline QField operator-(const QField& x) { return qf_neg(x); }

// Exact sign, -1/0/+1.
int qf_sign(const QField& x);

// Three-way compare within one extension; mixed_field_error when x and y sit
// in different extensions (use cross_field_cmp for those).
int qf_cmp(const QField& x, const QField& y);

// Three-way compare valid across extensions: the difference
// A + B*sqrt(p) - C*sqrt(q) is signed by comparing B^2 p against C^2 q and,
// when the rational and radical parts disagree, A^2 against the square
// B^2 p + C^2 q + 2BC*sqrt(pq), whose own sign is one more single-radical
// comparison.  Falls back to qf_cmp when the fields already match.
int cross_field_cmp(const QField& x, const QField& y);

// sqrt of a nonnegative rational as an exact field value: p/q maps to
// sqrt(p*q)/q with the square part of p*q pulled out of the radical.
QField qf_sqrt(const Rat& v);

// (1 + sqrt(1+4r)) / 2 for rational r with 1+4r >= 0; the positive solution
// of u^2 = u + r, so squaring it yields r + itself exactly.
QField golden_ratio_of(const Rat& r);

// Certification constants: the classic-step threshold (3+sqrt(5))/2 and the
// generalized-step threshold 1+sqrt(2) (the positive root of u^2-2u-1).
QField r0();
QField r1();

}  // namespace logcave
