#include "logcave/qfield.hpp"

namespace logcave {

namespace {

[[noreturn]] void throw_mixed(const Int& d1, const Int& d2) {
    throw mixed_field_error("values live in different quadratic extensions: sqrt(" +
                            d1.get_str() + ") vs sqrt(" + d2.get_str() + ")");
}

// Shared radicand of two combinable values.
Int merge_d(const QField& x, const QField& y) {
    if (x.radicand() == 0) return y.radicand();
    if (y.radicand() == 0 || x.radicand() == y.radicand()) return x.radicand();
    throw_mixed(x.radicand(), y.radicand());
}

// sign of B*sqrt(p) + C*sqrt(q) with B, C nonzero and p, q positive.
int radical_pair_sign(const Rat& B, const Int& p, const Rat& C, const Int& q) {
    int sb = sgn(B), sc = sgn(C);
    if (sb == sc) return sb;
    int c = cmp(B * B * Rat(p), C * C * Rat(q));
    if (c == 0) return 0;
    return c > 0 ? sb : sc;
}

}  // namespace

QField::QField(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw error("negative radicand");
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
        return;
    }
    SquareFree sf = square_free_decompose(d_);
    b_ *= Rat(sf.root);
    d_ = sf.core;
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
}

const Rat& QField::as_rat() const {
    if (!is_rational()) throw error("value is irrational");
    return a_;
}

bool same_field(const QField& x, const QField& y) {
    return x.radicand() == 0 || y.radicand() == 0 || x.radicand() == y.radicand();
}

QField qf_add(const QField& x, const QField& y) {
    Int d = merge_d(x, y);
    Rat b = x.b_ + y.b_;
    if (b == 0) return QField(x.a_ + y.a_);
    return QField(QField::normalized_tag{}, x.a_ + y.a_, std::move(b), std::move(d));
}

QField qf_sub(const QField& x, const QField& y) {
    Int d = merge_d(x, y);
    Rat b = x.b_ - y.b_;
    if (b == 0) return QField(x.a_ - y.a_);
    return QField(QField::normalized_tag{}, x.a_ - y.a_, std::move(b), std::move(d));
}

QField qf_mul(const QField& x, const QField& y) {
    Int d = merge_d(x, y);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
    Rat a = x.a_ * y.a_;
    if (x.b_ != 0 && y.b_ != 0) a += x.b_ * y.b_ * Rat(d);
    Rat b = x.a_ * y.b_ + y.a_ * x.b_;
    if (b == 0) return QField(std::move(a));
    return QField(QField::normalized_tag{}, std::move(a), std::move(b), std::move(d));
}

QField qf_div(const QField& x, const QField& y) {
    if (qf_sign(y) == 0) throw error("division by zero");
    Int d = merge_d(x, y);
    if (y.b_ == 0) {
        Rat b = x.b_ / y.a_;
        if (b == 0) return QField(x.a_ / y.a_);
        return QField(QField::normalized_tag{}, x.a_ / y.a_, std::move(b), std::move(d));
    }
    // multiply by the conjugate: 1/(a + b s) = (a - b s)/(a^2 - b^2 d)
    Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * Rat(d);
    QField conj(QField::normalized_tag{}, y.a_ / norm, -y.b_ / norm, d);
    return qf_mul(x, conj);
}

QField qf_neg(const QField& x) {
    if (x.b_ == 0) return QField(-x.a_);
    return QField(QField::normalized_tag{}, -x.a_, -x.b_, x.d_);
}

int qf_sign(const QField& x) {
    int sa = sgn(x.rat_part());
    int sb = sgn(x.rad_coeff());
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite parts: |a| vs |b| sqrt(d) via a^2 vs b^2 d
    int c = cmp(x.rat_part() * x.rat_part(),
                x.rad_coeff() * x.rad_coeff() * Rat(x.radicand()));
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

int qf_cmp(const QField& x, const QField& y) {
    if (!same_field(x, y)) throw_mixed(x.radicand(), y.radicand());
    return qf_sign(qf_sub(x, y));
}

int cross_field_cmp(const QField& x, const QField& y) {
    if (same_field(x, y)) return qf_cmp(x, y);
    // x - y = A + B*sqrt(p) + C*sqrt(q), all of A, B, C rational, B, C != 0
    const Rat A = x.rat_part() - y.rat_part();
    const Rat& B = x.rad_coeff();
    const Int& p = x.radicand();
    const Rat C = -y.rad_coeff();
    const Int& q = y.radicand();

    int radical_sign = radical_pair_sign(B, p, C, q);
    int rational_sign = sgn(A);
    if (rational_sign == 0) return radical_sign;
    if (radical_sign == 0) return rational_sign;
    if (rational_sign == radical_sign) return rational_sign;
    // opposing parts: compare A^2 with (B sqrt p + C sqrt q)^2, itself a
    // single-radical value D + E*sqrt(pq)
    Rat D = B * B * Rat(p) + C * C * Rat(q) - A * A;
    Rat E = 2 * B * C;
    int mag = qf_sign(QField(std::move(D), std::move(E), p * q));
    if (mag == 0) return 0;  // |A| equals the radical magnitude exactly
    return mag > 0 ? radical_sign : rational_sign;
}

QField qf_sqrt(const Rat& v) {
    if (v < 0) throw error("square root of a negative rational");
    if (v == 0) return QField(Rat(0));
    // sqrt(p/q) = sqrt(p q) / q
    Int pq = v.get_num() * v.get_den();
    SquareFree sf = square_free_decompose(pq);
    Rat coeff = make_rat(sf.root, v.get_den());
    return QField(Rat(0), coeff, sf.core);
}

QField golden_ratio_of(const Rat& r) {
    Rat disc = 1 + 4 * r;
    if (disc < 0) throw error("discriminant 1+4r is negative");
    QField root = qf_sqrt(disc);
    return qf_mul(qf_add(QField(Rat(1)), root), QField(make_rat(1, 2)));
}

QField r0() { return QField(make_rat(3, 2), make_rat(1, 2), 5); }

QField r1() { return QField(Rat(1), Rat(1), 2); }

}  // namespace logcave
