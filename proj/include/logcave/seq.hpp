#pragma once
// Finite sequences under the generalized log-concavity operator
//   L_r(a)_k = a_k^2 - r * a_{k-1} * a_{k+1}.
// A Seq stores entries for indices 0..size-1 and reads as exact zero outside
// that range, which makes every boundary case of the operator and of the
// factor-r log-concavity predicate uniform.  All entries share one quadratic
// extension (or are rational).
//
// SymSeq is the compressed form of the palindromic sequences this library
// certifies: a positive core x_0..x_n plus a parity.  It materializes to
//   even:  1, x_0, ..., x_n, x_n, ..., x_0, 1      (length 2n+4)
//   odd:   1, x_0, ..., x_n, x_{n-1}, ..., x_0, 1  (length 2n+3)
// and the operator preserves that shape.

#include <optional>
#include <vector>

#include "logcave/qfield.hpp"

namespace logcave {

enum class Parity { even, odd };

class Seq {
  public:
    explicit Seq(std::vector<QField> values);

    long size() const { return static_cast<long>(v_.size()); }
    // a_k, with exact zero outside the stored range.
    const QField& at(long k) const;
    const std::vector<QField>& values() const { return v_; }

    // Common radicand of the entries (0 when all rational).
    const Int& field() const { return d_; }

    bool nonnegative() const;
    // Index of the first negative entry, if any.
    std::optional<long> first_negative() const;

    friend bool operator==(const Seq&, const Seq&) = default;

  private:
    std::vector<QField> v_;
    Int d_;
};

struct SymSeq {
    std::vector<QField> core;  // x_0..x_n, all positive
    Parity parity;

    long n() const { return static_cast<long>(core.size()) - 1; }
};

Seq materialize(const SymSeq& s);

// Inverse of materialize: recover the core of a palindromic sequence with
// leading and trailing 1.  Errors when s does not have that shape.
SymSeq extract_core(const Seq& s, Parity parity);

// The operator accepts r >= 1 by default; allow_below_one admits any r > 0.
enum class RPolicy { standard, allow_below_one };

// Throws r_not_supported_error when r is outside the policy's range.
void validate_r(const QField& r, RPolicy policy);

Seq apply_lr(const Seq& s, const QField& r, RPolicy policy = RPolicy::standard);

// L_r applied folds times (folds >= 0).
Seq iterate_lr(const Seq& s, const QField& r, long folds,
               RPolicy policy = RPolicy::standard);

struct LcVerdict {
    bool ok;
    long fail_index;  // smallest failing index when !ok, else -1
};

// Exact check of a_k^2 >= r * a_{k-1} * a_{k+1} over the padded range.
// The sequence must be nonnegative.
LcVerdict is_r_factor_lc(const Seq& s, const QField& r,
                         RPolicy policy = RPolicy::standard);

struct FoldVerdict {
    bool ok;
    long fail_iteration;  // first fold whose image has a negative entry
    long fail_index;
};

// Nonnegativity of L_r^j(s) for every 1 <= j <= folds.
FoldVerdict is_ifold_lc(const Seq& s, const QField& r, long folds,
                        RPolicy policy = RPolicy::standard);

}  // namespace logcave
