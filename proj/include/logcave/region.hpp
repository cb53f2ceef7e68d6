#pragma once
// Bounding hypersurfaces of the region of generalized r-factor infinite
// log-concavity, the derived-inequality membership predicate, closure of the
// region under the operator, and geometric-form gap decomposition.
//
// A region point (x_0..x_n) stands for the symmetric padded sequence
// 1, x_0, ..., x_n[, x_n], ..., x_0, 1.  Membership is one derived inequality
// per bounding surface, all exact, with boundary equality counting as inside:
//   surface 0:          x_0^2 >= phi_r^2 * x_1           (x_{-1} = 1)
//   surface 0 < j < n:  x_j^2 >= phi_r^2 * x_{j-1} x_{j+1}
//   surface n, even:    x_n   >= (1+r) x_{n-1}
//   surface n, odd:     x_n^2 >= phi_r^2 * x_{n-1}^2
// with phi_r = (1+sqrt(1+4r))/2 and phi_r^2 expanded exactly as phi_r + r.
// At n = 0 the single clause is the center one with x_{-1} = 1.  The clause
// set is closed under one operator application: every y_j = x_j^2 - r(...)
// is at least x_j^2/phi_r (x_n^2/(1+r) at an even center), which re-derives
// each inequality for the image; closure_test re-verifies that on orbits.

#include <optional>
#include <string>
#include <vector>

#include "logcave/qfield.hpp"
#include "logcave/seq.hpp"

namespace logcave {

// (1+sqrt(1+4r))/2 for rational r >= 1, exact in Q(sqrt(1+4r)); satisfies
// phi^2 = phi + r.  Irrational r raises r_not_rational_error.
QField phi(const QField& r);

// Positive fixed point of the width-one symmetric family under the operator:
// 1+r for even parity (any field), phi(r) for odd (rational r only).
QField fixed_point(Parity parity, const QField& r);

// x^e for rational x > 0 and rational e, exact when the value lies in Q or in
// a single square-root extension (the e-denominator root of x, or of its
// square, must be rational); not_representable_error otherwise.
QField qf_pow_rat(const Rat& x, const Rat& e);

struct RegionPoint {
    std::vector<QField> coords;  // x_0..x_n, positive
    Parity parity = Parity::even;

    long n() const { return static_cast<long>(coords.size()) - 1; }
};

// Parameters of one point on one bounding surface.  Every surface of a
// dimension-n family takes exactly n-1 exponent gaps, strictly decreasing
// inside (0,1).  The base x must be rational and compatible with every
// exponent the surface builds (see qf_pow_rat); passing a base that is an
// L-th power with L divisible by all gap denominators always works.  At
// n = 0 the surface degenerates to the fixed point and x is unused.
struct HParams {
    Rat r = 1;
    long n = 0;
    Parity parity = Parity::even;
    long surface = 0;       // j in 0..n
    Rat x = 1;              // base, >= 1
    std::vector<Rat> gaps;  // n-1 values with 1 > g[0] > ... > g[n-2] > 0
};

RegionPoint hypersurface_point(const HParams& p);

struct SideReport {
    std::vector<bool> per_surface;  // one verdict per surface 0..n
    bool member = false;            // conjunction
};

SideReport correct_side(const RegionPoint& p, const QField& r);

struct ClosureViolation {
    long iteration = 0;  // first iterate whose core fails membership
    long surface = 0;    // first failing surface there

    friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
};

struct ClosureReport {
    long iterations_run = 0;
    std::optional<ClosureViolation> violation;
};

// Applies the operator iters times to the materialized point, re-checking
// membership of the extracted core after each application and stopping at the
// first failure.  The input itself must be a member (not_in_region_error
// otherwise).  A reported violation would falsify the closure argument above,
// not merely the input.
ClosureReport closure_test(const RegionPoint& p, const QField& r, long iters);

struct GapBounds {
    double lo = 0.0;
    double hi = 0.0;
};

struct DecomposeResult {
    bool geometric = false;           // point matches x, x^(1+d_1), ... with
                                      // 1 >= d_1 >= ... >= d_n >= 0
    QField x;                         // the base, coordinate 0
    std::vector<GapBounds> gaps;      // certified enclosures of d_1..d_n
    std::optional<long> failing_gap;  // first gap breaking range/monotonicity
    std::string reason;               // empty when geometric
};

// Reads the point as a geometric form x_j = x^(1+d_1+...+d_j) with x = x_0.
// Whether the implied gaps satisfy 1 >= d_1 >= ... >= d_n >= 0 (non-strict)
// is decided exactly: d_j >= d_{j+1} iff x_j^2 >= x_{j-1} x_{j+1}, d_1 <= 1
// iff x_1 <= x_0^2, d_n >= 0 iff x_n >= x_{n-1}.  Gap values are reported as
// directed-rounding double enclosures of log(x_j/x_{j-1}) / log(x_0), for
// diagnostics only.  A non-geometric point is an outcome, not an error.
DecomposeResult decompose(const RegionPoint& p);

}  // namespace logcave
