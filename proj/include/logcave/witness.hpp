#pragma once
// Constructive members of the region: scale a base core q by C^(E(j)) a^(j+1)
// with E the doubled-pentagonal or triangular exponents, pick C below the
// scheme bound and a above the center bound, and the result lands inside the
// region on every surface — with room to scale a upward without limit.
//
// Exactness contract.  C and a are rational and q lives in a single quadratic
// extension, so witness coordinates stay exact and every bound is decided by
// field comparisons; sqrt(r) is never materialized (bounds that involve it
// are decided through equivalent squared comparisons).
//
// The base core must 1-prefix to a factor-r log-concave sequence: with the
// leading bracket value 1 attached, {1, q_0, ..., q_n} passes is_r_factor_lc.
// That supplies q_0^2 >= r q_1 and the interior ratios the membership
// derivation consumes; the center condition is absorbed by a instead.  When
// q_core is left empty a default of q_j = r^(-j(j+1)/2) is used, which meets
// every 1-prefixed condition with equality and reduces to the all-ones core
// at r = 1.

#include <vector>

#include "logcave/qfield.hpp"
#include "logcave/seq.hpp"

namespace logcave {

enum class Scheme { pentagonal, triangular };

// Doubled pentagonal number n(3n-1).  Second difference 6, so consecutive
// exponent gaps grow by 6 and interior clauses gain a factor C^(-6).
Int pentagonal(long n);

// Triangular number n(n+1)/2.  Second difference 1.
Int triangular(long n);

// The exact upper bound 2 sqrt(r) / (1 + sqrt(1+4r)) for pentagonal-scheme
// C.  Representable as a single-radical value only when sqrt(r) or
// sqrt(1+4r) is rational; otherwise raises the representation error and
// callers fall back on c_valid, which never materializes sqrt(r).
// r must be rational and at least 1.
QField c_bound(const QField& r);

// Exact validity test for a scheme's C, by squared comparison:
//   pentagonal: C^2 (1 + sqrt(1+4r))^2 < 4r   (i.e. C < sqrt(r)/phi_r)
//   triangular: C (1 + 2r + sqrt(1+4r)) < 2r  (i.e. C < r/phi_r^2)
// Both imply 0 < C < 1.  The triangular spacing consumes only one gap of C
// per interior clause where the pentagonal spacing consumes six, which is
// why its bound is the tighter r/phi^2.
bool c_valid(const Rat& C, const QField& r, Scheme scheme);

struct WitnessSpec {
    std::vector<QField> q_core;  // n+1 values; empty selects the default core
    Rat r = 1;
    Rat C = 1;
    Rat a = 0;
    Scheme scheme = Scheme::pentagonal;
    Parity parity = Parity::even;
    long n = 1;
};

// The exact threshold a must strictly exceed (s.a is ignored):
//   even: (1+r)    * C^(E(n-1)-E(n)) * q_{n-1}/q_n
//   odd:  phi_r    * C^(E(n-1)-E(n)) * q_{n-1}/q_n
// The odd factor is the full phi_r demanded by the derived center clause
// x_n^2 >= phi^2 x_{n-1}^2.  Requires n >= 1 and a valid C.
QField a_bound_exact(const WitnessSpec& s);

// A rational strictly above a_bound_exact with denominator 10^6: the
// threshold is over-approximated at 256-bit precision, floored on the
// 10^-6 grid, stepped up one tick, and the strict inequality re-verified
// by exact comparison.
Rat a_bound(const WitnessSpec& s);

// Builds the witness core x_j = C^(E(j)) a^(j+1) q_j and returns it with
// the requested parity.  Validates the base core (1-prefixed factor-r
// log-concavity), C (per scheme), and a (strictly above a_bound_exact),
// then asserts the built point passes correct_side on every surface.
SymSeq build_witness(const WitnessSpec& s);

}  // namespace logcave
