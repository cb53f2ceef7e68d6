#pragma once
// Exact rational arithmetic.  Rat is GMP's canonical rational (numerator and
// positive denominator coprime, zero stored as 0/1); the helpers here cover
// construction, integer powers, and the few integer utilities the rest of the
// library leans on (integer square roots, square-free decomposition).

#include <gmpxx.h>

#include <string>
#include <utility>

#include "logcave/errors.hpp"

namespace logcave {

using Int = mpz_class;
using Rat = mpq_class;

// num/den as a canonical rational; throws on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

// Sign as -1/0/+1.
inline int rat_sign(const Rat& q) { return sgn(q); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// q^e for any integer exponent; 0^e with e < 0 is rejected.
Rat rat_pow(const Rat& q, long e);

// n^e for e >= 0.
Int int_pow(const Int& n, unsigned long e);

// floor(sqrt(n)) and whether n is a perfect square; n must be >= 0.
std::pair<Int, bool> int_sqrt(const Int& n);

// n = root^2 * core with core square-free; n must be >= 0.
// Complete for every n whose square factors have a prime divisor below 2^16
// or whose residual cofactor is a perfect square, which covers all radicands
// this library constructs.
struct SquareFree {
    Int root;
    Int core;
};
SquareFree square_free_decompose(const Int& n);

// Exact q-th root of a rational whose numerator and denominator are perfect
// q-th powers; returns false in ok when no exact root exists.
struct RatRoot {
    bool ok;
    Rat root;
};
RatRoot rat_nth_root(const Rat& v, unsigned long q);

}  // namespace logcave
