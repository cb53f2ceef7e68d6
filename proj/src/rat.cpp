#include "logcave/rat.hpp"

namespace logcave {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw error("zero raised to a negative power");
        return Rat(0);
    }
    unsigned long mag = (e < 0) ? static_cast<unsigned long>(-(e + 1)) + 1
                                : static_cast<unsigned long>(e);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), mag);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), mag);
    if (e < 0) {
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    }
    // powers of a canonical rational stay canonical apart from the sign slot
    out.canonicalize();
    return out;
}

Int int_pow(const Int& n, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), e);
    return out;
}

std::pair<Int, bool> int_sqrt(const Int& n) {
    if (n < 0) throw error("integer square root of a negative number");
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    return {root, rem == 0};
}

SquareFree square_free_decompose(const Int& n) {
    if (n < 0) throw error("square-free decomposition of a negative number");
    SquareFree out{1, 1};
    if (n <= 1) {
        out.core = n;
        return out;
    }
    Int rest = n;
    // strip p^2 for every trial divisor found; divisors are tried in order so
    // composite trial values never divide what is left
    for (Int f = 2; f * f <= rest && f <= 65536; ++f) {
        if (rest % f != 0) continue;
        unsigned count = 0;
        while (rest % f == 0) {
            rest /= f;
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) out.root *= f;
        if (count % 2 == 1) out.core *= f;
    }
    if (rest > 1) {
        auto [root, square] = int_sqrt(rest);
        if (square) {
            out.root *= root;
        } else {
            out.core *= rest;
        }
    }
    return out;
}

RatRoot rat_nth_root(const Rat& v, unsigned long q) {
    if (q == 0) throw error("zeroth root");
    if (v < 0) throw error("even root of a negative rational");
    if (q == 1) return {true, v};
    Int num_root, den_root;
    int num_ok = mpz_root(num_root.get_mpz_t(), v.get_num_mpz_t(), q);
    int den_ok = mpz_root(den_root.get_mpz_t(), v.get_den_mpz_t(), q);
    if (!num_ok || !den_ok) return {false, Rat(0)};
    return {true, make_rat(num_root, den_root)};
}

}  // namespace logcave
