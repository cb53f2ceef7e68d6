#pragma once
// Seeded random generators shared by the test binaries.  Everything draws
// from an explicit mt19937_64 so any failure reproduces from the seed the
// test names.  Sequences are sampled in log space with concavity margins and
// then rejection-checked against the exact predicate, so the returned values
// always satisfy the property exactly, not approximately.

#include <cmath>
#include <random>
#include <vector>

#include "logcave/qfield.hpp"
#include "logcave/seq.hpp"

namespace logcave::testgen {

using Rng = std::mt19937_64;

inline long rand_long(Rng& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline double rand_real(Rng& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

// Random rational with numerator in [num_lo, num_hi] and denominator in [1, den_hi].
inline Rat rand_rat(Rng& g, long num_lo, long num_hi, long den_hi) {
    return make_rat(rand_long(g, num_lo, num_hi), rand_long(g, 1, den_hi));
}

// Random rational in [1, hi] with denominator at most den_hi.
inline Rat rand_r_ge_1(Rng& g, long hi, long den_hi) {
    long den = rand_long(g, 1, den_hi);
    return make_rat(rand_long(g, den, hi * den), den);
}

// Rational grid approximation of a positive real; exact for the integer part
// even far beyond long range (mpz_class truncates the double exactly).
inline Rat grid_rat(double x, long grid) {
    Int num(x * static_cast<double>(grid));
    if (num < 1) num = 1;
    return make_rat(num, Int(grid));
}

inline double qf_to_double(const QField& x) {
    return x.rat_part().get_d() +
           x.rad_coeff().get_d() * std::sqrt(x.radicand().get_d());
}

// Positive values whose logs have increments decreasing by at least
// log_r + margin per step; rationalized on a grid.  The margin absorbs the
// rationalization error, and callers still verify the exact predicate.
inline std::vector<QField> log_concave_values(Rng& g, int len, double log_r,
                                              double margin) {
    std::vector<double> logs(static_cast<size_t>(len));
    logs[0] = rand_real(g, 0.0, 3.0);
    double inc = rand_real(g, -1.0, 4.0);
    for (int i = 1; i < len; ++i) {
        logs[static_cast<size_t>(i)] = logs[static_cast<size_t>(i - 1)] + inc;
        inc -= log_r + margin + rand_real(g, 0.0, 1.0);
    }
    std::vector<QField> out;
    out.reserve(static_cast<size_t>(len));
    const long grid = 1000 * rand_long(g, 1, 10);
    for (double v : logs) out.emplace_back(grid_rat(std::exp(v), grid));
    return out;
}

inline Seq random_r_factor_lc_seq(Rng& g, const QField& r, int max_len) {
    const double log_r = std::log(qf_to_double(r));
    for (int attempt = 0; attempt < 500; ++attempt) {
        int len = static_cast<int>(rand_long(g, 1, max_len));
        Seq s(log_concave_values(g, len, log_r, 0.3));
        if (is_r_factor_lc(s, r, RPolicy::allow_below_one).ok) return s;
    }
    throw error("rejection sampling failed to produce a factor-r log-concave sequence");
}

// Symmetric core whose materialization is factor-r log-concave: increments
// are kept above log r end to end so the centered condition holds, and the
// lead-in condition x_0^2 >= r x_1 pins the first value.
inline SymSeq random_r_factor_lc_sym(Rng& g, const QField& r, int max_n,
                                     Parity parity) {
    const double log_r = std::log(qf_to_double(r));
    const double m = 0.25;
    for (int attempt = 0; attempt < 500; ++attempt) {
        int n = static_cast<int>(rand_long(g, 0, max_n));
        std::vector<double> inc(static_cast<size_t>(n) + 1, 0.0);
        double acc = std::max(log_r, 0.0) + m + rand_real(g, 0.0, 1.5);
        for (int i = n; i >= 1; --i) {
            inc[static_cast<size_t>(i)] = acc;
            acc += log_r + m + rand_real(g, 0.0, 1.5);
        }
        // acc now exceeds every increment; the lead-in needs v0 >= inc1 + log r
        double v0 = (n >= 1 ? inc[1] : 0.0) + std::max(log_r, 0.0) + m +
                    rand_real(g, 0.0, 2.0);
        std::vector<QField> core;
        const long grid = 1000 * rand_long(g, 1, 10);
        double v = v0;
        core.emplace_back(grid_rat(std::exp(v), grid));
        for (int i = 1; i <= n; ++i) {
            v += inc[static_cast<size_t>(i)];
            core.emplace_back(grid_rat(std::exp(v), grid));
        }
        SymSeq sym{std::move(core), parity};
        if (is_r_factor_lc(materialize(sym), r, RPolicy::allow_below_one).ok) {
            return sym;
        }
    }
    throw error("rejection sampling failed to produce a symmetric factor-r "
                "log-concave core");
}

}  // namespace logcave::testgen
