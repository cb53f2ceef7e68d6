#include "logcave/witness.hpp"

#include <string>
#include <utility>

#include "logcave/errors.hpp"
#include "logcave/region.hpp"

namespace logcave {

namespace {

const QField kOne{Rat(1)};

Rat require_rational_r(const QField& r) {
    if (!r.is_rational()) {
        throw r_not_rational_error("witness construction needs a rational r");
    }
    validate_r(r, RPolicy::standard);
    return r.as_rat();
}

// b^k for rational b > 0 and exact integer k of either sign.
Rat rat_pow(const Rat& b, const Int& k) {
    if (!k.fits_slong_p()) throw error("witness exponent too large");
    const unsigned long m = static_cast<unsigned long>(
        k < 0 ? -k.get_si() : k.get_si());
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), m);
    mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), m);
    return k < 0 ? make_rat(den, num) : make_rat(num, den);
}

Int scheme_exponent(Scheme scheme, long j) {
    return scheme == Scheme::pentagonal ? pentagonal(j) : triangular(j);
}

// The base core with the leading bracket 1 attached must be factor-r
// log-concave; that is what the membership derivation consumes.
std::vector<QField> effective_q(const WitnessSpec& s, const Rat& rr) {
    std::vector<QField> q;
    if (s.q_core.empty()) {
        for (long j = 0; j <= s.n; ++j) {
            q.emplace_back(rat_pow(rr, -triangular(j)));
        }
    } else {
        if (static_cast<long>(s.q_core.size()) != s.n + 1) {
            throw error("base core must have n+1 values, got " +
                        std::to_string(s.q_core.size()));
        }
        q = s.q_core;
    }
    for (const QField& v : q) {
        if (qf_sign(v) <= 0) throw error("base core values must be positive");
    }
    std::vector<QField> prefixed;
    prefixed.reserve(q.size() + 1);
    prefixed.push_back(kOne);
    prefixed.insert(prefixed.end(), q.begin(), q.end());
    const LcVerdict v = is_r_factor_lc(Seq(std::move(prefixed)), QField(rr),
                                       RPolicy::standard);
    if (!v.ok) {
        throw not_r_factor_lc_error(
            "the 1-prefixed base core breaks factor-r log-concavity at index " +
            std::to_string(v.fail_index));
    }
    return q;
}

QField bound_with_q(const WitnessSpec& s, const Rat& rr,
                    const std::vector<QField>& q) {
    const Int diff = scheme_exponent(s.scheme, s.n - 1) - scheme_exponent(s.scheme, s.n);
    const QField scale{rat_pow(s.C, diff)};
    const QField k = s.parity == Parity::even ? QField(Rat(1 + rr))
                                              : golden_ratio_of(rr);
    return qf_mul(k, qf_mul(scale, qf_div(q[static_cast<size_t>(s.n - 1)],
                                          q[static_cast<size_t>(s.n)])));
}

void validate_common(const WitnessSpec& s, const Rat& rr) {
    if (s.n < 1) throw error("witness dimension must be at least 1");
    if (!c_valid(s.C, QField(rr), s.scheme)) {
        throw invalid_c_error("C = " + s.C.get_str() +
                              " is not below the scheme bound for r = " +
                              rr.get_str());
    }
}

}  // namespace

Int pentagonal(long n) {
    if (n < 0) throw error("index must be nonnegative");
    const Int m(n);
    return m * (3 * m - 1);
}

Int triangular(long n) {
    if (n < 0) throw error("index must be nonnegative");
    const Int m(n);
    return m * (m + 1) / 2;
}

QField c_bound(const QField& r) {
    const Rat rr = require_rational_r(r);
    const QField root_r = qf_sqrt(rr);
    const QField s = qf_sqrt(1 + 4 * rr);
    if (!root_r.is_rational() && !s.is_rational()) {
        // sqrt(r) and sqrt(1+4r) never share a radicand (that would force
        // the radicand to divide 1), so the quotient leaves every single
        // quadratic extension.
        throw not_representable_error(
            "2 sqrt(r)/(1 + sqrt(1+4r)) spans two radical extensions for r = " +
            rr.get_str());
    }
    return qf_div(qf_mul(QField(Rat(2)), root_r), qf_add(kOne, s));
}

bool c_valid(const Rat& C, const QField& r, Scheme scheme) {
    const Rat rr = require_rational_r(r);
    if (sgn(C) <= 0) return false;
    const QField s = qf_sqrt(1 + 4 * rr);
    if (scheme == Scheme::pentagonal) {
        const QField onePlusS = qf_add(kOne, s);
        const QField lhs = qf_mul(QField(Rat(C * C)), qf_mul(onePlusS, onePlusS));
        return qf_sign(qf_sub(QField(Rat(4 * rr)), lhs)) > 0;
    }
    const QField lhs = qf_mul(QField(C), qf_add(QField(Rat(1 + 2 * rr)), s));
    return qf_sign(qf_sub(QField(Rat(2 * rr)), lhs)) > 0;
}

QField a_bound_exact(const WitnessSpec& s) {
    const Rat rr = require_rational_r(QField(s.r));
    validate_common(s, rr);
    return bound_with_q(s, rr, effective_q(s, rr));
}

Rat a_bound(const WitnessSpec& s) {
    const QField bound = a_bound_exact(s);
    // 256-bit over-approximation, then exact adjustment on the 10^-6 grid.
    const long grid = 1000000;
    mpf_class approx(0, 256);
    approx = mpf_class(bound.rat_part(), 256);
    if (bound.radicand() != 0) {
        mpf_class root(0, 256);
        root = sqrt(mpf_class(bound.radicand(), 256));
        approx += mpf_class(bound.rad_coeff(), 256) * root;
    }
    approx *= grid;
    Int g;
    mpz_set_f(g.get_mpz_t(), approx.get_mpf_t());
    const auto at_most_bound = [&](const Int& k) {
        return qf_sign(qf_sub(bound, QField(make_rat(k, grid)))) >= 0;
    };
    while (!at_most_bound(g)) g -= 1;
    while (at_most_bound(g + 1)) g += 1;
    return make_rat(g + 1, grid);
}

SymSeq build_witness(const WitnessSpec& s) {
    const Rat rr = require_rational_r(QField(s.r));
    validate_common(s, rr);
    const std::vector<QField> q = effective_q(s, rr);
    const QField bound = bound_with_q(s, rr, q);
    if (sgn(s.a) <= 0 || qf_sign(qf_sub(QField(s.a), bound)) <= 0) {
        throw invalid_a_error("a = " + s.a.get_str() +
                              " does not strictly exceed the center bound");
    }
    std::vector<QField> core;
    core.reserve(static_cast<size_t>(s.n) + 1);
    Rat a_power = s.a;
    for (long j = 0; j <= s.n; ++j) {
        const Rat coeff = rat_pow(s.C, scheme_exponent(s.scheme, j)) * a_power;
        core.push_back(qf_mul(QField(coeff), q[static_cast<size_t>(j)]));
        a_power *= s.a;
    }
    SymSeq out{std::move(core), s.parity};
    if (!correct_side({out.core, s.parity}, QField(rr)).member) {
        throw error("internal: a validated witness fell outside the region");
    }
    return out;
}

}  // namespace logcave
