#include "logcave/region.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "logcave/errors.hpp"

namespace logcave {

namespace {

const QField kOne{Rat(1)};

Rat require_rational_r(const QField& r) {
    if (!r.is_rational()) {
        throw r_not_rational_error("this operation needs a rational r");
    }
    validate_r(r, RPolicy::standard);
    return r.as_rat();
}

// b^k for rational b > 0 and machine-word k.
Rat rat_ipow(const Rat& b, const Int& k) {
    if (!k.fits_slong_p()) throw not_representable_error("power exponent too large");
    long kl = k.get_si();
    Rat base = kl >= 0 ? b : Rat(1) / b;
    unsigned long m = kl >= 0 ? static_cast<unsigned long>(kl)
                              : -static_cast<unsigned long>(kl);
    Rat acc(1);
    while (m != 0) {
        if (m & 1UL) acc *= base;
        base *= base;
        m >>= 1UL;
    }
    acc.canonicalize();
    return acc;
}

// Exact k-th root of b when both numerator and denominator are perfect k-th
// powers.
bool try_exact_root(const Rat& b, unsigned long k, Rat& out) {
    if (k == 1) {
        out = b;
        return true;
    }
    Int root_num, root_den;
    if (mpz_root(root_num.get_mpz_t(), b.get_num().get_mpz_t(), k) == 0) return false;
    if (mpz_root(root_den.get_mpz_t(), b.get_den().get_mpz_t(), k) == 0) return false;
    out = make_rat(root_num, root_den);
    return true;
}

}  // namespace

QField phi(const QField& r) {
    return golden_ratio_of(require_rational_r(r));
}

QField fixed_point(Parity parity, const QField& r) {
    if (parity == Parity::odd) return phi(r);
    validate_r(r, RPolicy::standard);
    return qf_add(r, kOne);
}

QField qf_pow_rat(const Rat& x, const Rat& e) {
    if (sgn(x) <= 0) throw error("power base must be positive");
    Rat ec = e;
    ec.canonicalize();
    const Int& p = ec.get_num();
    const Int& s = ec.get_den();
    if (p == 0) return QField(Rat(1));
    if (!s.fits_ulong_p()) throw not_representable_error("power exponent denominator too large");
    const unsigned long sl = s.get_ui();
    Rat root;
    if (try_exact_root(x, sl, root)) return QField(rat_ipow(root, p));
    if (sl % 2 == 0 && try_exact_root(x, sl / 2, root)) {
        // x^(p/s) = root^(p/2); odd p leaves one square-root factor.
        if (mpz_even_p(p.get_mpz_t())) return QField(rat_ipow(root, p / 2));
        return qf_mul(QField(rat_ipow(root, (p - 1) / 2)), qf_sqrt(root));
    }
    throw not_representable_error(
        "the fractional power does not lie in a single square-root extension");
}

RegionPoint hypersurface_point(const HParams& p) {
    if (p.n < 0) throw error("dimension must be nonnegative");
    if (p.surface < 0 || p.surface > p.n) throw error("surface index out of range");
    if (sgn(p.r - 1) < 0) throw r_not_supported_error("r must be at least 1");
    if (sgn(p.x - 1) < 0) throw error("base x must be at least 1");
    const long want = p.n >= 1 ? p.n - 1 : 0;
    if (static_cast<long>(p.gaps.size()) != want) {
        throw invalid_gaps_error("a dimension-" + std::to_string(p.n) +
                                 " surface takes exactly " + std::to_string(want) +
                                 " gaps, got " + std::to_string(p.gaps.size()));
    }
    for (size_t i = 0; i < p.gaps.size(); ++i) {
        if (sgn(p.gaps[i]) <= 0 || sgn(p.gaps[i] - 1) >= 0) {
            throw invalid_gaps_error("gaps must lie strictly inside (0, 1)");
        }
        if (i + 1 < p.gaps.size() && sgn(p.gaps[i] - p.gaps[i + 1]) <= 0) {
            throw invalid_gaps_error("gaps must be strictly decreasing");
        }
    }

    const QField rq{p.r};
    if (p.n == 0) return {{fixed_point(p.parity, rq)}, p.parity};

    const QField ph = golden_ratio_of(p.r);
    const long n = p.n;
    const long j = p.surface;
    const std::vector<Rat>& g = p.gaps;
    std::vector<Rat> expo(static_cast<size_t>(n) + 1, Rat(0));
    if (j == 0) {
        // (phi x, x^2, x^{2+g0}, ...): the first gap after the squared slot.
        expo[0] = 1;
        Rat e(2);
        expo[1] = e;
        for (long k = 2; k <= n; ++k) {
            e += g[static_cast<size_t>(k - 2)];
            expo[static_cast<size_t>(k)] = e;
        }
    } else if (j == n) {
        // (x, x^{1+g0}, ..., x^E, K x^E): the last two slots share E.
        Rat e(1);
        expo[0] = e;
        for (long k = 1; k <= n - 1; ++k) {
            e += g[static_cast<size_t>(k - 1)];
            expo[static_cast<size_t>(k)] = e;
        }
        expo[static_cast<size_t>(n)] = e;
    } else {
        // (..., phi x^{E_j}, x^{E_j + g_{j-1}}, ...): slot j carries phi and
        // the gap before it is doubled across slots j and j+1.
        Rat e(1);
        expo[0] = e;
        for (long k = 1; k <= j; ++k) {
            e += g[static_cast<size_t>(k - 1)];
            expo[static_cast<size_t>(k)] = e;
        }
        e += g[static_cast<size_t>(j - 1)];
        expo[static_cast<size_t>(j + 1)] = e;
        for (long k = j + 2; k <= n; ++k) {
            e += g[static_cast<size_t>(k - 2)];
            expo[static_cast<size_t>(k)] = e;
        }
    }

    std::vector<QField> coords;
    coords.reserve(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        QField value = qf_pow_rat(p.x, expo[static_cast<size_t>(k)]);
        if ((j == 0 && k == 0) || (0 < j && j < n && k == j) ||
            (j == n && k == n && p.parity == Parity::odd)) {
            value = qf_mul(ph, value);
        } else if (j == n && k == n) {
            value = qf_mul(qf_add(rq, kOne), value);
        }
        coords.push_back(std::move(value));
    }
    return {std::move(coords), p.parity};
}

SideReport correct_side(const RegionPoint& p, const QField& r) {
    if (p.coords.empty()) throw error("point must have at least one coordinate");
    for (const QField& c : p.coords) {
        if (qf_sign(c) <= 0) throw error("coordinates must be positive");
    }
    const Rat rr = require_rational_r(r);
    const QField ph = golden_ratio_of(rr);
    const QField ph2 = qf_add(ph, r);  // phi^2 = phi + r, exactly
    const long n = p.n();
    SideReport rep;
    rep.per_surface.resize(static_cast<size_t>(n) + 1, false);
    for (long j = 0; j <= n; ++j) {
        QField lhs, rhs;
        if (j == n) {
            const QField& prev = n == 0 ? kOne : p.coords[static_cast<size_t>(n - 1)];
            if (p.parity == Parity::even) {
                lhs = p.coords[static_cast<size_t>(n)];
                rhs = qf_mul(qf_add(r, kOne), prev);
            } else {
                lhs = qf_mul(p.coords[static_cast<size_t>(n)], p.coords[static_cast<size_t>(n)]);
                rhs = qf_mul(ph2, qf_mul(prev, prev));
            }
        } else if (j == 0) {
            lhs = qf_mul(p.coords[0], p.coords[0]);
            rhs = qf_mul(ph2, p.coords[1]);
        } else {
            lhs = qf_mul(p.coords[static_cast<size_t>(j)], p.coords[static_cast<size_t>(j)]);
            rhs = qf_mul(ph2, qf_mul(p.coords[static_cast<size_t>(j - 1)],
                                     p.coords[static_cast<size_t>(j + 1)]));
        }
        rep.per_surface[static_cast<size_t>(j)] = qf_sign(qf_sub(lhs, rhs)) >= 0;
    }
    rep.member = std::all_of(rep.per_surface.begin(), rep.per_surface.end(),
                             [](bool v) { return v; });
    return rep;
}

ClosureReport closure_test(const RegionPoint& p, const QField& r, long iters) {
    if (iters < 0) throw error("iteration count must be nonnegative");
    if (!correct_side(p, r).member) {
        throw not_in_region_error("the starting point is not a region member");
    }
    Seq s = materialize(SymSeq{p.coords, p.parity});
    ClosureReport rep;
    for (long i = 1; i <= iters; ++i) {
        s = apply_lr(s, r);
        SymSeq core = extract_core(s, p.parity);
        SideReport side = correct_side(RegionPoint{std::move(core.core), p.parity}, r);
        rep.iterations_run = i;
        if (!side.member) {
            long surf = 0;
            while (side.per_surface[static_cast<size_t>(surf)]) ++surf;
            rep.violation = ClosureViolation{i, surf};
            break;
        }
    }
    return rep;
}

namespace {

constexpr mpfr_prec_t kGapPrec = 192;

// Writes a directed-rounding endpoint of a + b*sqrt(d) into out: a lower
// bound under MPFR_RNDD, an upper bound under MPFR_RNDU.
void qf_endpoint(mpfr_t out, const QField& v, mpfr_rnd_t rnd) {
    mpfr_set_q(out, v.rat_part().get_mpq_t(), rnd);
    if (v.radicand() != 0 && sgn(v.rad_coeff()) != 0) {
        // The root's own rounding must point with the sign of its coefficient.
        const bool pos = sgn(v.rad_coeff()) > 0;
        const mpfr_rnd_t root_rnd = ((rnd == MPFR_RNDD) == pos) ? MPFR_RNDD : MPFR_RNDU;
        mpfr_t root, term;
        mpfr_init2(root, kGapPrec);
        mpfr_init2(term, kGapPrec);
        mpfr_set_z(root, v.radicand().get_mpz_t(), root_rnd);
        mpfr_sqrt(root, root, root_rnd);
        mpfr_mul_q(term, root, v.rad_coeff().get_mpq_t(), rnd);
        mpfr_add(out, out, term, rnd);
        mpfr_clear(root);
        mpfr_clear(term);
    }
}

// log of a positive exact value as a directed-rounding enclosure.
void log_enclosure(mpfr_t lo, mpfr_t hi, const QField& v) {
    qf_endpoint(lo, v, MPFR_RNDD);
    qf_endpoint(hi, v, MPFR_RNDU);
    if (mpfr_sgn(lo) <= 0) {
        mpfr_set_inf(lo, -1);
    } else {
        mpfr_log(lo, lo, MPFR_RNDD);
    }
    mpfr_log(hi, hi, MPFR_RNDU);
}

std::vector<GapBounds> gap_enclosures(const std::vector<QField>& coords) {
    const size_t n1 = coords.size();
    std::vector<mpfr_t> lo(n1), hi(n1);
    for (size_t k = 0; k < n1; ++k) {
        mpfr_init2(lo[k], kGapPrec);
        mpfr_init2(hi[k], kGapPrec);
        log_enclosure(lo[k], hi[k], coords[k]);
    }
    std::vector<GapBounds> out;
    mpfr_t num_lo, num_hi, q, best_lo, best_hi;
    mpfr_init2(num_lo, kGapPrec);
    mpfr_init2(num_hi, kGapPrec);
    mpfr_init2(q, kGapPrec);
    mpfr_init2(best_lo, kGapPrec);
    mpfr_init2(best_hi, kGapPrec);
    for (size_t j = 1; j < n1; ++j) {
        // gap_j = (log x_j - log x_{j-1}) / log x_0, by interval division.
        mpfr_sub(num_lo, lo[j], hi[j - 1], MPFR_RNDD);
        mpfr_sub(num_hi, hi[j], lo[j - 1], MPFR_RNDU);
        if (mpfr_sgn(lo[0]) <= 0) {
            // base not safely above 1: the quotient is unbounded
            out.push_back({-HUGE_VAL, HUGE_VAL});
            continue;
        }
        mpfr_set_inf(best_lo, 1);
        mpfr_set_inf(best_hi, -1);
        const mpfr_srcptr nums[2] = {num_lo, num_hi};
        const mpfr_srcptr dens[2] = {lo[0], hi[0]};
        for (const mpfr_srcptr nn : nums) {
            for (const mpfr_srcptr dd : dens) {
                mpfr_div(q, nn, dd, MPFR_RNDD);
                if (mpfr_cmp(q, best_lo) < 0) mpfr_set(best_lo, q, MPFR_RNDD);
                mpfr_div(q, nn, dd, MPFR_RNDU);
                if (mpfr_cmp(q, best_hi) > 0) mpfr_set(best_hi, q, MPFR_RNDU);
            }
        }
        out.push_back({mpfr_get_d(best_lo, MPFR_RNDD), mpfr_get_d(best_hi, MPFR_RNDU)});
    }
    mpfr_clear(num_lo);
    mpfr_clear(num_hi);
    mpfr_clear(q);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    for (size_t k = 0; k < n1; ++k) {
        mpfr_clear(lo[k]);
        mpfr_clear(hi[k]);
    }
    return out;
}

}  // namespace

DecomposeResult decompose(const RegionPoint& p) {
    if (p.coords.empty()) throw error("point must have at least one coordinate");
    for (const QField& c : p.coords) {
        if (qf_sign(c) <= 0) throw error("coordinates must be positive");
    }
    DecomposeResult out;
    out.x = p.coords[0];
    if (qf_sign(qf_sub(out.x, kOne)) <= 0) {
        out.reason = "base coordinate must exceed 1";
        return out;
    }
    out.gaps = gap_enclosures(p.coords);
    const long n = p.n();
    if (n >= 1) {
        // d_1 <= 1  iff  x_1 <= x_0^2
        if (qf_sign(qf_sub(qf_mul(p.coords[0], p.coords[0]), p.coords[1])) < 0) {
            out.failing_gap = 1;
            out.reason = "first gap exceeds 1";
            return out;
        }
        // d_j >= d_{j+1}  iff  x_j^2 >= x_{j-1} x_{j+1}
        for (long j = 1; j <= n - 1; ++j) {
            const QField& a = p.coords[static_cast<size_t>(j - 1)];
            const QField& b = p.coords[static_cast<size_t>(j)];
            const QField& c = p.coords[static_cast<size_t>(j + 1)];
            if (qf_sign(qf_sub(qf_mul(b, b), qf_mul(a, c))) < 0) {
                out.failing_gap = j + 1;
                out.reason = "gaps increase at position " + std::to_string(j + 1);
                return out;
            }
        }
        // d_n >= 0  iff  x_n >= x_{n-1}
        if (qf_sign(qf_sub(p.coords[static_cast<size_t>(n)],
                           p.coords[static_cast<size_t>(n - 1)])) < 0) {
            out.failing_gap = n;
            out.reason = "last gap is negative";
            return out;
        }
    }
    out.geometric = true;
    return out;
}

}  // namespace logcave
