#include "logcave/criteria.hpp"

#include <cstdlib>
#include <string>

#include "logcave/errors.hpp"

namespace logcave {

QuarticCheck quartic_check(const Seq& s, const QField& r) {
    validate_r(r, RPolicy::standard);
    if (auto neg = s.first_negative()) {
        throw not_r_factor_lc_error("input has a negative entry at index " +
                                    std::to_string(*neg));
    }
    LcVerdict lc = is_r_factor_lc(s, r, RPolicy::standard);
    if (!lc.ok) {
        throw not_r_factor_lc_error("input is not r-factor log-concave (fails at index " +
                                    std::to_string(lc.fail_index) + ")");
    }
    QField r2 = qf_mul(r, r);
    QField r5 = qf_mul(qf_mul(r2, r2), r);
    long n = s.size();
    for (long k = 0; k < n; ++k) {
        QField outer = qf_mul(qf_mul(s.at(k - 2), s.at(k - 1)), qf_mul(s.at(k + 1), s.at(k + 2)));
        QField sq = qf_mul(s.at(k), s.at(k));
        QField gap = qf_sub(qf_mul(sq, sq), qf_mul(r5, outer));
        if (qf_sign(gap) < 0) {
            return {false, k};
        }
    }
    return {true, std::nullopt};
}

OrbitScan scan_orbit(const Seq& s, const QField& r_criterion, const QField& step_r,
                     long max_iters) {
    if (max_iters < 0) {
        throw error("max_iters must be nonnegative");
    }
    validate_r(step_r, RPolicy::standard);
    validate_r(r_criterion, RPolicy::standard);
    Seq current = s;
    for (long j = 0;; ++j) {
        std::optional<long> neg = current.first_negative();
        if (neg.has_value()) {
            return {OrbitScan::Outcome::refuted, j, Failing{j, *neg}};
        }
        if (is_r_factor_lc(current, r_criterion, RPolicy::standard).ok) {
            return {OrbitScan::Outcome::reached, j, std::nullopt};
        }
        if (j == max_iters) {
            break;
        }
        current = apply_lr(current, step_r);
    }
    return {OrbitScan::Outcome::not_reached, max_iters, std::nullopt};
}

Certificate certify_infinite(const Seq& s, const QField& r_criterion,
                             const QField& step_r, long max_iters) {
    const bool classic = step_r == QField(Rat(1));
    if (!classic && !(step_r == r_criterion)) {
        throw r_not_supported_error("step factor must be 1 or the criterion factor itself");
    }
    const QField threshold = classic ? r0() : r1();
    if (cross_field_cmp(r_criterion, threshold) < 0) {
        throw threshold_error(
            "criterion factor is below the preservation constant for this step; "
            "the certificate would be unsound");
    }
    OrbitScan scan = scan_orbit(s, r_criterion, step_r, max_iters);
    Certificate cert;
    cert.r_used = r_criterion;
    cert.criterion = classic ? Criterion::r0_classic : Criterion::r1_generalized;
    cert.iterations_applied = scan.iterations;
    cert.failing = scan.failing;
    switch (scan.outcome) {
        case OrbitScan::Outcome::reached:
            cert.verdict = Verdict::certified;
            break;
        case OrbitScan::Outcome::refuted:
            cert.verdict = Verdict::refuted;
            break;
        case OrbitScan::Outcome::not_reached:
            cert.verdict = Verdict::inconclusive;
            break;
    }
    return cert;
}

Certificate symmetric_criterion(const SymSeq& s, const QField& r) {
    if (s.parity != Parity::even) {
        throw parity_error("the center condition is stated for even symmetric sequences only");
    }
    validate_r(r, RPolicy::standard);
    Seq a = materialize(s);
    // materialized even layout: a_0 = 1, a_1..a_m the core, a_m = a_{m+1}
    const long m = s.n() + 1;
    Certificate cert;
    cert.r_used = r1();
    cert.criterion = Criterion::symmetric_lemma;
    cert.iterations_applied = 0;
    const QField interior_factor = r1();
    for (long k = 1; k < m; ++k) {
        QField lhs = qf_mul(a.at(k), a.at(k));
        QField rhs = qf_mul(interior_factor, qf_mul(a.at(k - 1), a.at(k + 1)));
        if (qf_sign(qf_sub(lhs, rhs)) < 0) {
            cert.verdict = Verdict::inconclusive;
            cert.failing = Failing{0, k};
            return cert;
        }
    }
    QField center_gap = qf_sub(a.at(m), qf_mul(qf_add(QField(Rat(1)), r), a.at(m - 1)));
    if (qf_sign(center_gap) < 0) {
        cert.verdict = Verdict::inconclusive;
        cert.failing = Failing{0, m};
        return cert;
    }
    cert.verdict = Verdict::certified;
    return cert;
}

CompareReport compare_criteria(const Seq& s, long max_iters) {
    CompareReport report;
    report.with_r0 = scan_orbit(s, r0(), QField(Rat(1)), max_iters);
    report.with_r1 = scan_orbit(s, r1(), QField(Rat(1)), max_iters);
    return report;
}

long default_max_iters() {
    const char* env = std::getenv("LOGCAVE_MAX_ITERS");
    if (env != nullptr && *env != '\0') {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && value >= 0) {
            return value;
        }
    }
    return 20;
}

}  // namespace logcave
