#pragma once

#include <optional>

#include "logcave/seq.hpp"

namespace logcave {

enum class Verdict { certified, refuted, inconclusive };

enum class Criterion { r0_classic, r1_generalized, symmetric_lemma };

// Location of a decisive failure: which iterate, and which position in it.
struct Failing {
    long iteration = 0;
    long index = 0;
    friend bool operator==(const Failing&, const Failing&) = default;
};

struct Certificate {
    Verdict verdict = Verdict::inconclusive;
    QField r_used;
    long iterations_applied = 0;
    Criterion criterion = Criterion::r0_classic;
    std::optional<Failing> failing;
};

struct QuarticCheck {
    bool holds = true;
    std::optional<long> fails_at;
};

// Evaluates r^5 * a_{k-2} a_{k-1} a_{k+1} a_{k+2} <= a_k^4 at every position.
// Requires s nonnegative and r-factor log-concave (throws not_r_factor_lc_error
// otherwise); a failure then refutes the hypothesis that one operator step of s
// is again r-factor log-concave.
QuarticCheck quartic_check(const Seq& s, const QField& r);

// One orbit scan with no soundness gate on the criterion factor: apply the step
// operator up to max_iters times, looking for the first iterate that is
// r_criterion-factor log-concave.  `reached` reports how many applications were
// needed; a negative entry in any iterate reports `refuted` with its location.
struct OrbitScan {
    enum class Outcome { reached, refuted, not_reached };
    Outcome outcome = Outcome::not_reached;
    long iterations = 0;
    std::optional<Failing> failing;
};

OrbitScan scan_orbit(const Seq& s, const QField& r_criterion, const QField& step_r,
                     long max_iters);

// Threshold-gated certification.  step_r must be 1 (classic step) or equal to
// r_criterion (generalized step); r_criterion must be at least the reference
// constant for that step — (3+sqrt(5))/2 for the classic step, 1+sqrt(2) for
// the generalized one — or threshold_error is thrown.  The criterion is tested
// before the first application and after each of up to max_iters applications.
// For the classic step every allowed factor c satisfies (c-1)^2 >= c, so a
// certified iterate stays factor-c log-concave under all further classic
// steps: classic certification implies infinite log-concavity.
Certificate certify_infinite(const Seq& s, const QField& r_criterion,
                             const QField& step_r, long max_iters);

// Center-condition criterion for even symmetric sequences: with the
// materialized sequence a_0..a_{2m+1}, checks a_k^2 >= (1+sqrt(2)) a_{k-1} a_{k+1}
// for k < m and a_m >= (1+r) a_{m-1}.  Odd parity raises parity_error; r must
// be at least 1.
Certificate symmetric_criterion(const SymSeq& s, const QField& r);

// Classic-step scans under both reference constants, for iteration-count
// comparison.  The smaller constant can only certify earlier or at the same
// iterate.
struct CompareReport {
    OrbitScan with_r0;
    OrbitScan with_r1;
};

CompareReport compare_criteria(const Seq& s, long max_iters);

// Default bound on operator applications; the LOGCAVE_MAX_ITERS environment
// variable overrides it.
long default_max_iters();

}  // namespace logcave
