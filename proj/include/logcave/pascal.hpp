#pragma once

// Batch verification of binomial rows under the step-map criteria.
//
// A row of binomial coefficients is fed to the orbit machinery in up to three
// ways, selected by RowMode:
//
//   - classic:     threshold-gated certification with the (3 + sqrt 5)/2
//                  criterion on the classic step.  This is the sound
//                  infinite-log-concavity certificate for the row.
//   - comparative: ungated scan with the smaller 1 + sqrt 2 constant on the
//                  same classic orbit.  It reports how much earlier the
//                  smaller constant is reached and carries no soundness
//                  claim of its own; it exists for criterion comparison.
//   - generalized: certification with 1 + sqrt 2 where each step uses that
//                  same factor.  A single generalized step sends every row
//                  past 3 negative, so this component reports refuted there;
//                  that is a recorded outcome, not an error.
//
// verify_range runs a contiguous block of rows, possibly concurrently, and
// always returns reports ordered by row index together with summary
// statistics.  Inconclusive is a valid verdict throughout: a row that fails
// to certify within the iteration budget is reported, never thrown.

#include <optional>
#include <vector>

#include "logcave/criteria.hpp"
#include "logcave/seq.hpp"

namespace logcave {

// Exact binomial coefficients (n choose 0) .. (n choose n).
Seq binomial_row(long n);

enum class RowMode { r0, r1, both };

struct RowReport {
    long n = 0;
    std::optional<Certificate> classic;      // RowMode::r0 and RowMode::both
    std::optional<OrbitScan> comparative;    // RowMode::r1 and RowMode::both
    std::optional<Certificate> generalized;  // RowMode::r1 and RowMode::both
    double wall_ms = 0.0;
};

RowReport verify_row(long n, RowMode mode, long max_iters);

struct RangeReport {
    std::vector<RowReport> rows;  // ordered by n, one entry per row in [lo, hi]
    long max_iterations = 0;      // largest iteration count any component used
    double total_ms = 0.0;        // wall time for the whole batch
};

// Verifies every row in [lo, hi].  Rows are processed concurrently when the
// hardware allows it (LOGCAVE_THREADS overrides the detected core count);
// the result ordering and content are independent of the scheduling.
RangeReport verify_range(long lo, long hi, RowMode mode, long max_iters);

}  // namespace logcave
