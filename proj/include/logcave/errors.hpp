#pragma once
// Error hierarchy for the logcave library.  Every domain failure derives from
// logcave::error so callers can catch one type; the concrete classes mirror
// the distinct failure modes of the operations that raise them.

#include <stdexcept>
#include <string>

namespace logcave {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic on values from two different quadratic extensions.
struct mixed_field_error : error {
    using error::error;
};

// r outside the supported range for an operator application (r <= 0 always;
// 0 < r < 1 unless the caller opts in).
struct r_not_supported_error : error {
    using error::error;
};

// An operation that needs a rational r received an irrational one.
struct r_not_rational_error : error {
    using error::error;
};

// A certification criterion was invoked below its validity threshold.
struct threshold_error : error {
    using error::error;
};

// The symmetric-sequence criterion only covers even-length sequences.
struct parity_error : error {
    using error::error;
};

// A precondition demanded an r-factor log-concave sequence and got none.
struct not_r_factor_lc_error : error {
    using error::error;
};

// Hypersurface gap list malformed (count, range, or monotonicity).
struct invalid_gaps_error : error {
    using error::error;
};

// closure iteration asked for a point that is not a region member.
struct not_in_region_error : error {
    using error::error;
};

// Witness constant C outside the scheme's validity range.
struct invalid_c_error : error {
    using error::error;
};

// Witness scale factor a not strictly above its lower bound.
struct invalid_a_error : error {
    using error::error;
};

// An exact value does not live in a single quadratic extension.
struct not_representable_error : error {
    using error::error;
};

// Malformed number or sequence text.
struct parse_error : error {
    using error::error;
};

}  // namespace logcave
