#pragma once

#include <stdexcept>
#include <string>

namespace laban {

// Base class for every domain error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct out_of_range_error : error {
    using error::error;
};

struct domain_mismatch_error : error {
    using error::error;
};

struct malformed_cycles_error : error {
    using error::error;
};

struct empty_generators_error : error {
    using error::error;
};

struct unknown_solid_error : error {
    using error::error;
};

struct unknown_direction_error : error {
    using error::error;
};

struct solid_mismatch_error : error {
    using error::error;
};

struct unsupported_solid_error : error {
    using error::error;
};

struct empty_sequence_error : error {
    using error::error;
};

struct unknown_limb_error : error {
    using error::error;
};

struct invalid_scale_error : error {
    using error::error;
};

struct invalid_subgroup_error : error {
    using error::error;
};

// Diagnostic for text input. `line` and `col` are 1-based; `token` is the
// 1-based index of the offending token when the input is a token sequence,
// 0 otherwise. what() always starts with "line:col: ".
struct parse_error : error {
    int line;
    int col;
    int token;

    parse_error(int line_, int col_, const std::string& message, int token_ = 0)
        : error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + message),
          line(line_),
          col(col_),
          token(token_) {}
};

struct mixed_solid_error : parse_error {
    using parse_error::parse_error;
};

}  // namespace laban
