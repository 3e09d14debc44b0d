#pragma once

#include <stdexcept>
#include <string>

namespace qp {

struct QuiverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generating set whose two-sided closure touches a path of length < 2.
struct AdmissibilityError : std::runtime_error {
    explicit AdmissibilityError(const std::string& msg, std::string offender = "")
        : std::runtime_error(msg), offending_element(std::move(offender)) {}
    std::string offending_element;
};

struct NonParallelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroTauError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a computation contradicts an identity the implementation
// relies on (e.g. a transvection image with both bypass predicates false
// but distinct ideals). Indicates a bug, never bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
    int line;
    int col;
};

}  // namespace qp
