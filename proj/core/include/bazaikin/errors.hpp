#pragma once

#include <stdexcept>
#include <string>

namespace bazaikin {

/// A 5- or 6-tuple violates its shape requirements (even entry, wrong arity, ...).
struct InvalidTuple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Symmetric-polynomial degree outside 1..6.
struct InvalidDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// mod_inverse called with gcd(a, m) != 1.
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

/// A matrix failed a group-membership requirement.
struct NotInGroup : std::domain_error {
    using std::domain_error::domain_error;
};

/// A numeric routine received an out-of-contract argument.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency condition failed; indicates a bug upstream,
/// not bad user input.
struct InternalInvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// A verification batch hit a sample that falsifies one of its assertions.
/// The message carries the serialized offending matrix.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed catalog input; line is 1-based, 0 when not line-oriented.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line_no)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                                         : what),
          line(line_no) {}
    std::size_t line;
};

}  // namespace bazaikin
