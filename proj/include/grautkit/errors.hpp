#pragma once

#include <stdexcept>
#include <string>

namespace grautkit {

/// Violated precondition or malformed input. Maps to CLI exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A well-posed operation whose mathematical answer is "no": the input is
/// outside the operation's domain. Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    enum class Kind {
        NotAutomorphism,
        NotLiftable,
        NotSplittable,
        NotGraded,
        UnsupportedGrading,
    };

    DomainError(Kind kind, const std::string& message, std::string stage = {})
        : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

    Kind kind() const { return kind_; }

    /// Pipeline stage that failed, for diagnostics. May be empty.
    const std::string& stage() const { return stage_; }

private:
    Kind kind_;
    std::string stage_;
};

/// Broken internal invariant. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace grautkit
