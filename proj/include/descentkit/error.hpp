#pragma once

#include <stdexcept>
#include <string>

namespace descentkit {

/// Malformed textual input (permutation, tableau, partition, descent list).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An input size exceeded an enumeration guard.
class GuardExceeded : public std::length_error {
public:
    GuardExceeded(const std::string& what, int requested, int limit)
        : std::length_error(what + ": requested " + std::to_string(requested) +
                            ", limit " + std::to_string(limit)),
          requested_(requested),
          limit_(limit) {}

    int requested() const noexcept { return requested_; }
    int limit() const noexcept { return limit_; }

private:
    int requested_;
    int limit_;
};

/// A documented precondition of a statistic was not met.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline void check_guard(const char* what, int requested, int limit) {
    if (requested > limit) throw GuardExceeded(what, requested, limit);
}

}  // namespace descentkit
