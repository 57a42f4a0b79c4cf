#pragma once

#include <stdexcept>
#include <string>

namespace vpg {

// Malformed value: a path, graph, or file that breaks a type invariant.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Out-of-range construction parameter (n, k, s, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's precondition.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vpg
