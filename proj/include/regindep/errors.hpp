#pragma once

#include <stdexcept>
#include <string>

namespace regindep {

/// Input text could not be parsed as a graph.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap (oracle class size, enumeration order, shape
/// predicate order) was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace regindep
