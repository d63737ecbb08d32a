#pragma once

#include <stdexcept>
#include <string>

namespace symgraph {

// Bad arguments from the caller: empty weight sets, basis mismatches,
// out-of-range coefficients.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computed value that cannot be right, e.g. a graph count that came out
// fractional or negative. Always indicates a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace symgraph
