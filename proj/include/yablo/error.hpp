#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace yablo {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Graph construction or edge-list I/O problem (bad index, malformed file).
struct GraphError : Error {
    using Error::Error;
};

/// A hard resource cap was exceeded (exhaustive enumeration, subset search,
/// verification sweep sizes).
struct CapError : Error {
    using Error::Error;
};

/// Formula text that does not conform to the grammar. Carries the position
/// (1-based) and the set of tokens that would have been accepted there.
struct ParseError : Error {
    ParseError(int line, int col, const std::string& what,
               std::vector<std::string> expected);

    int line;
    int col;
    std::vector<std::string> expected;
};

/// Evaluation failure: unbound free variable, out-of-range binding, or an
/// s-term on a graph that is not functional.
struct EvalError : Error {
    using Error::Error;
};

/// Successor-structure violation: non-functional or non-injective graph,
/// or an attempt to realize a structure with infinite chains.
struct StructureError : Error {
    using Error::Error;
};

}  // namespace yablo
