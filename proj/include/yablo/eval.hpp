#pragma once

#include <string>
#include <utility>
#include <vector>

#include "yablo/digraph.hpp"
#include "yablo/formula.hpp"

namespace yablo {

/// Variable bindings, innermost last. Extra bindings are ignored.
using Env = std::vector<std::pair<std::string, int>>;

/// Tarskian satisfaction over a finite digraph: R is the edge relation,
/// quantifiers range over 0..n-1 (so on the empty graph universals hold and
/// existentials fail), and s is the unique out-neighbor, which requires the
/// graph to be functional whenever the formula mentions s. Throws EvalError
/// on an unbound free variable, an out-of-range binding, or an s-term over
/// a non-functional graph.
bool eval(const Digraph& g, const Formula& f, const Env& env = {});
inline bool eval(const Digraph& g, const FormulaPtr& f, const Env& env = {}) {
    return eval(g, *f, env);
}

/// { v : eval(g, f, var -> v) }. f may use other variables only if bound
/// by quantifiers inside f.
VertexSet satisfying_set(const Digraph& g, const Formula& f, const std::string& var);

}  // namespace yablo
