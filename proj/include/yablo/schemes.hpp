#pragma once

#include <string>

#include "yablo/digraph.hpp"
#include "yablo/eval.hpp"
#include "yablo/formula.hpp"

namespace yablo {

/// theta(0) = exists y0 (R(x,y0) & forall z0 (R(y0,z0) -> R(x,z0))),
/// theta(n+1) = exists y (R(x,y) & forall z (R(y,z) -> theta(n) at z)).
/// Free variable is exactly x; bound names y<d>, z<d> are indexed by
/// recursion depth, so no capture is possible.
FormulaPtr theta(int n);

/// { v : theta(n) holds at v }, computed iteratively level by level in
/// O(n * V * E) instead of by the naive recursive evaluation.
VertexSet theta_set(const Digraph& g, int n);

enum class AxiomName { A1, A2, A, S };

/// A1: totality of R.  A2: transitivity.  A: every node has an out-neighbor
/// whose out-neighborhood it dominates.  S: injectivity of s.
FormulaPtr axiom(AxiomName name);

/// ~exists x (s^(2k+1)(x) = x): no odd cycle of length dividing 2k+1.
FormulaPtr axiom_no_odd_cycle(int k);

/// CLI-facing lookup: "A1", "A2", "A", "S", or "no_odd_cycle(<k>)".
FormulaPtr axiom(const std::string& name);

/// The kernel-sentence scheme instantiated at phi (one free variable):
/// ~forall x (phi(x) <-> forall y (R(x,y) -> ~phi(y))). True on g exactly
/// when the phi-definable set is not a kernel of g.
FormulaPtr yablo_instance(const FormulaPtr& phi);

/// Rewrite every atom R(t1,t2) into s(t1) = t2. Refuses input that already
/// mentions s (double translation).
FormulaPtr translate_to_successor(const FormulaPtr& f);

/// Checks the validity ~exists y forall x (R(y,x) <-> ~R(x,x)) over every
/// digraph with 1..max_n nodes (max_n <= 4). Returns true; false would mean
/// an evaluator bug, since the sentence is a first-order validity.
bool russell_validity_check(int max_n);

}  // namespace yablo
