#pragma once

#include <memory>
#include <set>
#include <string>

namespace yablo {

/// A term of the language {R, s, =} is always s^k(v) for a variable v, so
/// the iterated application is stored flat instead of as a chain of nodes.
struct Term {
    std::string var;
    int wraps = 0;  // number of s-applications around the variable

    friend bool operator==(const Term&, const Term&) = default;
};

inline Term mkvar(std::string name) { return Term{std::move(name), 0}; }
inline Term s_apply(Term t) { ++t.wraps; return t; }
inline Term s_power(std::string name, int k) { return Term{std::move(name), k}; }

enum class FormulaKind { Rel, Eq, Not, And, Or, Implies, Iff, Forall, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable first-order formula node. Subtrees are shared freely; use
/// equal() for structural comparison.
struct Formula {
    FormulaKind kind;
    Term lhs_term, rhs_term;  // Rel, Eq
    FormulaPtr lhs, rhs;      // connectives; Not uses lhs only
    std::string bound;        // Forall, Exists
};

FormulaPtr rel(Term a, Term b);
FormulaPtr eq(Term a, Term b);
FormulaPtr neg(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);

bool equal(const Formula& a, const Formula& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> free_variables(const Formula& f);
/// Every variable name occurring in f, free or bound (for fresh-name picks).
std::set<std::string> all_variables(const Formula& f);
bool is_sentence(const Formula& f);
bool mentions_s(const Formula& f);

/// Substitute variable `to` for every free occurrence of `from`. `to` must
/// not occur bound in f, otherwise it would be captured.
FormulaPtr rename_free(const FormulaPtr& f, const std::string& from,
                       const std::string& to);

/// Text form that parse_formula() maps back to a structurally equal AST.
std::string unparse(const Formula& f);
std::string unparse(const FormulaPtr& f);

}  // namespace yablo
