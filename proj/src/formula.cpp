#include "yablo/formula.hpp"

#include <cassert>
#include <utility>
#include <vector>

namespace yablo {

namespace {

FormulaPtr node(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

FormulaPtr binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
    Formula f;
    f.kind = k;
    f.lhs = std::move(a);
    f.rhs = std::move(b);
    return node(std::move(f));
}

FormulaPtr quantifier(FormulaKind k, std::string var, FormulaPtr body) {
    Formula f;
    f.kind = k;
    f.bound = std::move(var);
    f.lhs = std::move(body);
    return node(std::move(f));
}

}  // namespace

FormulaPtr rel(Term a, Term b) {
    Formula f;
    f.kind = FormulaKind::Rel;
    f.lhs_term = std::move(a);
    f.rhs_term = std::move(b);
    return node(std::move(f));
}

FormulaPtr eq(Term a, Term b) {
    Formula f;
    f.kind = FormulaKind::Eq;
    f.lhs_term = std::move(a);
    f.rhs_term = std::move(b);
    return node(std::move(f));
}

FormulaPtr neg(FormulaPtr f) {
    Formula g;
    g.kind = FormulaKind::Not;
    g.lhs = std::move(f);
    return node(std::move(g));
}

FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Implies, std::move(a), std::move(b)); }
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Iff, std::move(a), std::move(b)); }
FormulaPtr forall(std::string var, FormulaPtr body) {
    return quantifier(FormulaKind::Forall, std::move(var), std::move(body));
}
FormulaPtr exists(std::string var, FormulaPtr body) {
    return quantifier(FormulaKind::Exists, std::move(var), std::move(body));
}

bool equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case FormulaKind::Rel:
        case FormulaKind::Eq:
            return a.lhs_term == b.lhs_term && a.rhs_term == b.rhs_term;
        case FormulaKind::Not:
            return equal(*a.lhs, *b.lhs);
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
        case FormulaKind::Iff:
            return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            return a.bound == b.bound && equal(*a.lhs, *b.lhs);
    }
    return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) { return equal(*a, *b); }

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
    switch (f.kind) {
        case FormulaKind::Rel:
        case FormulaKind::Eq:
            for (const Term* t : {&f.lhs_term, &f.rhs_term}) {
                bool is_bound = false;
                for (const auto& b : bound)
                    if (b == t->var) { is_bound = true; break; }
                if (!is_bound) out.insert(t->var);
            }
            return;
        case FormulaKind::Not:
            collect_free(*f.lhs, bound, out);
            return;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
        case FormulaKind::Iff:
            collect_free(*f.lhs, bound, out);
            collect_free(*f.rhs, bound, out);
            return;
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            bound.push_back(f.bound);
            collect_free(*f.lhs, bound, out);
            bound.pop_back();
            return;
    }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
    switch (f.kind) {
        case FormulaKind::Rel:
        case FormulaKind::Eq:
            out.insert(f.lhs_term.var);
            out.insert(f.rhs_term.var);
            return;
        case FormulaKind::Not:
            collect_all(*f.lhs, out);
            return;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
        case FormulaKind::Iff:
            collect_all(*f.lhs, out);
            collect_all(*f.rhs, out);
            return;
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            out.insert(f.bound);
            collect_all(*f.lhs, out);
            return;
    }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    std::vector<std::string> bound;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> all_variables(const Formula& f) {
    std::set<std::string> out;
    collect_all(f, out);
    return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

bool mentions_s(const Formula& f) {
    switch (f.kind) {
        case FormulaKind::Rel:
        case FormulaKind::Eq:
            return f.lhs_term.wraps > 0 || f.rhs_term.wraps > 0;
        case FormulaKind::Not:
            return mentions_s(*f.lhs);
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
        case FormulaKind::Iff:
            return mentions_s(*f.lhs) || mentions_s(*f.rhs);
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            return mentions_s(*f.lhs);
    }
    return false;
}

FormulaPtr rename_free(const FormulaPtr& f, const std::string& from, const std::string& to) {
    auto sub_term = [&](const Term& t) {
        return t.var == from ? Term{to, t.wraps} : t;
    };
    switch (f->kind) {
        case FormulaKind::Rel:
            return rel(sub_term(f->lhs_term), sub_term(f->rhs_term));
        case FormulaKind::Eq:
            return eq(sub_term(f->lhs_term), sub_term(f->rhs_term));
        case FormulaKind::Not:
            return neg(rename_free(f->lhs, from, to));
        case FormulaKind::And:
            return conj(rename_free(f->lhs, from, to), rename_free(f->rhs, from, to));
        case FormulaKind::Or:
            return disj(rename_free(f->lhs, from, to), rename_free(f->rhs, from, to));
        case FormulaKind::Implies:
            return implies(rename_free(f->lhs, from, to), rename_free(f->rhs, from, to));
        case FormulaKind::Iff:
            return iff(rename_free(f->lhs, from, to), rename_free(f->rhs, from, to));
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            assert(f->bound != to && "substitution target would be captured");
            if (f->bound == from) return f;  // occurrences below are bound
            FormulaPtr body = rename_free(f->lhs, from, to);
            return f->kind == FormulaKind::Forall ? forall(f->bound, std::move(body))
                                                  : exists(f->bound, std::move(body));
        }
    }
    return f;
}

namespace {

// Precedence: <-> 1 (left), -> 2 (right), | 3 (left), & 4 (left), ~ 5,
// atoms 6. A quantifier binds loosest and its body extends maximally right,
// so it prints bare only where nothing follows it inside the enclosing
// parentheses; its body gets parentheses unless it is an atom or another
// quantifier.
std::string term_text(const Term& t) {
    std::string out;
    for (int i = 0; i < t.wraps; ++i) out += "s(";
    out += t.var;
    for (int i = 0; i < t.wraps; ++i) out += ")";
    return out;
}

struct OpInfo {
    int prec;
    bool right_assoc;
    const char* text;
};

OpInfo op_info(FormulaKind k) {
    switch (k) {
        case FormulaKind::Iff: return {1, false, "<->"};
        case FormulaKind::Implies: return {2, true, "->"};
        case FormulaKind::Or: return {3, false, "|"};
        case FormulaKind::And: return {4, false, "&"};
        default: return {0, false, ""};
    }
}

bool is_atom(const Formula& f) {
    return f.kind == FormulaKind::Rel || f.kind == FormulaKind::Eq;
}

bool is_quant(const Formula& f) {
    return f.kind == FormulaKind::Forall || f.kind == FormulaKind::Exists;
}

std::string render(const Formula& f, int min_prec, bool right_edge) {
    switch (f.kind) {
        case FormulaKind::Rel:
            return "R(" + term_text(f.lhs_term) + "," + term_text(f.rhs_term) + ")";
        case FormulaKind::Eq:
            return term_text(f.lhs_term) + " = " + term_text(f.rhs_term);
        case FormulaKind::Not:
            return "~" + render(*f.lhs, 5, right_edge);
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            std::string kw = f.kind == FormulaKind::Forall ? "forall " : "exists ";
            std::string body = is_atom(*f.lhs) || is_quant(*f.lhs)
                                   ? render(*f.lhs, 0, true)
                                   : "(" + render(*f.lhs, 0, true) + ")";
            std::string out = kw + f.bound + ". " + body;
            return right_edge ? out : "(" + out + ")";
        }
        default: {
            OpInfo op = op_info(f.kind);
            bool paren = op.prec < min_prec;
            int lmin = op.right_assoc ? op.prec + 1 : op.prec;
            int rmin = op.right_assoc ? op.prec : op.prec + 1;
            std::string out = render(*f.lhs, lmin, false) + " " + op.text + " " +
                              render(*f.rhs, rmin, paren ? true : right_edge);
            return paren ? "(" + out + ")" : out;
        }
    }
}

}  // namespace

std::string unparse(const Formula& f) { return render(f, 0, true); }
std::string unparse(const FormulaPtr& f) { return render(*f, 0, true); }

}  // namespace yablo
