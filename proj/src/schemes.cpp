#include "yablo/schemes.hpp"

#include <string>
#include <vector>

#include "yablo/error.hpp"

namespace yablo {

namespace {

// theta(k) instantiated at variable x, with bound names y<d>, z<d> indexed
// by recursion depth so nesting can never capture.
FormulaPtr theta_rec(int k, const std::string& x, int depth) {
    const std::string y = "y" + std::to_string(depth);
    const std::string z = "z" + std::to_string(depth);
    FormulaPtr tail = k == 0 ? rel(mkvar(x), mkvar(z)) : theta_rec(k - 1, z, depth + 1);
    return exists(y, conj(rel(mkvar(x), mkvar(y)),
                          forall(z, implies(rel(mkvar(y), mkvar(z)), std::move(tail)))));
}

}  // namespace

FormulaPtr theta(int n) {
    if (n < 0) throw Error("theta level must be non-negative, got " + std::to_string(n));
    return theta_rec(n, "x", 0);
}

VertexSet theta_set(const Digraph& g, int n) {
    if (n < 0) throw Error("theta level must be non-negative, got " + std::to_string(n));
    const int nodes = g.node_count();
    // level 0: v has an out-neighbor whose out-neighborhood v dominates
    std::vector<char> cur(static_cast<size_t>(nodes), 0);
    for (int v = 0; v < nodes; ++v) {
        for (int y : g.out(v)) {
            bool all = true;
            for (int z : g.out(y))
                if (!g.has_edge(v, z)) { all = false; break; }
            if (all) { cur[static_cast<size_t>(v)] = 1; break; }
        }
    }
    // level k+1 from level k: v has an out-neighbor all of whose
    // out-neighbors already satisfy level k
    std::vector<char> next(static_cast<size_t>(nodes), 0);
    for (int step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int v = 0; v < nodes; ++v) {
            for (int y : g.out(v)) {
                bool all = true;
                for (int z : g.out(y))
                    if (!cur[static_cast<size_t>(z)]) { all = false; break; }
                if (all) { next[static_cast<size_t>(v)] = 1; break; }
            }
        }
        std::swap(cur, next);
    }
    VertexSet out(nodes);
    for (int v = 0; v < nodes; ++v)
        if (cur[static_cast<size_t>(v)]) out.insert(v);
    return out;
}

FormulaPtr axiom(AxiomName name) {
    switch (name) {
        case AxiomName::A1:
            return forall("x", exists("y", rel(mkvar("x"), mkvar("y"))));
        case AxiomName::A2:
            return forall("x", forall("y", forall("z",
                implies(conj(rel(mkvar("x"), mkvar("y")), rel(mkvar("y"), mkvar("z"))),
                        rel(mkvar("x"), mkvar("z"))))));
        case AxiomName::A:
            return forall("x", exists("y",
                conj(rel(mkvar("x"), mkvar("y")),
                     forall("z", implies(rel(mkvar("y"), mkvar("z")),
                                         rel(mkvar("x"), mkvar("z")))))));
        case AxiomName::S:
            return forall("x", forall("y", implies(eq(s_power("x", 1), s_power("y", 1)),
                                                   eq(mkvar("x"), mkvar("y")))));
    }
    throw Error("unknown axiom");
}

FormulaPtr axiom_no_odd_cycle(int k) {
    if (k < 0) throw Error("no_odd_cycle index must be non-negative, got " + std::to_string(k));
    return neg(exists("x", eq(s_power("x", 2 * k + 1), mkvar("x"))));
}

FormulaPtr axiom(const std::string& name) {
    if (name == "A1") return axiom(AxiomName::A1);
    if (name == "A2") return axiom(AxiomName::A2);
    if (name == "A") return axiom(AxiomName::A);
    if (name == "S") return axiom(AxiomName::S);
    const std::string prefix = "no_odd_cycle(";
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() && name.back() == ')') {
        const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return axiom_no_odd_cycle(std::stoi(digits));
    }
    throw Error("unknown axiom '" + name + "' (try A1, A2, A, S, or no_odd_cycle(<k>))");
}

FormulaPtr yablo_instance(const FormulaPtr& phi) {
    auto fv = free_variables(*phi);
    if (fv.size() != 1)
        throw Error("scheme instance needs a formula with exactly one free variable, got " +
                    std::to_string(fv.size()));
    const std::string x = *fv.begin();
    auto used = all_variables(*phi);
    std::string y = "y";
    for (int i = 0; used.count(y) || y == x; ++i) y = "y" + std::to_string(i);
    FormulaPtr phi_at_y = rename_free(phi, x, y);
    return neg(forall(x, iff(phi, forall(y, implies(rel(mkvar(x), mkvar(y)),
                                                    neg(std::move(phi_at_y)))))));
}

FormulaPtr translate_to_successor(const FormulaPtr& f) {
    if (mentions_s(*f))
        throw Error("formula already mentions s; refusing a second translation");
    struct Rewriter {
        FormulaPtr run(const FormulaPtr& f) {
            switch (f->kind) {
                case FormulaKind::Rel:
                    return eq(s_apply(f->lhs_term), f->rhs_term);
                case FormulaKind::Eq:
                    return f;
                case FormulaKind::Not:
                    return neg(run(f->lhs));
                case FormulaKind::And:
                    return conj(run(f->lhs), run(f->rhs));
                case FormulaKind::Or:
                    return disj(run(f->lhs), run(f->rhs));
                case FormulaKind::Implies:
                    return implies(run(f->lhs), run(f->rhs));
                case FormulaKind::Iff:
                    return iff(run(f->lhs), run(f->rhs));
                case FormulaKind::Forall:
                    return forall(f->bound, run(f->lhs));
                case FormulaKind::Exists:
                    return exists(f->bound, run(f->lhs));
            }
            return f;
        }
    };
    return Rewriter{}.run(f);
}

bool russell_validity_check(int max_n) {
    if (max_n > 4) throw CapError("validity sweep capped at 4 nodes, got " + std::to_string(max_n));
    // ~exists y forall x (R(y,x) <-> ~R(x,x)): the Russell/Barber validity
    FormulaPtr sentence = neg(exists("y", forall("x",
        iff(rel(mkvar("y"), mkvar("x")), neg(rel(mkvar("x"), mkvar("x")))))));
    for (int n = 1; n <= max_n; ++n)
        for (const Digraph& g : all_digraphs(n))
            if (!eval(g, *sentence)) return false;
    return true;
}

}  // namespace yablo
