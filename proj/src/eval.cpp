#include "yablo/eval.hpp"

#include <string>

#include "yablo/error.hpp"

namespace yablo {

namespace {

struct Evaluator {
    const Digraph& g;
    std::vector<std::pair<const std::string*, int>> env;

    int lookup(const std::string& var) const {
        for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (*it->first == var) return it->second;
        throw EvalError("unbound free variable '" + var + "'");
    }

    int term(const Term& t) const {
        int node = lookup(t.var);
        for (int i = 0; i < t.wraps; ++i) node = g.successor_of(node);
        return node;
    }

    bool run(const Formula& f) {
        switch (f.kind) {
            case FormulaKind::Rel:
                return g.has_edge(term(f.lhs_term), term(f.rhs_term));
            case FormulaKind::Eq:
                return term(f.lhs_term) == term(f.rhs_term);
            case FormulaKind::Not:
                return !run(*f.lhs);
            case FormulaKind::And:
                return run(*f.lhs) && run(*f.rhs);
            case FormulaKind::Or:
                return run(*f.lhs) || run(*f.rhs);
            case FormulaKind::Implies:
                return !run(*f.lhs) || run(*f.rhs);
            case FormulaKind::Iff:
                return run(*f.lhs) == run(*f.rhs);
            case FormulaKind::Forall:
            case FormulaKind::Exists: {
                const bool universal = f.kind == FormulaKind::Forall;
                env.emplace_back(&f.bound, 0);
                for (int v = 0; v < g.node_count(); ++v) {
                    env.back().second = v;
                    if (run(*f.lhs) != universal) {
                        env.pop_back();
                        return !universal;
                    }
                }
                env.pop_back();
                return universal;  // empty range: forall true, exists false
            }
        }
        return false;
    }
};

void check_preconditions(const Digraph& g, const Formula& f, const Env& env) {
    for (const auto& [var, node] : env)
        if (node < 0 || node >= g.node_count())
            throw EvalError("environment binds '" + var + "' to " + std::to_string(node) +
                            ", outside 0.." + std::to_string(g.node_count() - 1));
    for (const auto& var : free_variables(f)) {
        bool found = false;
        for (const auto& [name, node] : env)
            if (name == var) { found = true; break; }
        if (!found) throw EvalError("unbound free variable '" + var + "'");
    }
    if (mentions_s(f) && !g.is_functional()) {
        for (int u = 0; u < g.node_count(); ++u)
            if (g.out_degree(u) != 1)
                throw EvalError("formula mentions s but node " + std::to_string(u) +
                                " has out-degree " + std::to_string(g.out_degree(u)) +
                                " (graph not functional)");
    }
}

}  // namespace

bool eval(const Digraph& g, const Formula& f, const Env& env) {
    check_preconditions(g, f, env);
    Evaluator ev{g, {}};
    ev.env.reserve(env.size() + 8);
    for (const auto& [var, node] : env) ev.env.emplace_back(&var, node);
    return ev.run(f);
}

VertexSet satisfying_set(const Digraph& g, const Formula& f, const std::string& var) {
    VertexSet out(g.node_count());
    Env env{{var, 0}};
    for (int v = 0; v < g.node_count(); ++v) {
        env[0].second = v;
        if (eval(g, f, env)) out.insert(v);
    }
    return out;
}

}  // namespace yablo
