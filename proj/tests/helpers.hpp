#pragma once

// Shared test utilities: seeded random ASTs, random graphs with one free
// variable, and hand-rolled graph builders kept independent of the library
// paths they are used to check.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "yablo/digraph.hpp"
#include "yablo/formula.hpp"

namespace test_util {

class AstGen {
public:
    AstGen(std::uint64_t seed, bool allow_s) : rng_(seed), allow_s_(allow_s) {}

    yablo::FormulaPtr gen(int max_depth) {
        if (max_depth <= 0) return atom();
        switch (rng_() % 9) {
            case 0:
            case 1: return atom();
            case 2: return yablo::neg(gen(max_depth - 1));
            case 3: return yablo::conj(gen(max_depth - 1), gen(max_depth - 1));
            case 4: return yablo::disj(gen(max_depth - 1), gen(max_depth - 1));
            case 5: return yablo::implies(gen(max_depth - 1), gen(max_depth - 1));
            case 6: return yablo::iff(gen(max_depth - 1), gen(max_depth - 1));
            case 7: return yablo::forall(var_name(), gen(max_depth - 1));
            default: return yablo::exists(var_name(), gen(max_depth - 1));
        }
    }

    // loops until the generated formula has exactly {x} free
    yablo::FormulaPtr gen_phi_over_x(int max_depth) {
        for (int tries = 0; tries < 100000; ++tries) {
            yablo::FormulaPtr f = gen(max_depth);
            auto fv = yablo::free_variables(*f);
            if (fv.size() == 1 && *fv.begin() == "x") return f;
        }
        throw std::runtime_error("phi generation failed to converge");
    }

private:
    yablo::Term term() {
        const int wraps = allow_s_ ? static_cast<int>(rng_() % 3) : 0;
        return yablo::Term{var_name(), wraps};
    }

    yablo::FormulaPtr atom() {
        if (rng_() % (allow_s_ ? 2 : 4) == 0) return yablo::eq(term(), term());
        return yablo::rel(term(), term());
    }

    std::string var_name() {
        static const char* pool[] = {"x", "x", "x", "y", "z", "w", "u1"};
        return pool[rng_() % (sizeof(pool) / sizeof(pool[0]))];
    }

    std::mt19937_64 rng_;
    bool allow_s_;
};

// disjoint union of directed cycles, built directly from the lengths
inline yablo::Digraph cycle_union(const std::vector<int>& lengths) {
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (int len : lengths) {
        for (int i = 0; i < len; ++i) edges.emplace_back(offset + i, offset + (i + 1) % len);
        offset += len;
    }
    return yablo::Digraph::build(offset, edges);
}

// every multiset of positive integers with the given total budget or less
template <typename Visitor>
void for_each_multiset(int budget, Visitor&& visit) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        visit(static_cast<const std::vector<int>&>(cur));
        for (int part = min_part; part <= remaining; ++part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, budget, 1);
}

// random DAG: keep only forward edges u < v of a random digraph
inline yablo::Digraph random_dag(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) edges.emplace_back(u, v);
        }
    return yablo::Digraph::build(n, edges);
}

// random functional graph: every node picks one successor
inline yablo::Digraph random_functional(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, static_cast<int>(rng() % n));
    return yablo::Digraph::build(n, edges);
}

}  // namespace test_util
