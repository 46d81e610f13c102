#include "yablo/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace yablo {

bool is_kernel(const Digraph& g, const VertexSet& k) {
    if (k.universe_size() != g.node_count())
        throw GraphError("vertex set over " + std::to_string(k.universe_size()) +
                         " nodes checked against a graph with " +
                         std::to_string(g.node_count()));
    for (int u = 0; u < g.node_count(); ++u) {
        if (k.contains(u)) {
            for (int v : g.out(u))
                if (k.contains(v)) return false;  // edge inside K
        } else {
            bool absorbed = false;
            for (int v : g.out(u))
                if (k.contains(v)) { absorbed = true; break; }
            if (!absorbed) return false;
        }
    }
    return true;
}

std::vector<VertexSet> brute_force_kernels(const Digraph& g) {
    const int n = g.node_count();
    if (n > 20)
        throw CapError("subset enumeration capped at 20 nodes (2^n subsets); got n=" +
                       std::to_string(n));
    std::vector<std::uint64_t> out_mask(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.out(u)) out_mask[static_cast<size_t>(u)] |= std::uint64_t{1} << v;

    std::vector<VertexSet> kernels;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            const bool in_k = (mask >> u) & 1;
            const bool hits_k = (out_mask[static_cast<size_t>(u)] & mask) != 0;
            ok = in_k ? !hits_k : hits_k;
        }
        if (ok) kernels.push_back(VertexSet::from_mask(n, mask));
    }
    return kernels;
}

namespace {

enum : signed char { UNK = 0, IN = 1, OUT = 2 };

// Clause model: per node u the absorption clause "u in K, or some
// out-neighbor of u in K" over the literal multiset {u} + out(u); per edge
// (u,v) the independence constraint "not both in K", enforced eagerly when
// either endpoint enters K.
struct Searcher {
    const Digraph& g;
    std::vector<std::vector<int>> rin;
    std::vector<signed char> val;
    std::vector<int> open_lits;   // literal slots of the clause not yet OUT
    std::vector<char> satisfied;  // some literal of the clause is IN
    SolveStats stats;

    enum class ChangeKind : char { Assign, OpenDec, SatSet };
    struct Change {
        ChangeKind kind;
        int node;
    };
    std::vector<Change> trail;
    std::vector<int> queue;

    explicit Searcher(const Digraph& graph)
        : g(graph),
          rin(reverse_adjacency(graph)),
          val(static_cast<size_t>(graph.node_count()), UNK),
          open_lits(static_cast<size_t>(graph.node_count())),
          satisfied(static_cast<size_t>(graph.node_count()), 0) {
        for (int u = 0; u < g.node_count(); ++u)
            open_lits[static_cast<size_t>(u)] = 1 + g.out_degree(u);
    }

    bool assign(int u, signed char v, bool forced) {
        if (val[static_cast<size_t>(u)] != UNK) return val[static_cast<size_t>(u)] == v;
        val[static_cast<size_t>(u)] = v;
        trail.push_back({ChangeKind::Assign, u});
        if (forced) ++stats.propagations;
        queue.push_back(u);
        return true;
    }

    void mark_satisfied(int u) {
        if (!satisfied[static_cast<size_t>(u)]) {
            satisfied[static_cast<size_t>(u)] = 1;
            trail.push_back({ChangeKind::SatSet, u});
        }
    }

    // Clause u lost one open literal slot. False on a wiped-out clause.
    bool shrink_clause(int u) {
        if (satisfied[static_cast<size_t>(u)]) return true;
        trail.push_back({ChangeKind::OpenDec, u});
        if (--open_lits[static_cast<size_t>(u)] > 0) {
            if (open_lits[static_cast<size_t>(u)] == 1) {
                // unit: the single remaining candidate must enter K
                if (val[static_cast<size_t>(u)] == UNK) return assign(u, IN, true);
                for (int v : g.out(u))
                    if (val[static_cast<size_t>(v)] == UNK) return assign(v, IN, true);
                // the open slot is already IN; clause satisfied elsewhere
            }
            return true;
        }
        return false;
    }

    bool propagate() {
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            const signed char v = val[static_cast<size_t>(u)];
            if (v == IN) {
                // u absorbs itself and every in-neighbor
                mark_satisfied(u);
                for (int w : rin[static_cast<size_t>(u)]) mark_satisfied(w);
                // independence: neighbors in either direction leave K
                for (int w : g.out(u)) {
                    if (val[static_cast<size_t>(w)] == IN) return false;  // covers loops
                    if (!assign(w, OUT, true)) return false;
                }
                for (int w : rin[static_cast<size_t>(u)]) {
                    if (val[static_cast<size_t>(w)] == IN) return false;
                    if (!assign(w, OUT, true)) return false;
                }
            } else {
                // u left K: its own clause and each in-neighbor's clause
                // lose the slot for u
                if (!shrink_clause(u)) return false;
                for (int w : rin[static_cast<size_t>(u)])
                    if (!shrink_clause(w)) return false;
            }
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            const Change c = trail.back();
            trail.pop_back();
            switch (c.kind) {
                case ChangeKind::Assign: val[static_cast<size_t>(c.node)] = UNK; break;
                case ChangeKind::OpenDec: ++open_lits[static_cast<size_t>(c.node)]; break;
                case ChangeKind::SatSet: satisfied[static_cast<size_t>(c.node)] = 0; break;
            }
        }
        queue.clear();
    }

    bool initial_units() {
        for (int u = 0; u < g.node_count(); ++u) {
            if (g.has_edge(u, u) && !assign(u, OUT, true)) return false;
            if (g.out_degree(u) == 0 && !assign(u, IN, true)) return false;
        }
        return propagate();
    }

    bool dfs() {
        ++stats.visited;
        int u = -1;
        for (int w = 0; w < g.node_count(); ++w)
            if (val[static_cast<size_t>(w)] == UNK) { u = w; break; }
        if (u < 0) return true;  // every clause satisfied along the way
        for (signed char choice : {IN, OUT}) {
            ++stats.decisions;
            const size_t mark = trail.size();
            if (assign(u, choice, false) && propagate() && dfs()) return true;
            undo_to(mark);
        }
        return false;
    }
};

}  // namespace

SolveResult solve(const Digraph& g) {
    Searcher s(g);
    SolveResult result;
    const bool found = s.initial_units() && s.dfs();
    result.stats = s.stats;
    if (found) {
        VertexSet k(g.node_count());
        for (int u = 0; u < g.node_count(); ++u)
            if (s.val[static_cast<size_t>(u)] == IN) k.insert(u);
        assert(is_kernel(g, k));
        result.kernel = std::move(k);
    }
    return result;
}

namespace {

VertexSet functional_kernel(const Digraph& g) {
    const int n = g.node_count();
    std::vector<signed char> state(static_cast<size_t>(n), 0);  // 0 new, 1 on path, 2 done
    std::vector<char> in_k(static_cast<size_t>(n), 0);
    std::vector<char> assigned(static_cast<size_t>(n), 0);
    std::vector<int> path;

    // peel out the unique cycle reachable from each start node
    for (int start = 0; start < n; ++start) {
        if (state[static_cast<size_t>(start)] != 0) continue;
        path.clear();
        int v = start;
        while (state[static_cast<size_t>(v)] == 0) {
            state[static_cast<size_t>(v)] = 1;
            path.push_back(v);
            v = g.successor_of(v);
        }
        if (state[static_cast<size_t>(v)] == 1) {
            // new cycle: path suffix from v
            size_t pos = 0;
            while (path[pos] != v) ++pos;
            const int len = static_cast<int>(path.size() - pos);
            if (len % 2 == 1) {
                std::ostringstream os;
                os << "odd cycle of length " << len << " through node " << v;
                throw GraphError(os.str());
            }
            // alternate around the cycle, in-kernel first at its smallest node
            int smallest = v;
            for (size_t i = pos; i < path.size(); ++i) smallest = std::min(smallest, path[i]);
            int node = smallest;
            for (int i = 0; i < len; ++i) {
                in_k[static_cast<size_t>(node)] = i % 2 == 0;
                assigned[static_cast<size_t>(node)] = 1;
                node = g.successor_of(node);
            }
        }
        for (int u : path) state[static_cast<size_t>(u)] = 2;
    }

    // tree nodes: membership is forced backwards from the cycles
    std::vector<int> chain;
    for (int start = 0; start < n; ++start) {
        if (assigned[static_cast<size_t>(start)]) continue;
        chain.clear();
        int v = start;
        while (!assigned[static_cast<size_t>(v)]) {
            chain.push_back(v);
            v = g.successor_of(v);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            in_k[static_cast<size_t>(*it)] = !in_k[static_cast<size_t>(g.successor_of(*it))];
            assigned[static_cast<size_t>(*it)] = 1;
        }
    }

    VertexSet k(n);
    for (int u = 0; u < n; ++u)
        if (in_k[static_cast<size_t>(u)]) k.insert(u);
    return k;
}

VertexSet acyclic_kernel(const Digraph& g) {
    const int n = g.node_count();
    std::vector<signed char> state(static_cast<size_t>(n), 0);
    std::vector<char> in_k(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> frames;

    for (int start = 0; start < n; ++start) {
        if (state[static_cast<size_t>(start)] != 0) continue;
        state[static_cast<size_t>(start)] = 1;
        frames.emplace_back(start, 0);
        while (!frames.empty()) {
            const int u = frames.back().first;
            const int ei = frames.back().second;
            auto outs = g.out(u);
            if (ei < static_cast<int>(outs.size())) {
                frames.back().second = ei + 1;
                const int w = outs[static_cast<size_t>(ei)];
                if (state[static_cast<size_t>(w)] == 1) {
                    int bad = -1;
                    for (int x = 0; x < n; ++x)
                        if (g.out_degree(x) != 1) { bad = x; break; }
                    std::ostringstream os;
                    os << "graph is neither functional (node " << bad << " has out-degree "
                       << g.out_degree(bad) << ") nor acyclic (cycle through node " << w << ")";
                    throw GraphError(os.str());
                }
                if (state[static_cast<size_t>(w)] == 0) {
                    state[static_cast<size_t>(w)] = 1;
                    frames.emplace_back(w, 0);
                }
            } else {
                // post-order: all out-neighbors decided
                bool dominated = false;
                for (int w : outs)
                    if (in_k[static_cast<size_t>(w)]) { dominated = true; break; }
                in_k[static_cast<size_t>(u)] = !dominated;
                state[static_cast<size_t>(u)] = 2;
                frames.pop_back();
            }
        }
    }

    VertexSet k(n);
    for (int u = 0; u < n; ++u)
        if (in_k[static_cast<size_t>(u)]) k.insert(u);
    return k;
}

}  // namespace

VertexSet kernel_for_odd_cycle_free(const Digraph& g) {
    if (g.is_functional()) return functional_kernel(g);
    return acyclic_kernel(g);
}

}  // namespace yablo
