#include "yablo/digraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace yablo {

Digraph Digraph::build(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw GraphError("node count must be non-negative, got " + std::to_string(n));
    Digraph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") out of range for " << n << " nodes";
            throw GraphError(os.str());
        }
        g.adj_[static_cast<size_t>(u)].push_back(v);
    }
    g.m_ = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.m_ += static_cast<int>(list.size());
    }
    return g;
}

Digraph Digraph::build(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Digraph::has_edge(int u, int v) const {
    const auto& list = adj_[static_cast<size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

bool Digraph::is_functional() const {
    for (const auto& list : adj_)
        if (list.size() != 1) return false;
    return true;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)]) out.emplace_back(u, v);
    return out;
}

VertexSet::VertexSet(int universe) {
    if (universe < 0)
        throw GraphError("universe size must be non-negative, got " + std::to_string(universe));
    in_.assign(static_cast<size_t>(universe), 0);
}

VertexSet VertexSet::of(int universe, std::span<const int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
    return of(universe, std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
    if (universe > 63) throw GraphError("bitmask construction supports at most 63 nodes");
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v)
        if (mask >> v & 1) s.insert(v);
    return s;
}

bool VertexSet::contains(int v) const {
    return v >= 0 && v < universe_size() && in_[static_cast<size_t>(v)];
}

void VertexSet::insert(int v) {
    if (v < 0 || v >= universe_size())
        throw GraphError("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_size()));
    if (!in_[static_cast<size_t>(v)]) {
        in_[static_cast<size_t>(v)] = 1;
        ++size_;
    }
}

void VertexSet::erase(int v) {
    if (v < 0 || v >= universe_size())
        throw GraphError("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_size()));
    if (in_[static_cast<size_t>(v)]) {
        in_[static_cast<size_t>(v)] = 0;
        --size_;
    }
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size_));
    for (int v = 0; v < universe_size(); ++v)
        if (in_[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::string format_vertex_set(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.members()) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(v);
    }
    out += "}";
    return out;
}

std::uint64_t digraph_count(int n) {
    if (n < 0 || n > 7) throw CapError("digraph_count supports 0..7 nodes, got " + std::to_string(n));
    return std::uint64_t{1} << (n * n);
}

Digraph digraph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (mask >> (u * n + v) & 1) edges.emplace_back(u, v);
    return Digraph::build(n, edges);
}

AllDigraphs::AllDigraphs(int n) : n_(n) {
    if (n < 0) throw GraphError("node count must be non-negative, got " + std::to_string(n));
    if (n > 4)
        throw CapError("exhaustive enumeration capped at 4 nodes (2^(n^2) graphs); got n=" +
                       std::to_string(n));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw GraphError("node count must be non-negative, got " + std::to_string(n));
    if (!(p >= 0.0 && p <= 1.0))
        throw GraphError("edge probability " + std::to_string(p) + " outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            // top 53 bits -> uniform double in [0,1); avoids distribution
            // objects so the stream is identical across standard libraries
            double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) edges.emplace_back(u, v);
        }
    }
    return Digraph::build(n, edges);
}

Digraph witness_chain(int k) {
    if (k < 0) throw GraphError("witness_chain index must be non-negative, got " + std::to_string(k));
    const int n = 2 * k + 1;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, n - 1);
    return Digraph::build(n, edges);
}

bool has_odd_closed_walk(const Digraph& g) {
    const int n = g.node_count();
    if (n == 0) return false;
    const int pn = 2 * n;  // product node 2u+b; edges flip the parity bit

    std::vector<int> index(static_cast<size_t>(pn), -1);
    std::vector<int> low(static_cast<size_t>(pn), 0);
    std::vector<int> comp(static_cast<size_t>(pn), -1);
    std::vector<char> on_stack(static_cast<size_t>(pn), 0);
    std::vector<int> stack;
    std::vector<std::pair<int, int>> frames;  // (product node, next edge slot)
    int next_index = 0, next_comp = 0;

    for (int start = 0; start < pn; ++start) {
        if (index[static_cast<size_t>(start)] != -1) continue;
        index[static_cast<size_t>(start)] = low[static_cast<size_t>(start)] = next_index++;
        stack.push_back(start);
        on_stack[static_cast<size_t>(start)] = 1;
        frames.emplace_back(start, 0);
        while (!frames.empty()) {
            const int p = frames.back().first;
            const int ei = frames.back().second;
            const int u = p >> 1, b = p & 1;
            auto outs = g.out(u);
            if (ei < static_cast<int>(outs.size())) {
                frames.back().second = ei + 1;
                const int q = 2 * outs[static_cast<size_t>(ei)] + (1 - b);
                if (index[static_cast<size_t>(q)] == -1) {
                    index[static_cast<size_t>(q)] = low[static_cast<size_t>(q)] = next_index++;
                    stack.push_back(q);
                    on_stack[static_cast<size_t>(q)] = 1;
                    frames.emplace_back(q, 0);
                } else if (on_stack[static_cast<size_t>(q)]) {
                    low[static_cast<size_t>(p)] =
                        std::min(low[static_cast<size_t>(p)], index[static_cast<size_t>(q)]);
                }
            } else {
                if (low[static_cast<size_t>(p)] == index[static_cast<size_t>(p)]) {
                    while (true) {
                        const int q = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(q)] = 0;
                        comp[static_cast<size_t>(q)] = next_comp;
                        if (q == p) break;
                    }
                    ++next_comp;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    const int parent = frames.back().first;
                    low[static_cast<size_t>(parent)] =
                        std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(p)]);
                }
            }
        }
    }

    for (int u = 0; u < n; ++u)
        if (comp[static_cast<size_t>(2 * u)] == comp[static_cast<size_t>(2 * u + 1)]) return true;
    return false;
}

std::vector<std::vector<int>> reverse_adjacency(const Digraph& g) {
    std::vector<std::vector<int>> rin(static_cast<size_t>(g.node_count()));
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.out(u)) rin[static_cast<size_t>(v)].push_back(u);
    return rin;  // already ascending: u sweeps upward
}

namespace {

std::string strip(const std::string& line) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = line.find_last_not_of(" \t\r");
    return line.substr(a, b - a + 1);
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        if (n < 0) {
            std::string kw;
            if (!(ls >> kw >> n) || kw != "digraph" || n < 0 || (ls >> kw))
                throw GraphError("edge list line " + std::to_string(lineno) +
                                 ": expected header 'digraph <n>', got '" + t + "'");
            continue;
        }
        int u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw GraphError("edge list line " + std::to_string(lineno) +
                             ": expected 'u v', got '" + t + "'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw GraphError("edge list missing 'digraph <n>' header");
    try {
        return Digraph::build(n, edges);
    } catch (const GraphError& e) {
        throw GraphError(std::string("edge list: ") + e.what());
    }
}

void write_edge_list(const Digraph& g, std::ostream& out) {
    out << "digraph " << g.node_count() << "\n";
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.out(u)) out << u << " " << v << "\n";
}

Digraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string format_edge_list(const Digraph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

}  // namespace yablo
