#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "yablo/error.hpp"

namespace yablo {

/// Finite directed graph over dense node indices 0..n-1. Out-neighbor lists
/// are kept sorted and duplicate-free, so equal graphs compare equal. Loops
/// are ordinary edges. Instances are immutable after construction.
class Digraph {
public:
    Digraph() = default;  // the empty graph

    /// Canonicalizing constructor: sorts each out-list and collapses
    /// duplicate edges. Throws GraphError naming the first offending pair.
    static Digraph build(int n, std::span<const std::pair<int, int>> edges);
    static Digraph build(int n, std::initializer_list<std::pair<int, int>> edges);

    int node_count() const { return n_; }
    int edge_count() const { return m_; }
    std::span<const int> out(int u) const { return adj_[static_cast<size_t>(u)]; }
    int out_degree(int u) const { return static_cast<int>(adj_[static_cast<size_t>(u)].size()); }
    bool has_edge(int u, int v) const;

    /// True when every node has out-degree exactly 1, i.e. the graph is the
    /// associated graph of a total unary function.
    bool is_functional() const;

    /// The unique out-neighbor of u. Only meaningful when out_degree(u) == 1.
    int successor_of(int u) const { return adj_[static_cast<size_t>(u)][0]; }

    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Subset of the nodes 0..n-1 of some digraph. Remembers its universe size
/// so that set/graph mismatches are caught instead of silently misreading.
class VertexSet {
public:
    VertexSet() = default;  // empty set over the empty universe
    explicit VertexSet(int universe);
    static VertexSet of(int universe, std::span<const int> members);
    static VertexSet of(int universe, std::initializer_list<int> members);
    static VertexSet from_mask(int universe, std::uint64_t mask);  // universe <= 63

    int universe_size() const { return static_cast<int>(in_.size()); }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool full() const { return size_ == universe_size(); }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    std::vector<int> members() const;  // ascending

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<char> in_;
    int size_ = 0;
};

/// "{0, 2}" rendering used by reports and the CLI.
std::string format_vertex_set(const VertexSet& s);

/// Number of labeled digraphs on n nodes: 2^(n^2). Requires n <= 7 so the
/// count fits in 64 bits; exhaustive iteration is capped far lower.
std::uint64_t digraph_count(int n);

/// Graph number `mask` in adjacency-matrix order: bit u*n+v set means the
/// edge (u,v) is present.
Digraph digraph_from_mask(int n, std::uint64_t mask);

/// Range over every labeled digraph on n nodes (loops allowed), each exactly
/// once, in ascending adjacency-matrix bitmask order. Capped at n <= 4;
/// beyond that the 2^(n^2) stream is refused.
class AllDigraphs {
public:
    explicit AllDigraphs(int n);

    class iterator {
    public:
        using value_type = Digraph;
        using difference_type = std::int64_t;

        iterator() = default;
        iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
        Digraph operator*() const { return digraph_from_mask(n_, mask_); }
        iterator& operator++() { ++mask_; return *this; }
        iterator operator++(int) { iterator t = *this; ++mask_; return t; }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        int n_ = 0;
        std::uint64_t mask_ = 0;
    };

    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, digraph_count(n_)}; }
    std::uint64_t size() const { return digraph_count(n_); }

private:
    int n_;
};

inline AllDigraphs all_digraphs(int n) { return AllDigraphs(n); }

/// Independent coin flip with probability p for each of the n^2 ordered
/// pairs, loops included. Deterministic for a fixed seed.
Digraph random_digraph(int n, double p, std::uint64_t seed);

/// Chain a_0 -> a_1 -> ... -> a_2k with a loop on the last node: the graph
/// on 2k+1 nodes whose theta levels separate at exactly depth k.
Digraph witness_chain(int k);

/// True iff some directed closed walk of odd length exists. Uses the parity
/// product: duplicate each node with a parity bit, edge (u,b) -> (v,1-b);
/// an odd closed walk through u exists iff (u,0) and (u,1) share a strongly
/// connected component.
bool has_odd_closed_walk(const Digraph& g);

/// In-neighbor lists (sorted ascending, one list per node).
std::vector<std::vector<int>> reverse_adjacency(const Digraph& g);

// Edge-list text format: first line "digraph <n>", then one "u v" pair per
// line; '#' starts a comment line. Writing a just-read graph reproduces the
// canonical form byte for byte.
Digraph read_edge_list(std::istream& in);
void write_edge_list(const Digraph& g, std::ostream& out);
Digraph parse_edge_list(const std::string& text);
std::string format_edge_list(const Digraph& g);

}  // namespace yablo
