#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "yablo/digraph.hpp"

namespace yablo {

struct SolveStats {
    std::int64_t visited = 0;       // search-tree nodes entered
    std::int64_t decisions = 0;     // branch values tried
    std::int64_t propagations = 0;  // forced assignments
};

struct SolveResult {
    std::optional<VertexSet> kernel;
    SolveStats stats;

    bool found() const { return kernel.has_value(); }
};

/// Kernel test: K is independent (no edge inside K) and absorbing (every
/// node outside K has an out-neighbor in K). Throws GraphError when the
/// set's universe does not match the graph.
bool is_kernel(const Digraph& g, const VertexSet& k);

/// Every kernel, in ascending subset-bitmask order (bit i = node i). Capped
/// at n <= 20. An empty result means the graph has no kernel at all.
std::vector<VertexSet> brute_force_kernels(const Digraph& g);

/// Decision procedure for kernel existence. Constraint model: one boolean
/// per node; an edge (u,v) forbids u,v both in K; each node is in K or has
/// an out-neighbor in K. Unit propagation (a loop forces its node out, a
/// sink forces its node in) followed by backtracking; the branch variable is
/// the lowest-index unassigned node, tried in-kernel first. Deterministic,
/// including the statistics.
SolveResult solve(const Digraph& g);

/// Constructive kernel for the two easy classes: an acyclic graph (sweep in
/// reverse topological order: a node joins K iff none of its out-neighbors
/// did) or a functional graph without odd cycles (alternate membership
/// around each cycle starting in-kernel at the cycle's smallest node, then
/// propagate backwards through the trees hanging off the cycles). Throws
/// GraphError naming an odd cycle or a non-functional node otherwise.
VertexSet kernel_for_odd_cycle_free(const Digraph& g);

}  // namespace yablo
