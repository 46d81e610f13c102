#pragma once

#include <string>
#include <vector>

#include "yablo/digraph.hpp"

namespace yablo {

/// Symbolic model of the injective-successor theory: a multiset of finite
/// cycle lengths plus counts of N-shaped and Z-shaped chains. The chains are
/// never materialized; a structure is finitely realizable iff it has none
/// (a total injective map on a finite set is a permutation, i.e. a disjoint
/// union of cycles).
struct SuccessorStructure {
    std::vector<int> cycles;  // nondecreasing, every length >= 1
    int n_chains = 0;
    int z_chains = 0;

    /// Sorts the cycle lengths and validates counts.
    static SuccessorStructure make(std::vector<int> cycles, int n_chains = 0,
                                   int z_chains = 0);

    bool finitely_realizable() const { return n_chains == 0 && z_chains == 0; }
    int total_cycle_size() const;

    friend bool operator==(const SuccessorStructure&, const SuccessorStructure&) = default;
};

/// The associated digraph x -> s(x): a disjoint union of directed cycles,
/// laid out with consecutive indices per cycle in stored order. Throws
/// StructureError when the structure has chains.
Digraph realize(const SuccessorStructure& s);

/// Inverse of realize up to relabeling. Requires the graph to be functional
/// (out-degree exactly 1) and injective (in-degree at most 1); throws
/// StructureError with a witness node or pair otherwise.
SuccessorStructure classify(const Digraph& g);

/// Kernel existence decided symbolically: true iff every cycle length is
/// even. Chains never block a kernel (take every second element).
bool kernel_exists_symbolic(const SuccessorStructure& s);

/// True iff no cycle length divides any 2k+1 with k <= up_to, i.e. the
/// realized structure satisfies axiom_no_odd_cycle(k) for all k <= up_to.
/// Chains cannot realize a fixed point of any s-power, so they are ignored.
bool fragment_satisfaction(const SuccessorStructure& s, int up_to);

/// Text form "cycles=[l1,l2,...] n=<count> z=<count>".
SuccessorStructure parse_successor(const std::string& text);
std::string format_successor(const SuccessorStructure& s);

}  // namespace yablo
