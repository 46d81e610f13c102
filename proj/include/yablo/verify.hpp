#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace yablo {

/// One named check inside a report. `checks` counts individual assertions;
/// every failure carries a witness structure in edge-list form for replay.
struct CheckEntry {
    std::string name;
    bool pass = true;
    std::int64_t checks = 0;
    std::vector<std::string> witnesses;
    std::string note;

    void fail(std::string witness);
};

/// Deterministic verification report: same parameters and seed, same report.
struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::string header;
    std::vector<CheckEntry> entries;

    bool all_pass() const;
    std::int64_t total_checks() const;
    std::string to_text() const;
    std::string to_json_string(int indent = 2) const;
};

/// The three small example graphs: graph1 (a->b, a->c, c->c) has no kernel
/// and is transitive but not total; graph2 (a->b, b->c, c->c) has no kernel
/// and is total but not transitive; graph3 (4 nodes) separates the
/// domination condition A from transitivity. Also records that graph1 has
/// no kernel yet fails the universal theta(0), so kernel-freeness does not
/// imply any theta level.
Report check_fixtures();

/// Theta hierarchy: (1) a graph where theta(k) holds everywhere has no
/// kernel, and (2) theta(k) everywhere implies theta(k+1) everywhere —
/// swept exhaustively over all digraphs with 1..exhaustive_nodes nodes
/// (cap 4) plus `samples` seeded random graphs on 5..10 nodes, for levels
/// k <= max_n (cap 5). (3) Strictness, constructively: witness_chain(k+1)
/// satisfies universal theta(k+1) but falsifies universal theta(k) at
/// node 0, for every k < max_n.
Report check_theorem_thetas(int max_n, int exhaustive_nodes, int samples,
                            std::uint64_t seed);

/// Functional graphs at finite scale: over every multiset of cycle lengths
/// with total size <= max_total (cap 12), the solver verdict on the realized
/// graph equals "all cycle lengths even" (cross-checked by brute force), and
/// the alternating construction passes is_kernel whenever a kernel exists.
Report check_lemma(int max_total);

/// The odd cycle C(2N+3): satisfies the injectivity axiom and every
/// no-odd-cycle axiom up to k = N, fails the one at k = N+1, and has no
/// kernel (symbolic verdict always; solver and brute force at small sizes;
/// evaluator cross-check for N <= 5). Cap N <= 100.
Report compactness_demo(int big_n);

/// compactness_demo for every N in 0..up_to, one entry per cycle.
Report compactness_sweep(int up_to);

/// Scheme-level tautology sweep over all digraphs with 1..exhaustive_nodes
/// nodes (cap 3): wherever A1 & A2 holds — or the weaker A holds — every
/// kernel-sentence instance for phi in {theta0, theta1, R(x,x),
/// exists y R(x,y)} must hold too. Includes the Russell/Barber validity
/// ~exists y forall x (R(y,x) <-> ~R(x,x)) over the same sweep.
Report check_scheme_y1(int exhaustive_nodes);

}  // namespace yablo
