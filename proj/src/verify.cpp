#include "yablo/verify.hpp"

#include <random>
#include <sstream>

#include <json.hpp>

#include "yablo/digraph.hpp"
#include "yablo/error.hpp"
#include "yablo/eval.hpp"
#include "yablo/kernel.hpp"
#include "yablo/schemes.hpp"
#include "yablo/successor.hpp"

namespace yablo {

void CheckEntry::fail(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
}

bool Report::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

std::int64_t Report::total_checks() const {
    std::int64_t total = 0;
    for (const auto& e : entries) total += e.checks;
    return total;
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "# verify suite: " << suite << "\n";
    if (!params.empty()) {
        out << "# params:";
        for (const auto& [k, v] : params) out << " " << k << "=" << v;
        out << "\n";
    }
    if (!header.empty()) out << "# " << header << "\n";
    for (const auto& e : entries) {
        out << (e.pass ? "PASS" : "FAIL") << " " << e.name << " checks=" << e.checks;
        if (!e.note.empty()) out << " (" << e.note << ")";
        out << "\n";
        for (const auto& w : e.witnesses) {
            out << "  witness:\n";
            std::istringstream lines(w);
            std::string line;
            while (std::getline(lines, line)) out << "    " << line << "\n";
        }
    }
    out << "RESULT " << (all_pass() ? "PASS" : "FAIL") << " (" << entries.size()
        << " checks, " << total_checks() << " assertions)\n";
    return out.str();
}

std::string Report::to_json_string(int indent) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    if (!header.empty()) j["header"] = header;
    j["checks"] = nlohmann::json::object();
    for (const auto& e : entries) {
        nlohmann::json je;
        je["pass"] = e.pass;
        je["checks"] = e.checks;
        je["witnesses"] = e.witnesses;
        if (!e.note.empty()) je["note"] = e.note;
        j["checks"][e.name] = std::move(je);
    }
    j["pass"] = all_pass();
    return j.dump(indent);
}

namespace {

// the two 3-node graphs and the 4-node graph the fixture checks revolve around
Digraph fixture_graph1() { return Digraph::build(3, {{0, 1}, {0, 2}, {2, 2}}); }
Digraph fixture_graph2() { return Digraph::build(3, {{0, 1}, {1, 2}, {2, 2}}); }
Digraph fixture_graph3() {
    return Digraph::build(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}});
}

std::string witness_text(const Digraph& g, const std::string& note) {
    return note + "\n" + format_edge_list(g);
}

}  // namespace

Report check_fixtures() {
    Report r;
    r.suite = "fixtures";
    r.header = "expected truth values for the three hand-built example graphs";

    const FormulaPtr a1 = axiom(AxiomName::A1);
    const FormulaPtr a2 = axiom(AxiomName::A2);
    const FormulaPtr a = axiom(AxiomName::A);

    struct Expected {
        const char* name;
        Digraph g;
        bool no_kernel, a1, a2;
    };
    const Expected fixtures[] = {
        {"graph1", fixture_graph1(), true, false, true},
        {"graph2", fixture_graph2(), true, true, false},
    };
    for (const auto& fx : fixtures) {
        CheckEntry e;
        e.name = fx.name;
        e.checks = 3;
        const bool no_kernel = !solve(fx.g).found();
        const bool va1 = eval(fx.g, a1);
        const bool va2 = eval(fx.g, a2);
        std::ostringstream note;
        note << "no-kernel=" << no_kernel << " A1=" << va1 << " A2=" << va2;
        e.note = note.str();
        if (no_kernel != fx.no_kernel || va1 != fx.a1 || va2 != fx.a2)
            e.fail(witness_text(fx.g, "expected no-kernel/A1/A2 pattern mismatch"));
        r.entries.push_back(std::move(e));
    }

    {
        CheckEntry e;
        e.name = "graph3";
        e.checks = 2;
        const Digraph g = fixture_graph3();
        const bool va = eval(g, a);
        const bool va2 = eval(g, a2);
        std::ostringstream note;
        note << "A=" << va << " A2=" << va2;
        e.note = note.str();
        if (!va || va2) e.fail(witness_text(g, "expected A true, A2 false"));
        r.entries.push_back(std::move(e));
    }

    {
        // kernel-freeness does not climb back down the hierarchy: graph1 has
        // no kernel yet already fails universal theta(0)
        CheckEntry e;
        e.name = "no-kernel-without-theta0";
        e.checks = 2;
        const Digraph g = fixture_graph1();
        const bool no_kernel = !solve(g).found();
        const bool t0_everywhere = theta_set(g, 0).full();
        if (!no_kernel || t0_everywhere)
            e.fail(witness_text(g, "expected no kernel and a theta(0) failure"));
        e.note = "no kernel, yet theta(0) fails somewhere";
        r.entries.push_back(std::move(e));
    }

    return r;
}

Report check_theorem_thetas(int max_n, int exhaustive_nodes, int samples,
                            std::uint64_t seed) {
    if (max_n > 5) throw CapError("theta sweep capped at level 5, got " + std::to_string(max_n));
    if (exhaustive_nodes > 4)
        throw CapError("exhaustive theta sweep capped at 4 nodes, got " +
                       std::to_string(exhaustive_nodes));
    if (max_n < 0 || exhaustive_nodes < 0 || samples < 0)
        throw Error("theta sweep parameters must be non-negative");

    Report r;
    r.suite = "thetas";
    r.params = {{"max_n", std::to_string(max_n)},
                {"exhaustive_nodes", std::to_string(exhaustive_nodes)},
                {"samples", std::to_string(samples)},
                {"seed", std::to_string(seed)}};
    r.header = "universal theta(k) forces kernel-freeness and theta(k+1); "
               "witness chains separate consecutive levels";

    CheckEntry no_kernel_entry;
    no_kernel_entry.name = "theta-implies-no-kernel";
    CheckEntry monotone_entry;
    monotone_entry.name = "theta-step-monotone";

    auto sweep = [&](const Digraph& g, const std::string& origin) {
        std::vector<VertexSet> levels;
        levels.reserve(static_cast<size_t>(max_n) + 1);
        for (int k = 0; k <= max_n; ++k) levels.push_back(theta_set(g, k));
        for (int k = 0; k <= max_n; ++k) {
            if (!levels[static_cast<size_t>(k)].full()) continue;
            ++no_kernel_entry.checks;
            if (solve(g).found())
                no_kernel_entry.fail(witness_text(
                    g, origin + ": theta(" + std::to_string(k) + ") everywhere but kernel found"));
        }
        for (int k = 0; k < max_n; ++k) {
            ++monotone_entry.checks;
            if (levels[static_cast<size_t>(k)].full() && !levels[static_cast<size_t>(k + 1)].full())
                monotone_entry.fail(witness_text(
                    g, origin + ": theta(" + std::to_string(k) + ") everywhere but theta(" +
                           std::to_string(k + 1) + ") not"));
        }
    };

    for (int n = 1; n <= exhaustive_nodes; ++n)
        for (const Digraph& g : all_digraphs(n)) sweep(g, "exhaustive n=" + std::to_string(n));

    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const int n = 5 + static_cast<int>(rng() % 6);  // 5..10
        const double p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        sweep(random_digraph(n, p, rng()), "sample " + std::to_string(i));
    }

    CheckEntry strict_entry;
    strict_entry.name = "theta-strict-at-witness-chain";
    for (int k = 0; k < max_n; ++k) {
        const Digraph chain = witness_chain(k + 1);
        strict_entry.checks += 3;
        const VertexSet upper = theta_set(chain, k + 1);
        const VertexSet lower = theta_set(chain, k);
        if (!upper.full())
            strict_entry.fail(witness_text(
                chain, "theta(" + std::to_string(k + 1) + ") not universal on witness_chain"));
        if (lower.full())
            strict_entry.fail(witness_text(
                chain, "theta(" + std::to_string(k) + ") unexpectedly universal on witness_chain"));
        if (lower.contains(0))
            strict_entry.fail(witness_text(
                chain, "theta(" + std::to_string(k) + ") unexpectedly holds at node 0"));
    }

    r.entries.push_back(std::move(no_kernel_entry));
    r.entries.push_back(std::move(monotone_entry));
    r.entries.push_back(std::move(strict_entry));
    return r;
}

namespace {

// every multiset of positive cycle lengths with total size <= budget,
// nondecreasing, including the empty multiset
template <typename Visitor>
void for_each_cycle_multiset(int budget, std::vector<int>& cur, int min_part, Visitor&& visit) {
    visit(cur);
    for (int part = min_part; part <= budget; ++part) {
        cur.push_back(part);
        for_each_cycle_multiset(budget - part, cur, part, visit);
        cur.pop_back();
    }
}

}  // namespace

Report check_lemma(int max_total) {
    if (max_total > 12)
        throw CapError("cycle-multiset sweep capped at total size 12, got " +
                       std::to_string(max_total));
    Report r;
    r.suite = "lemma";
    r.params = {{"max_total", std::to_string(max_total)}};
    r.header = "a disjoint union of cycles has a kernel exactly when every cycle is even";

    CheckEntry verdict_entry;
    verdict_entry.name = "solver-matches-cycle-parity";
    CheckEntry brute_entry;
    brute_entry.name = "brute-force-crosscheck";
    CheckEntry construct_entry;
    construct_entry.name = "even-index-construction";

    std::vector<int> cur;
    for_each_cycle_multiset(max_total, cur, 1, [&](const std::vector<int>& cycles) {
        const SuccessorStructure s = SuccessorStructure::make(cycles);
        const Digraph g = realize(s);
        const bool expected = kernel_exists_symbolic(s);

        ++verdict_entry.checks;
        if (solve(g).found() != expected)
            verdict_entry.fail(witness_text(g, "solver disagrees on " + format_successor(s)));

        ++brute_entry.checks;
        if (!brute_force_kernels(g).empty() != expected)
            brute_entry.fail(witness_text(g, "brute force disagrees on " + format_successor(s)));

        if (expected) {
            ++construct_entry.checks;
            if (!is_kernel(g, kernel_for_odd_cycle_free(g)))
                construct_entry.fail(
                    witness_text(g, "construction not a kernel on " + format_successor(s)));
        }
    });

    r.entries.push_back(std::move(verdict_entry));
    r.entries.push_back(std::move(brute_entry));
    r.entries.push_back(std::move(construct_entry));
    return r;
}

namespace {

// Single odd cycle C(2N+3): fragment axioms up to k=N hold, k=N+1 fails,
// and there is no kernel. Returns the aggregated entry for sweeps.
CheckEntry compactness_entry(int big_n) {
    const int len = 2 * big_n + 3;
    CheckEntry e;
    e.name = "C" + std::to_string(len);
    const SuccessorStructure s = SuccessorStructure::make({len});
    const Digraph g = realize(s);

    ++e.checks;
    if (!fragment_satisfaction(s, big_n))
        e.fail(witness_text(g, "fragment k<=" + std::to_string(big_n) + " fails arithmetically"));
    ++e.checks;
    if (fragment_satisfaction(s, big_n + 1))
        e.fail(witness_text(g, "fragment boundary k=" + std::to_string(big_n + 1) +
                                   " unexpectedly holds"));

    std::string note = "fragment k<=" + std::to_string(big_n) + " ok, fails at k=" +
                       std::to_string(big_n + 1) + "; no kernel:";

    if (big_n <= 5) {
        ++e.checks;
        if (!eval(g, axiom(AxiomName::S)))
            e.fail(witness_text(g, "injectivity axiom fails under the evaluator"));
        for (int k = 0; k <= big_n; ++k) {
            ++e.checks;
            if (!eval(g, axiom_no_odd_cycle(k)))
                e.fail(witness_text(g, "no_odd_cycle(" + std::to_string(k) +
                                           ") fails under the evaluator"));
        }
        ++e.checks;
        if (eval(g, axiom_no_odd_cycle(big_n + 1)))
            e.fail(witness_text(g, "no_odd_cycle(" + std::to_string(big_n + 1) +
                                       ") unexpectedly holds under the evaluator"));
    }

    ++e.checks;
    if (kernel_exists_symbolic(s)) e.fail(witness_text(g, "symbolic verdict claims a kernel"));
    note += " symbolic";
    if (len <= 31) {
        ++e.checks;
        if (solve(g).found()) e.fail(witness_text(g, "solver found a kernel on an odd cycle"));
        note += "+solver";
    }
    if (len <= 20) {
        ++e.checks;
        if (!brute_force_kernels(g).empty())
            e.fail(witness_text(g, "brute force found a kernel on an odd cycle"));
        note += "+brute";
    }
    e.note = note;
    return e;
}

}  // namespace

Report compactness_demo(int big_n) {
    if (big_n > 100)
        throw CapError("compactness demonstration capped at N=100, got " + std::to_string(big_n));
    if (big_n < 0) throw Error("N must be non-negative");
    Report r;
    r.suite = "compactness";
    r.params = {{"N", std::to_string(big_n)}};
    r.header = "the odd cycle C(2N+3) satisfies every axiom of the no-odd-cycle family up to "
               "k=N yet has no kernel, so no finite subfamily decides kernel existence over "
               "injective successor structures";
    r.entries.push_back(compactness_entry(big_n));
    return r;
}

Report compactness_sweep(int up_to) {
    if (up_to > 100)
        throw CapError("compactness demonstration capped at N=100, got " + std::to_string(up_to));
    if (up_to < 0) throw Error("N must be non-negative");
    Report r;
    r.suite = "compactness";
    r.params = {{"N", std::to_string(up_to)}};
    r.header = "for every N <= the cap, the odd cycle C(2N+3) satisfies the axiom fragment up "
               "to k=N yet has no kernel: arbitrarily large finite fragments admit a "
               "counterexample, which is why kernel-freeness has no finite axiomatization";
    for (int n = 0; n <= up_to; ++n) r.entries.push_back(compactness_entry(n));
    return r;
}

Report check_scheme_y1(int exhaustive_nodes) {
    if (exhaustive_nodes > 3)
        throw CapError("scheme sweep capped at 3 nodes, got " + std::to_string(exhaustive_nodes));
    Report r;
    r.suite = "y1";
    r.params = {{"exhaustive_nodes", std::to_string(exhaustive_nodes)}};
    r.header = "totality+transitivity (and the weaker domination condition) force every "
               "kernel-sentence instance; plus the Russell/Barber validity";

    struct Phi {
        const char* label;
        FormulaPtr formula;
    };
    const Phi phis[] = {
        {"theta0", theta(0)},
        {"theta1", theta(1)},
        {"R(x,x)", rel(mkvar("x"), mkvar("x"))},
        {"exists y R(x,y)", exists("y", rel(mkvar("x"), mkvar("y")))},
    };

    const FormulaPtr a1 = axiom(AxiomName::A1);
    const FormulaPtr a2 = axiom(AxiomName::A2);
    const FormulaPtr a = axiom(AxiomName::A);

    CheckEntry strong_entry;
    strong_entry.name = "A1&A2-implies-instance";
    CheckEntry weak_entry;
    weak_entry.name = "A-implies-instance";

    std::vector<FormulaPtr> instances;
    for (const auto& phi : phis) instances.push_back(yablo_instance(phi.formula));

    for (int n = 1; n <= exhaustive_nodes; ++n) {
        for (const Digraph& g : all_digraphs(n)) {
            const bool strong = eval(g, a1) && eval(g, a2);
            const bool weak = eval(g, a);
            if (!strong && !weak) continue;
            for (size_t i = 0; i < instances.size(); ++i) {
                const bool inst = eval(g, instances[i]);
                if (strong) {
                    ++strong_entry.checks;
                    if (!inst)
                        strong_entry.fail(witness_text(
                            g, std::string("A1&A2 hold but the instance at phi=") +
                                   phis[i].label + " fails"));
                }
                if (weak) {
                    ++weak_entry.checks;
                    if (!inst)
                        weak_entry.fail(witness_text(
                            g, std::string("A holds but the instance at phi=") + phis[i].label +
                                   " fails"));
                }
            }
        }
    }

    CheckEntry russell_entry;
    russell_entry.name = "russell-validity";
    russell_entry.checks = 1;
    if (!russell_validity_check(exhaustive_nodes))
        russell_entry.fail("~exists y forall x (R(y,x) <-> ~R(x,x)) failed somewhere");
    russell_entry.note = "swept over all digraphs with 1.." + std::to_string(exhaustive_nodes) +
                         " nodes";

    r.entries.push_back(std::move(strong_entry));
    r.entries.push_back(std::move(weak_entry));
    r.entries.push_back(std::move(russell_entry));
    return r;
}

}  // namespace yablo
