#include "yablo/successor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "yablo/error.hpp"

namespace yablo {

SuccessorStructure SuccessorStructure::make(std::vector<int> cycles, int n_chains,
                                            int z_chains) {
    for (int len : cycles)
        if (len < 1)
            throw StructureError("cycle length must be positive, got " + std::to_string(len));
    if (n_chains < 0 || z_chains < 0)
        throw StructureError("chain counts must be non-negative");
    std::sort(cycles.begin(), cycles.end());
    return SuccessorStructure{std::move(cycles), n_chains, z_chains};
}

int SuccessorStructure::total_cycle_size() const {
    return std::accumulate(cycles.begin(), cycles.end(), 0);
}

Digraph realize(const SuccessorStructure& s) {
    if (!s.finitely_realizable())
        throw StructureError("structure with " + std::to_string(s.n_chains) + " N-chain(s) and " +
                             std::to_string(s.z_chains) +
                             " Z-chain(s) is not finitely realizable");
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (int len : s.cycles) {
        for (int i = 0; i < len; ++i)
            edges.emplace_back(offset + i, offset + (i + 1) % len);
        offset += len;
    }
    return Digraph::build(offset, edges);
}

SuccessorStructure classify(const Digraph& g) {
    const int n = g.node_count();
    for (int u = 0; u < n; ++u)
        if (g.out_degree(u) != 1)
            throw StructureError("node " + std::to_string(u) + " has out-degree " +
                                 std::to_string(g.out_degree(u)) +
                                 "; s must be a total function");
    std::vector<int> pred(static_cast<size_t>(n), -1);
    for (int u = 0; u < n; ++u) {
        const int v = g.successor_of(u);
        if (pred[static_cast<size_t>(v)] >= 0)
            throw StructureError("node " + std::to_string(v) + " has in-degree 2 (from nodes " +
                                 std::to_string(pred[static_cast<size_t>(v)]) + " and " +
                                 std::to_string(u) + "); s must be injective");
        pred[static_cast<size_t>(v)] = u;
    }
    // total + injective on a finite set: a permutation, so only cycles
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> cycles;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        int len = 0;
        for (int v = start; !seen[static_cast<size_t>(v)]; v = g.successor_of(v)) {
            seen[static_cast<size_t>(v)] = 1;
            ++len;
        }
        cycles.push_back(len);
    }
    return SuccessorStructure::make(std::move(cycles));
}

bool kernel_exists_symbolic(const SuccessorStructure& s) {
    for (int len : s.cycles)
        if (len % 2 == 1) return false;
    return true;
}

bool fragment_satisfaction(const SuccessorStructure& s, int up_to) {
    // s^(2k+1) has a fixed point iff some cycle length divides 2k+1; chains
    // never close up, so they cannot fail any of these axioms
    for (int len : s.cycles)
        for (int k = 0; k <= up_to; ++k)
            if ((2 * k + 1) % len == 0) return false;
    return true;
}

namespace {

[[noreturn]] void bad_text(const std::string& text, const std::string& why) {
    throw StructureError("bad successor structure '" + text + "': " + why +
                         " (expected cycles=[l1,l2,...] n=<count> z=<count>)");
}

}  // namespace

SuccessorStructure parse_successor(const std::string& text) {
    std::istringstream in(text);
    std::string field;
    if (!(in >> field) || field.rfind("cycles=[", 0) != 0 || field.back() != ']')
        bad_text(text, "missing cycles=[...] field");
    std::vector<int> cycles;
    const std::string body = field.substr(8, field.size() - 9);
    if (!body.empty()) {
        std::istringstream items(body);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                bad_text(text, "bad cycle length '" + item + "'");
            cycles.push_back(std::stoi(item));
        }
    }
    int counts[2];
    for (const char* name : {"n", "z"}) {
        const std::string prefix = std::string(name) + "=";
        if (!(in >> field) || field.rfind(prefix, 0) != 0)
            bad_text(text, std::string("missing ") + prefix + "<count> field");
        const std::string digits = field.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            bad_text(text, "bad count '" + field + "'");
        counts[name[0] == 'z'] = std::stoi(digits);
    }
    if (in >> field) bad_text(text, "trailing input '" + field + "'");
    return SuccessorStructure::make(std::move(cycles), counts[0], counts[1]);
}

std::string format_successor(const SuccessorStructure& s) {
    std::ostringstream out;
    out << "cycles=[";
    for (size_t i = 0; i < s.cycles.size(); ++i) {
        if (i) out << ",";
        out << s.cycles[i];
    }
    out << "] n=" << s.n_chains << " z=" << s.z_chains;
    return out.str();
}

}  // namespace yablo
