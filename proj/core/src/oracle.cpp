#include "dnapost/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dnapost {

OracleResult bruteforce(const RppInstance& instance) {
    if (instance.vertices > 12)
        throw std::invalid_argument("bruteforce oracle is guarded at 12 vertices");

    OracleResult result;
    const int v = instance.vertices;
    if (v < 3) return result; // a simple graph has no hamiltonian cycle below 3 vertices

    std::vector<VertexId> perm(static_cast<std::size_t>(v) - 1);
    std::iota(perm.begin(), perm.end(), 2);

    do {
        if (perm.front() > perm.back()) continue; // one direction per cycle
        std::vector<VertexId> cycle;
        cycle.reserve(static_cast<std::size_t>(v));
        cycle.push_back(1);
        cycle.insert(cycle.end(), perm.begin(), perm.end());

        bool ok = true;
        std::int64_t cost = 0;
        std::set<EdgeKey> used;
        for (int i = 0; i < v && ok; ++i) {
            const VertexId a = cycle[static_cast<std::size_t>(i)];
            const VertexId b = cycle[static_cast<std::size_t>((i + 1) % v)];
            if (!instance.has_edge(a, b)) {
                ok = false;
                break;
            }
            used.insert(edge_key(a, b));
            cost += instance.edge_length(a, b);
        }
        if (!ok) continue;
        if (!std::includes(used.begin(), used.end(), instance.required.begin(),
                           instance.required.end()))
            continue;
        if (!result.feasible || cost < *result.min_cost) {
            result.feasible = true;
            result.min_cost = cost;
            result.best_cycle = cycle;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return result;
}

std::vector<std::vector<VertexId>> enumerate_closed_walks(const RppInstance& instance, int length,
                                                          EdgeKey through) {
    if (length > 12) throw std::invalid_argument("closed-walk enumeration is guarded at length 12");
    std::vector<std::vector<VertexId>> walks;
    if (length < 2 || !instance.has_edge(through.first, through.second)) return walks;

    const auto adj = instance.adjacency();
    std::vector<VertexId> walk;

    std::function<void(VertexId, VertexId)> grow = [&](VertexId cur, VertexId target) {
        if (static_cast<int>(walk.size()) == length) {
            if (cur == target) walks.push_back(walk);
            return;
        }
        for (VertexId next : adj[static_cast<std::size_t>(cur)]) {
            if (edge_key(cur, next) == through) continue; // the anchor is only the closing step
            walk.push_back(next);
            grow(next, target);
            walk.pop_back();
        }
    };

    for (auto [start, target] : {std::pair{through.first, through.second},
                                 std::pair{through.second, through.first}}) {
        walk.assign(1, start);
        grow(start, target);
    }
    return walks;
}

} // namespace dnapost
