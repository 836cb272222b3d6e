#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dnapost/graph.hpp"

namespace dnapost {

struct OracleResult {
    bool feasible = false;                        // some hamiltonian cycle contains all required edges
    std::optional<std::int64_t> min_cost;         // present iff feasible
    std::optional<std::vector<VertexId>> best_cycle; // canonical: starts at 1, second < last
};

// Deliberately naive ground truth: enumerates every hamiltonian cycle (vertex
// 1 fixed, direction canonicalized), keeps those containing all required
// edges, and reports the minimum total cost. Guarded at v <= 12.
OracleResult bruteforce(const RppInstance& instance);

inline bool oracle_decision(const OracleResult& r, std::int64_t budget) {
    return r.feasible && *r.min_cost <= budget;
}

// All closed walks of exactly `length` edges whose closing step is `through`:
// sequences (w1..w_length) with {w1, w_length} the endpoints of `through`,
// every interior step an edge other than `through`. Both directions are
// listed; rotations are not collapsed. This is exactly the population a
// phase-1 assembly run must produce. Guarded at length <= 12.
std::vector<std::vector<VertexId>> enumerate_closed_walks(const RppInstance& instance, int length,
                                                          EdgeKey through);

} // namespace dnapost
