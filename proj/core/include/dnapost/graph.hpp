#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace dnapost {

using VertexId = int;
using EdgeKey = std::pair<VertexId, VertexId>; // normalized u < v

inline EdgeKey edge_key(VertexId u, VertexId v) { return u < v ? EdgeKey{u, v} : EdgeKey{v, u}; }

// A decision-problem instance: simple undirected graph with nonnegative
// integer edge lengths, a required-edge subset and a budget. Vertices are
// 1-based. Instances are immutable after validation and freely shareable.
struct RppInstance {
    VertexId vertices = 0;
    std::vector<EdgeKey> edges;          // normalized, sorted, unique after validate()
    std::map<EdgeKey, std::int64_t> length;
    std::set<EdgeKey> required;
    std::int64_t budget = 0;

    bool has_edge(VertexId u, VertexId v) const { return length.count(edge_key(u, v)) != 0; }
    std::int64_t edge_length(VertexId u, VertexId v) const { return length.at(edge_key(u, v)); }
    // neighbors in ascending label order, per the DFS tie-break rule
    std::vector<std::vector<VertexId>> adjacency() const;
};

// Checks every instance invariant and throws ValidationError with a distinct
// kind for each failure: "vertex-count", "vertex-range", "self-loop",
// "duplicate-edge", "edge-length", "required-not-in-edges", "budget",
// "disconnected". Returns a normalized copy (edges sorted and deduplicated
// is required on input; orientation is normalized here).
RppInstance validate(const RppInstance& instance);

struct Renumbering {
    RppInstance instance;               // relabeled 1..v in DFS discovery order
    std::vector<VertexId> to_original;  // index = new label (1-based; [0] unused)
};

// Relabels vertices in DFS discovery order from `root`, exploring neighbors
// in ascending original label. Pure relabeling: the result is isomorphic to
// the input and `to_original` translates answers back.
Renumbering dfs_renumber(const RppInstance& instance, VertexId root = 1);

// c = B - sum of required-edge lengths; may be negative, in which case the
// decision is NO before any tube work.
std::int64_t free_budget(const RppInstance& instance);

// The anchor edge that strand assembly closes every cycle with: the
// lexicographically smallest required edge, or the smallest edge overall
// when nothing is required; nullopt for an edgeless graph.
std::optional<EdgeKey> anchor_edge(const RppInstance& instance);

} // namespace dnapost
