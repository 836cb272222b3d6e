#include "dnapost/graph.hpp"

#include <algorithm>
#include <string>

#include "dnapost/errors.hpp"

namespace dnapost {

std::vector<std::vector<VertexId>> RppInstance::adjacency() const {
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(vertices) + 1);
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

namespace {

std::string edge_str(const EdgeKey& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

RppInstance validate(const RppInstance& instance) {
    if (instance.vertices < 1)
        throw ValidationError("vertex-count", "instance needs at least one vertex");
    if (instance.budget < 0)
        throw ValidationError("budget", "budget must be nonnegative");

    RppInstance out;
    out.vertices = instance.vertices;
    out.budget = instance.budget;

    for (const auto& e : instance.edges) {
        if (e.first == e.second)
            throw ValidationError("self-loop", "edge " + edge_str(e) + " is a self-loop");
        if (e.first < 1 || e.first > instance.vertices || e.second < 1 || e.second > instance.vertices)
            throw ValidationError("vertex-range", "edge " + edge_str(e) + " references a vertex outside 1.." +
                                                      std::to_string(instance.vertices));
        const EdgeKey k = edge_key(e.first, e.second);
        auto it = instance.length.find(k);
        if (it == instance.length.end())
            throw ValidationError("edge-length", "edge " + edge_str(k) + " has no length");
        if (it->second < 0)
            throw ValidationError("edge-length", "edge " + edge_str(k) + " has negative length");
        if (std::find(out.edges.begin(), out.edges.end(), k) != out.edges.end())
            throw ValidationError("duplicate-edge", "edge " + edge_str(k) + " appears twice");
        out.edges.push_back(k);
        out.length[k] = it->second;
    }
    std::sort(out.edges.begin(), out.edges.end());

    for (const auto& r : instance.required) {
        const EdgeKey k = edge_key(r.first, r.second);
        if (!std::binary_search(out.edges.begin(), out.edges.end(), k))
            throw ValidationError("required-not-in-edges",
                                  "required edge " + edge_str(k) + " is not an edge of the graph");
        out.required.insert(k);
    }

    // connectivity; a disconnected graph has no hamiltonian cycle at all
    std::vector<char> seen(static_cast<std::size_t>(out.vertices) + 1, 0);
    std::vector<VertexId> stack{1};
    seen[1] = 1;
    const auto adj = out.adjacency();
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    for (VertexId u = 1; u <= out.vertices; ++u)
        if (!seen[static_cast<std::size_t>(u)])
            throw ValidationError("disconnected", "vertex " + std::to_string(u) +
                                                      " is unreachable from vertex 1");
    return out;
}

Renumbering dfs_renumber(const RppInstance& instance, VertexId root) {
    const auto adj = instance.adjacency();
    std::vector<VertexId> new_label(static_cast<std::size_t>(instance.vertices) + 1, 0);
    std::vector<VertexId> to_original(static_cast<std::size_t>(instance.vertices) + 1, 0);
    VertexId next = 0;

    // iterative DFS, ascending-label tie-break
    std::vector<std::pair<VertexId, std::size_t>> stack;
    new_label[static_cast<std::size_t>(root)] = ++next;
    to_original[static_cast<std::size_t>(next)] = root;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
        auto& [u, idx] = stack.back();
        const auto& nbrs = adj[static_cast<std::size_t>(u)];
        if (idx >= nbrs.size()) {
            stack.pop_back();
            continue;
        }
        const VertexId w = nbrs[idx++];
        if (new_label[static_cast<std::size_t>(w)] == 0) {
            new_label[static_cast<std::size_t>(w)] = ++next;
            to_original[static_cast<std::size_t>(next)] = w;
            stack.emplace_back(w, 0);
        }
    }

    Renumbering out;
    out.to_original = to_original;
    out.instance.vertices = instance.vertices;
    out.instance.budget = instance.budget;
    for (const auto& e : instance.edges) {
        const EdgeKey k = edge_key(new_label[static_cast<std::size_t>(e.first)],
                                   new_label[static_cast<std::size_t>(e.second)]);
        out.instance.edges.push_back(k);
        out.instance.length[k] = instance.length.at(e);
        if (instance.required.count(e)) out.instance.required.insert(k);
    }
    std::sort(out.instance.edges.begin(), out.instance.edges.end());
    return out;
}

std::optional<EdgeKey> anchor_edge(const RppInstance& instance) {
    if (!instance.required.empty()) return *instance.required.begin();
    if (!instance.edges.empty()) return *std::min_element(instance.edges.begin(), instance.edges.end());
    return std::nullopt;
}

std::int64_t free_budget(const RppInstance& instance) {
    std::int64_t sum = 0;
    for (const auto& r : instance.required) sum += instance.length.at(r);
    return instance.budget - sum;
}

} // namespace dnapost
