#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnapost/codebook.hpp"
#include "dnapost/graph.hpp"
#include "dnapost/tube.hpp"

namespace dnapost {

namespace script {
struct Statement;
}

enum class Answer { yes, no };

struct PipelineConfig {
    AnnealMode mode = AnnealMode::assembly;
    std::uint64_t seed = 0;
    std::uint64_t capacity = 10'000'000;
    bool trace = false;   // record every executed operation as a tube script
    bool witness = false; // decode a satisfying strand on YES
};

struct PipelineStats {
    OpCounts ops;                      // everything before the final length sweep
    std::uint64_t sweep_selections = 0; // the sweep is reported separately so the
    std::uint64_t sweep_detects = 0;    // quadratic bound can hold B fixed
    std::uint64_t max_distinct = 0;
    double wall_ms = 0.0;

    std::uint64_t ops_excluding_sweep() const { return ops.total(); }
    std::uint64_t ops_total() const { return ops.total() + sweep_selections + sweep_detects; }
};

struct Decision {
    Answer answer = Answer::no;
    std::optional<std::vector<VertexId>> witness; // original labels; starts at 1, second < last
    std::optional<std::int64_t> witness_cost;
    std::optional<Strand> witness_strand;
    PipelineStats stats;
    std::string trace; // statements only; prepend a CODEBOOK header to replay
};

// The four phases over simulated tubes, for one instance that has already
// been validated and renumbered. solve() drives this; tests can too.
class RppPipeline {
public:
    RppPipeline(const RppInstance& instance, const Codebook& cb, const PipelineConfig& cfg);

    // Merge/anneal/denature/select plus the vertex-side removal: the returned
    // tube holds, for every closed walk of length v through the anchor edge,
    // the walk's edge-side strand of length 20v.
    Tube phase1_generate();
    // Chained separations on the remaining required edges.
    Tube phase2_require_edges(Tube walks);
    // Chained per-vertex separations with early NO: survivors are exactly the
    // hamiltonian-circuit strands.
    std::pair<Tube, bool> phase3_vertex_check(Tube circuits);

    struct CostCheck {
        bool feasible = false;
        std::optional<Strand> strand; // one detected strand, for the witness
    };
    // Marker append, per-free-edge length appends, and the selection sweep
    // from length L+c down to L. `c` is the effective free budget.
    CostCheck phase4_cost_check(Tube circuits, std::int64_t c);

    const Lab& lab() const noexcept { return lab_; }
    std::uint64_t sweep_selections() const noexcept { return sweep_selections_; }
    std::uint64_t sweep_detects() const noexcept { return sweep_detects_; }
    std::string take_trace() { return std::move(trace_); }

private:
    const RppInstance& inst_;
    const Codebook& cb_;
    PipelineConfig cfg_;
    Lab lab_;
    std::string trace_;
    std::uint64_t sweep_selections_ = 0;
    std::uint64_t sweep_detects_ = 0;

    std::vector<EdgeKey> free_edges() const;
    void trace_line(script::Statement st);
};

// Validates, renumbers, short-circuits a negative free budget, builds the
// codebook and runs the four phases. The effective free budget treats the
// anchor edge as required even when the required set was empty, since every
// produced cycle traverses it.
Decision solve(const RppInstance& instance, const PipelineConfig& cfg = {});

// Rotates/orients a hamiltonian cycle to start at vertex 1 with its second
// vertex smaller than its last.
std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle);

} // namespace dnapost
