#include "dnapost/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "dnapost/errors.hpp"
#include "dnapost/script.hpp"

namespace dnapost {

std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
    auto it = std::find(cycle.begin(), cycle.end(), 1);
    if (it != cycle.end()) std::rotate(cycle.begin(), it, cycle.end());
    if (cycle.size() >= 3 && cycle[1] > cycle.back())
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

RppPipeline::RppPipeline(const RppInstance& instance, const Codebook& cb,
                         const PipelineConfig& cfg)
    : inst_(instance), cb_(cb), cfg_(cfg), lab_(cfg.capacity) {}

void RppPipeline::trace_line(script::Statement st) {
    if (!cfg_.trace) return;
    st.canonicalize();
    trace_ += script::print(st);
    trace_ += '\n';
}

std::vector<EdgeKey> RppPipeline::free_edges() const {
    std::vector<EdgeKey> out;
    for (const auto& e : inst_.edges)
        if (!inst_.required.count(e) && !(cb_.excluded && e == *cb_.excluded)) out.push_back(e);
    return out;
}

Tube RppPipeline::phase1_generate() {
    Tube p("P"), q("Q"), r("R"), w("W");

    const auto load = [&](Tube& t, std::vector<std::pair<Strand, Count>> multiset) {
        script::Statement st;
        st.kind = script::StmtKind::input;
        st.a = t.label();
        st.items = multiset;
        lab_.input(t, std::move(multiset));
        trace_line(std::move(st));
    };
    load(p, tube_p(cb_));
    load(q, tube_q(cb_));
    load(r, tube_r(cb_));

    const auto two = [&](script::StmtKind kind, const Tube& a, const Tube& b) {
        script::Statement st;
        st.kind = kind;
        st.a = a.label();
        st.b = b.label();
        trace_line(std::move(st));
    };
    const auto one = [&](script::StmtKind kind, const Tube& a) {
        script::Statement st;
        st.kind = kind;
        st.a = a.label();
        trace_line(std::move(st));
    };

    lab_.merge(p, q);
    two(script::StmtKind::merge, p, q);
    lab_.merge(p, r);
    two(script::StmtKind::merge, p, r);
    lab_.annealing(p, hybridization_rule(cb_), cfg_.mode);
    one(script::StmtKind::anneal, p);
    lab_.denaturation(p);
    one(script::StmtKind::denature, p);

    const std::uint64_t full_length = 20u * static_cast<std::uint64_t>(inst_.vertices);
    lab_.selection(p, full_length, r);
    {
        script::Statement st;
        st.kind = script::StmtKind::select;
        st.a = p.label();
        st.b = r.label();
        st.length = full_length;
        trace_line(std::move(st));
    }

    // The paper drops the vertex-side strands of each denatured assembly
    // without an explicit operation; realize the removal as one separation.
    // Only vertex-side strands can contain a plain half-mer, so they move
    // out to W and the walk strands stay in R.
    std::vector<Strand> plain_halves;
    for (int i = 1; i <= inst_.vertices; ++i)
        plain_halves.push_back(cb_.half[static_cast<std::size_t>(i)]);
    lab_.separation(r, plain_halves, w, MatchRegion::full());
    {
        script::Statement st;
        st.kind = script::StmtKind::separate;
        st.a = r.label();
        st.b = w.label();
        st.patterns = plain_halves;
        trace_line(std::move(st));
    }
    lab_.discard(w);
    one(script::StmtKind::discard, w);
    return r;
}

Tube RppPipeline::phase2_require_edges(Tube walks) {
    Tube cur("L1");
    lab_.copy(walks, cur);
    {
        script::Statement st;
        st.kind = script::StmtKind::copy;
        st.a = walks.label();
        st.b = cur.label();
        trace_line(std::move(st));
    }

    int index = 1;
    for (const auto& e : inst_.required) {
        if (cb_.excluded && e == *cb_.excluded) continue; // present in every walk by construction
        Tube next("L" + std::to_string(++index));
        const std::vector<Strand> patterns{cb_.edge_code.at({e.first, e.second}),
                                           cb_.edge_code.at({e.second, e.first})};
        lab_.separation(cur, patterns, next, MatchRegion::full());
        script::Statement st;
        st.kind = script::StmtKind::separate;
        st.a = cur.label();
        st.b = next.label();
        st.patterns = patterns;
        trace_line(std::move(st));
        cur = std::move(next);
    }
    return cur;
}

std::pair<Tube, bool> RppPipeline::phase3_vertex_check(Tube circuits) {
    Tube n("N"), temp("Temp");
    lab_.merge(n, circuits);
    {
        script::Statement st;
        st.kind = script::StmtKind::merge;
        st.a = n.label();
        st.b = circuits.label();
        trace_line(std::move(st));
    }

    for (int i = 1; i <= inst_.vertices; ++i) {
        const std::vector<Strand> pattern{cb_.vertex_complement(i)};
        lab_.separation(n, pattern, temp, MatchRegion::full());
        {
            script::Statement st;
            st.kind = script::StmtKind::separate;
            st.a = n.label();
            st.b = temp.label();
            st.patterns = pattern;
            trace_line(std::move(st));
        }
        const bool found = lab_.detect(temp);
        {
            script::Statement st;
            st.kind = script::StmtKind::detect;
            st.a = temp.label();
            trace_line(std::move(st));
        }
        if (!found) return {Tube("N"), false};

        // strands left in N lack vertex i and can never become circuits;
        // carry the survivors forward under the paper's tube name
        lab_.discard(n);
        {
            script::Statement st;
            st.kind = script::StmtKind::discard;
            st.a = n.label();
            trace_line(std::move(st));
        }
        lab_.merge(n, temp);
        {
            script::Statement st;
            st.kind = script::StmtKind::merge;
            st.a = n.label();
            st.b = temp.label();
            trace_line(std::move(st));
        }
    }
    return {std::move(n), true};
}

RppPipeline::CostCheck RppPipeline::phase4_cost_check(Tube circuits, std::int64_t c) {
    Tube& n = circuits;
    lab_.append(n, cb_.marker);
    {
        script::Statement st;
        st.kind = script::StmtKind::append;
        st.a = n.label();
        st.strand = cb_.marker;
        trace_line(std::move(st));
    }

    int zi = 0;
    for (const auto& e : free_edges()) {
        Tube z("Z" + std::to_string(++zi));
        const std::vector<Strand> patterns{cb_.edge_code.at({e.first, e.second}),
                                           cb_.edge_code.at({e.second, e.first})};
        lab_.separation(n, patterns, z, MatchRegion::pre_marker(cb_.marker));
        {
            script::Statement st;
            st.kind = script::StmtKind::separate;
            st.a = n.label();
            st.b = z.label();
            st.patterns = patterns;
            st.region = MatchRegion::Kind::pre_marker;
            trace_line(std::move(st));
        }
        const bool found = lab_.detect(z);
        {
            script::Statement st;
            st.kind = script::StmtKind::detect;
            st.a = z.label();
            trace_line(std::move(st));
        }
        if (!found) continue;
        for (const Strand& chunk :
             append_long_chunks(static_cast<std::uint64_t>(inst_.length.at(e)))) {
            lab_.append(z, chunk);
            script::Statement st;
            st.kind = script::StmtKind::append;
            st.a = z.label();
            st.strand = chunk;
            trace_line(std::move(st));
        }
        lab_.merge(n, z);
        {
            script::Statement st;
            st.kind = script::StmtKind::merge;
            st.a = n.label();
            st.b = z.label();
            trace_line(std::move(st));
        }
    }

    // final sweep, counted apart: its trip count is c+1, a function of B
    const auto before = lab_.counts();
    CostCheck out;
    const std::uint64_t base = 20u * static_cast<std::uint64_t>(inst_.vertices) + 20u;
    Tube f("F");
    for (std::int64_t i = 0; i <= c && !out.feasible; ++i) {
        const std::uint64_t want = base + static_cast<std::uint64_t>(c - i);
        lab_.selection(n, want, f);
        {
            script::Statement st;
            st.kind = script::StmtKind::select;
            st.a = n.label();
            st.b = f.label();
            st.length = want;
            trace_line(std::move(st));
        }
        const bool found = lab_.detect(f);
        {
            script::Statement st;
            st.kind = script::StmtKind::detect;
            st.a = f.label();
            trace_line(std::move(st));
        }
        if (found) {
            out.feasible = true;
            out.strand = f.items().front().strand;
        }
    }
    sweep_selections_ = lab_.counts().selections - before.selections;
    sweep_detects_ = lab_.counts().detects - before.detects;
    return out;
}

Decision solve(const RppInstance& instance, const PipelineConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    const RppInstance valid = validate(instance);
    if (cfg.mode == AnnealMode::literal && valid.vertices > 4)
        throw ValidationError("literal-mode-size",
                              "literal annealing enumerates raw nucleotide combinations and is "
                              "limited to 4 vertices; use assembly mode");

    const Renumbering ren = dfs_renumber(valid, 1);
    const RppInstance& g = ren.instance;

    // Every produced cycle traverses the anchor edge, so its length is spent
    // budget even when the required set was empty.
    std::int64_t c = free_budget(g);
    const auto anchor = anchor_edge(g);
    if (anchor && g.required.count(*anchor) == 0) c -= g.length.at(*anchor);

    Decision d;
    const auto stamp = [&] {
        d.stats.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();
    };
    if (c < 0) { // cannot afford the required edges: NO before any tube work
        stamp();
        return d;
    }

    const Codebook cb = build_codebook(g, cfg.seed);
    RppPipeline pipe(g, cb, cfg);

    Tube walks = pipe.phase1_generate();
    Tube with_required = pipe.phase2_require_edges(std::move(walks));
    auto [survivors, all_vertices] = pipe.phase3_vertex_check(std::move(with_required));
    RppPipeline::CostCheck cost;
    if (all_vertices) cost = pipe.phase4_cost_check(std::move(survivors), c);

    if (cost.feasible) {
        d.answer = Answer::yes;
        d.witness_strand = cost.strand;
        if (cfg.witness && cost.strand) {
            if (auto walk = decode_walk(*cost.strand, cb)) {
                std::vector<VertexId> original;
                original.reserve(walk->size());
                for (VertexId w : *walk)
                    original.push_back(ren.to_original[static_cast<std::size_t>(w)]);
                d.witness = canonical_cycle(std::move(original));
                std::int64_t total = 0;
                for (std::size_t i = 0; i < d.witness->size(); ++i) {
                    const VertexId a = (*d.witness)[i];
                    const VertexId b = (*d.witness)[(i + 1) % d.witness->size()];
                    total += valid.length.at(edge_key(a, b));
                }
                d.witness_cost = total;
            }
        }
    }

    OpCounts counted = pipe.lab().counts();
    counted.selections -= pipe.sweep_selections();
    counted.detects -= pipe.sweep_detects();
    d.stats.ops = counted;
    d.stats.sweep_selections = pipe.sweep_selections();
    d.stats.sweep_detects = pipe.sweep_detects();
    d.stats.max_distinct = pipe.lab().max_distinct_seen();
    d.trace = pipe.take_trace();
    stamp();
    return d;
}

} // namespace dnapost
