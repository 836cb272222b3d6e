#include "dnapost/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "dnapost/errors.hpp"

namespace dnapost {

using nlohmann::json;

RppInstance instance_from_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("json", std::string("instance is not valid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("vertices") || !root.contains("edges"))
        throw ValidationError("json", "instance needs \"vertices\" and \"edges\" fields");

    RppInstance out;
    try {
        out.vertices = root.at("vertices").get<int>();
        out.budget = root.value("budget", std::int64_t{0});
        for (const auto& e : root.at("edges")) {
            const int u = e.at("u").get<int>();
            const int v = e.at("v").get<int>();
            const EdgeKey k = edge_key(u, v);
            out.edges.push_back(k);
            out.length[k] = e.value("len", std::int64_t{1});
            if (e.value("required", false)) out.required.insert(k);
        }
    } catch (const json::exception& e) {
        throw ValidationError("json", std::string("malformed instance field: ") + e.what());
    }
    return out;
}

std::string instance_to_json(const RppInstance& instance) {
    json edges = json::array();
    for (const auto& e : instance.edges)
        edges.push_back({{"u", e.first},
                         {"v", e.second},
                         {"len", instance.length.at(e)},
                         {"required", instance.required.count(e) != 0}});
    const json root = {
        {"vertices", instance.vertices}, {"edges", edges}, {"budget", instance.budget}};
    return root.dump();
}

namespace {

json stats_json(const PipelineStats& s) {
    return json{{"inputs", s.ops.inputs},
                {"merges", s.ops.merges},
                {"copies", s.ops.copies},
                {"detects", s.ops.detects},
                {"separations", s.ops.separations},
                {"selections", s.ops.selections},
                {"anneals", s.ops.anneals},
                {"denatures", s.ops.denatures},
                {"discards", s.ops.discards},
                {"appends", s.ops.appends},
                {"sweep_selections", s.sweep_selections},
                {"sweep_detects", s.sweep_detects},
                {"ops_excluding_sweep", s.ops_excluding_sweep()},
                {"ops_total", s.ops_total()},
                {"max_distinct_strands", s.max_distinct}};
}

} // namespace

std::string decision_json(const Decision& d) {
    json root;
    root["answer"] = d.answer == Answer::yes ? "YES" : "NO";
    if (d.witness) root["witness"] = *d.witness;
    if (d.witness_cost) root["cost"] = *d.witness_cost;
    root["stats"] = stats_json(d.stats);
    return root.dump();
}

std::string decision_text(const Decision& d) {
    std::ostringstream out;
    out << "answer: " << (d.answer == Answer::yes ? "YES" : "NO") << '\n';
    if (d.witness) {
        out << "witness:";
        for (VertexId v : *d.witness) out << ' ' << v;
        out << '\n';
    }
    if (d.witness_cost) out << "cost: " << *d.witness_cost << '\n';
    const auto& s = d.stats;
    out << "ops: " << s.ops_excluding_sweep() << " (+" << s.sweep_selections + s.sweep_detects
        << " sweep)\n";
    out << "max distinct strands: " << s.max_distinct << '\n';
    out << "wall ms: " << s.wall_ms << '\n';
    return out.str();
}

std::string oracle_json(const OracleResult& r, std::int64_t budget) {
    json root;
    root["answer"] = oracle_decision(r, budget) ? "YES" : "NO";
    root["feasible"] = r.feasible;
    if (r.min_cost) root["min_cost"] = *r.min_cost;
    if (r.best_cycle) root["best_cycle"] = *r.best_cycle;
    return root.dump();
}

std::string oracle_text(const OracleResult& r, std::int64_t budget) {
    std::ostringstream out;
    out << "answer: " << (oracle_decision(r, budget) ? "YES" : "NO") << '\n';
    out << "feasible: " << (r.feasible ? "yes" : "no") << '\n';
    if (r.min_cost) out << "min cost: " << *r.min_cost << '\n';
    if (r.best_cycle) {
        out << "best cycle:";
        for (VertexId v : *r.best_cycle) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

} // namespace dnapost
