#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnapost/errors.hpp"
#include "dnapost/json_io.hpp"
#include "dnapost/oracle.hpp"
#include "dnapost/pipeline.hpp"
#include "dnapost/script.hpp"

namespace fs = std::filesystem;
using namespace dnapost;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("io", "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("io", "cannot write " + path.string());
    out << text;
}

struct Options {
    std::string instance_path;
    std::string script_path;
    std::uint64_t seed = 0;
    std::string mode = "assembly";
    std::uint64_t cap = 10'000'000;
    bool witness = false;
    std::string format = "json";
    std::string trace_path;
};

PipelineConfig pipeline_config(const Options& opt) {
    PipelineConfig cfg;
    cfg.seed = opt.seed;
    cfg.capacity = opt.cap;
    cfg.mode = opt.mode == "literal" ? AnnealMode::literal : AnnealMode::assembly;
    cfg.witness = opt.witness;
    cfg.trace = !opt.trace_path.empty();
    return cfg;
}

Codebook codebook_for(const RppInstance& instance, std::uint64_t seed) {
    return build_codebook(dfs_renumber(validate(instance)).instance, seed);
}

// The trace file references its codebook dump by file name, resolved
// relative to the script's own directory on replay.
void write_trace(const Options& opt, const std::string& statements, const Codebook& cb) {
    const fs::path trace_path(opt.trace_path);
    const fs::path dump_path = trace_path.string() + ".codebook";
    write_file(dump_path, cb.dump());
    write_file(trace_path, "CODEBOOK " + dump_path.filename().string() + "\n" + statements);
}

int cmd_solve(const Options& opt, bool emit_only) {
    const RppInstance instance = instance_from_json(read_file(opt.instance_path));
    const PipelineConfig cfg = pipeline_config(opt);
    const Decision d = solve(instance, cfg);
    if (cfg.trace) write_trace(opt, d.trace, codebook_for(instance, opt.seed));
    if (!emit_only)
        std::cout << (opt.format == "text" ? decision_text(d) : decision_json(d) + "\n");
    return kExitOk;
}

int cmd_oracle(const Options& opt) {
    const RppInstance instance = validate(instance_from_json(read_file(opt.instance_path)));
    const OracleResult r = bruteforce(instance);
    std::cout << (opt.format == "text" ? oracle_text(r, instance.budget)
                                       : oracle_json(r, instance.budget) + "\n");
    return kExitOk;
}

int cmd_encode(const Options& opt) {
    const RppInstance instance = instance_from_json(read_file(opt.instance_path));
    std::cout << codebook_for(instance, opt.seed).dump();
    return kExitOk;
}

int cmd_run_script(const Options& opt) {
    const fs::path path(opt.script_path);
    const std::string text = read_file(path);
    const auto parsed = script::parse(text);
    if (!parsed.program) {
        for (const auto& diag : parsed.diagnostics)
            std::cerr << diag.to_string(path.string()) << "\n";
        return kExitUsage;
    }

    script::ScriptEnv env(opt.cap,
                          opt.mode == "literal" ? AnnealMode::literal : AnnealMode::assembly);
    if (parsed.program->codebook_ref) {
        const fs::path dump = path.parent_path() / *parsed.program->codebook_ref;
        env.codebook = Codebook::parse_dump(read_file(dump));
    }
    script::execute(*parsed.program, env);

    if (opt.format == "text") {
        for (const auto& ev : env.detect_log)
            std::cout << "DETECT " << ev.tube << ": " << (ev.result ? "YES" : "NO") << "\n";
    } else {
        nlohmann::json log = nlohmann::json::array();
        for (const auto& ev : env.detect_log)
            log.push_back({{"tube", ev.tube}, {"result", ev.result}});
        std::cout << nlohmann::json{{"detects", log}}.dump() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulated DNA computation: Adleman-Lipton tube operations and a "
                 "rural-postman decision pipeline"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("instance", opt.instance_path, "instance JSON file")->required();
        cmd->add_option("--seed", opt.seed, "codeword generation seed");
        cmd->add_option("--mode", opt.mode, "annealing mode")
            ->check(CLI::IsMember({"assembly", "literal"}));
        cmd->add_option("--cap", opt.cap, "max distinct strands per tube");
        cmd->add_flag("--witness", opt.witness, "decode a satisfying circuit on YES");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--trace", opt.trace_path, "write the executed tube script here");
    };

    auto* solve_cmd = app.add_subcommand("solve", "decide an instance with the tube pipeline");
    add_common(solve_cmd);
    auto* oracle_cmd = app.add_subcommand("oracle", "decide an instance by brute force");
    add_common(oracle_cmd);
    auto* encode_cmd = app.add_subcommand("encode", "print the strand codebook");
    add_common(encode_cmd);
    auto* emit_cmd = app.add_subcommand("emit-script", "write a replayable tube script");
    add_common(emit_cmd);
    auto* run_cmd = app.add_subcommand("run-script", "execute a .tube script");
    run_cmd->add_option("script", opt.script_path, "tube script file")->required();
    run_cmd->add_option("--cap", opt.cap, "max distinct strands per tube");
    run_cmd->add_option("--mode", opt.mode, "annealing mode")
        ->check(CLI::IsMember({"assembly", "literal"}));
    run_cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(opt, false);
        if (oracle_cmd->parsed()) return cmd_oracle(opt);
        if (encode_cmd->parsed()) return cmd_encode(opt);
        if (emit_cmd->parsed()) {
            if (opt.trace_path.empty())
                throw ValidationError("usage", "emit-script requires --trace <path>");
            return cmd_solve(opt, true);
        }
        if (run_cmd->parsed()) return cmd_run_script(opt);
    } catch (const CapacityError& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ValidationError& e) {
        std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
        return kExitUsage;
    } catch (const ScriptRuntimeError& e) {
        std::cerr << "script error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CodebookError& e) {
        std::cerr << "codebook error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
