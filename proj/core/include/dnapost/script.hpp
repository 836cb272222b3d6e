#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnapost/codebook.hpp"
#include "dnapost/strand.hpp"
#include "dnapost/tube.hpp"

namespace dnapost::script {

enum class StmtKind {
    input,
    merge,
    copy,
    detect,
    separate,
    select,
    anneal,
    denature,
    discard,
    append
};

// One straight-line tube operation. Which fields are meaningful depends on
// the kind; multisets and pattern sets are kept in canonical (sorted,
// coalesced) form so printing is deterministic.
struct Statement {
    StmtKind kind = StmtKind::detect;
    int line = 0;
    std::string a; // first tube
    std::string b; // second tube, when the statement has one
    std::vector<std::pair<Strand, Count>> items;  // INPUT
    std::vector<Strand> patterns;                 // SEPARATE
    Strand strand;                                // APPEND
    std::uint64_t length = 0;                     // SELECT
    MatchRegion::Kind region = MatchRegion::Kind::full;

    void canonicalize();
    friend bool operator==(const Statement&, const Statement&);
};

struct Program {
    std::optional<std::string> codebook_ref; // CODEBOOK header, a dump-file path
    std::vector<Statement> statements;

    friend bool operator==(const Program&, const Program&);
};

struct Diagnostic {
    enum class Category { lexical, syntactic, semantic };
    int line = 0;
    int col = 0;
    Category category = Category::syntactic;
    std::string message;

    std::string to_string(const std::string& file) const;
};

struct ParseResult {
    std::optional<Program> program; // present iff diagnostics is empty
    std::vector<Diagnostic> diagnostics;
};

// Parses a tube script. Comments run from '#' to end of line; blank lines
// are ignored; a CODEBOOK header may appear before the first statement.
ParseResult parse(std::string_view text);

// Canonical text form; parse(print(p)) reproduces p exactly.
std::string print(const Program& p);
std::string print(const Statement& s);

struct DetectEvent {
    std::string tube;
    bool result = false;
    friend bool operator==(const DetectEvent&, const DetectEvent&) = default;
};

// Execution environment: named tubes, the codebook that ANNEAL and PREMARKER
// matching resolve against, and the log of DETECT results.
struct ScriptEnv {
    explicit ScriptEnv(std::uint64_t capacity = 10'000'000, AnnealMode mode = AnnealMode::assembly)
        : lab(capacity), mode(mode) {}

    Lab lab;
    AnnealMode mode;
    std::optional<Codebook> codebook;
    std::map<std::string, Tube> tubes;
    std::vector<DetectEvent> detect_log;
};

// Runs the program against the environment. Tube-module contract violations
// surface as ScriptRuntimeError carrying the statement's line; CapacityError
// propagates unchanged.
void execute(const Program& p, ScriptEnv& env);

} // namespace dnapost::script
