#include "dnapost/script.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dnapost/errors.hpp"

namespace dnapost::script {

void Statement::canonicalize() {
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<Strand, Count>> merged;
    for (auto& it : items) {
        if (!merged.empty() && merged.back().first == it.first)
            merged.back().second += it.second;
        else
            merged.push_back(std::move(it));
    }
    items = std::move(merged);
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
}

bool operator==(const Statement& x, const Statement& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.items == y.items &&
           x.patterns == y.patterns && x.strand == y.strand && x.length == y.length &&
           x.region == y.region;
}

bool operator==(const Program& x, const Program& y) {
    return x.codebook_ref == y.codebook_ref && x.statements == y.statements;
}

std::string Diagnostic::to_string(const std::string& file) const {
    static const char* names[] = {"lexical", "syntactic", "semantic"};
    return file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
           names[static_cast<int>(category)] + ": " + message;
}

namespace {

struct Token {
    enum class Kind { word, lbrace, rbrace, comma };
    Kind kind;
    std::string text;
    int col = 0; // 1-based
};

std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '{' || c == '}' || c == ',') {
            tokens.push_back({c == '{'   ? Token::Kind::lbrace
                              : c == '}' ? Token::Kind::rbrace
                                         : Token::Kind::comma,
                              std::string(1, c), static_cast<int>(i) + 1});
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '{' && line[j] != '}' && line[j] != ',' && line[j] != '#')
            ++j;
        tokens.push_back({Token::Kind::word, std::string(line.substr(i, j - i)),
                          static_cast<int>(i) + 1});
        i = j;
    }
    return tokens;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

struct LineParser {
    const std::vector<Token>& tokens;
    int line;
    std::vector<Diagnostic>& diags;
    std::size_t pos = 0;
    bool failed = false;

    void error(Diagnostic::Category cat, int col, const std::string& msg) {
        if (!failed) diags.push_back({line, col, cat, msg});
        failed = true;
    }
    int here_col() const {
        if (pos < tokens.size()) return tokens[pos].col;
        return tokens.empty() ? 1 : tokens.back().col + static_cast<int>(tokens.back().text.size());
    }
    const Token* next(Token::Kind kind, const std::string& what) {
        if (failed) return nullptr;
        if (pos >= tokens.size() || tokens[pos].kind != kind) {
            error(Diagnostic::Category::syntactic, here_col(), "expected " + what);
            return nullptr;
        }
        return &tokens[pos++];
    }
    std::string tube_name() {
        const Token* t = next(Token::Kind::word, "a tube name");
        if (!t) return {};
        if (!is_identifier(t->text)) {
            error(Diagnostic::Category::syntactic, t->col, "'" + t->text + "' is not a valid tube name");
            return {};
        }
        return t->text;
    }
    Strand strand_literal(const std::string& text, int col) {
        for (std::size_t k = 0; k < text.size(); ++k) {
            if (!nucleotide_from_char(text[k])) {
                error(Diagnostic::Category::lexical, col + static_cast<int>(k),
                      "bad nucleotide '" + std::string(1, text[k]) + "' in strand literal");
                return {};
            }
        }
        return *Strand::parse(text);
    }
    Strand strand_arg() {
        const Token* t = next(Token::Kind::word, "a strand literal");
        if (!t) return {};
        return strand_literal(t->text, t->col);
    }
    std::uint64_t nat_arg(const std::string& what) {
        const Token* t = next(Token::Kind::word, what);
        if (!t) return 0;
        if (t->text.empty() || !std::all_of(t->text.begin(), t->text.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            })) {
            error(Diagnostic::Category::syntactic, t->col, "expected " + what);
            return 0;
        }
        try {
            return std::stoull(t->text);
        } catch (const std::out_of_range&) {
            error(Diagnostic::Category::syntactic, t->col, what + " out of range");
            return 0;
        }
    }
    // {count 'x' strand, ...}; count defaults to 1
    void multiset_arg(std::vector<std::pair<Strand, Count>>& items) {
        if (!next(Token::Kind::lbrace, "'{'")) return;
        if (!failed && pos < tokens.size() && tokens[pos].kind == Token::Kind::rbrace) {
            ++pos;
            return;
        }
        while (!failed) {
            const Token* t = next(Token::Kind::word, "a multiset item");
            if (!t) return;
            std::string text = t->text;
            Count count = 1;
            if (const auto x = text.find('x'); x != std::string::npos &&
                                               x > 0 &&
                                               std::all_of(text.begin(), text.begin() + static_cast<long>(x),
                                                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                count = Count(text.substr(0, x));
                text = text.substr(x + 1);
                if (count < 1) {
                    error(Diagnostic::Category::syntactic, t->col, "multiplicity must be at least 1");
                    return;
                }
            }
            Strand s = strand_literal(text, t->col);
            if (failed) return;
            items.emplace_back(std::move(s), std::move(count));
            if (pos < tokens.size() && tokens[pos].kind == Token::Kind::comma) {
                ++pos;
                continue;
            }
            next(Token::Kind::rbrace, "',' or '}'");
            return;
        }
    }
    void pattern_arg(std::vector<Strand>& patterns) {
        if (!next(Token::Kind::lbrace, "'{'")) return;
        while (!failed) {
            Strand s = strand_arg();
            if (failed) return;
            if (s.empty()) {
                error(Diagnostic::Category::syntactic, here_col(), "empty pattern");
                return;
            }
            patterns.push_back(std::move(s));
            if (pos < tokens.size() && tokens[pos].kind == Token::Kind::comma) {
                ++pos;
                continue;
            }
            next(Token::Kind::rbrace, "',' or '}'");
            return;
        }
    }
    void finish() {
        if (!failed && pos < tokens.size())
            error(Diagnostic::Category::syntactic, tokens[pos].col,
                  "unexpected '" + tokens[pos].text + "' after statement");
    }
};

} // namespace

ParseResult parse(std::string_view text) {
    ParseResult result;
    Program program;
    bool seen_statement = false;

    // declared-by-destination-or-INPUT check
    std::vector<std::string> declared;
    auto declare = [&declared](const std::string& name) {
        if (std::find(declared.begin(), declared.end(), name) == declared.end())
            declared.push_back(name);
    };
    auto require_declared = [&](const std::string& name, int line, int col) {
        if (!name.empty() &&
            std::find(declared.begin(), declared.end(), name) == declared.end())
            result.diagnostics.push_back({line, col, Diagnostic::Category::semantic,
                                          "tube '" + name + "' used before it holds anything"});
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto tokens = tokenize_line(raw);
        if (tokens.empty()) continue;

        if (tokens[0].kind == Token::Kind::word && tokens[0].text == "CODEBOOK") {
            if (seen_statement || program.codebook_ref) {
                result.diagnostics.push_back({line_no, tokens[0].col,
                                              Diagnostic::Category::syntactic,
                                              "CODEBOOK header must appear once, before any statement"});
            } else if (tokens.size() != 2 || tokens[1].kind != Token::Kind::word) {
                result.diagnostics.push_back({line_no, tokens[0].col,
                                              Diagnostic::Category::syntactic,
                                              "CODEBOOK expects a single file path"});
            } else {
                program.codebook_ref = tokens[1].text;
            }
            continue;
        }

        LineParser lp{tokens, line_no, result.diagnostics};
        const Token* head = lp.next(Token::Kind::word, "a statement keyword");
        if (!head) continue;
        const std::string& kw = head->text;
        Statement st;
        st.line = line_no;
        const int head_col = head->col;

        if (kw == "INPUT") {
            st.kind = StmtKind::input;
            st.a = lp.tube_name();
            lp.multiset_arg(st.items);
            lp.finish();
            if (!lp.failed) declare(st.a);
        } else if (kw == "MERGE") {
            st.kind = StmtKind::merge;
            st.a = lp.tube_name();
            st.b = lp.tube_name();
            lp.finish();
            if (!lp.failed) {
                require_declared(st.b, line_no, head_col);
                declare(st.a);
            }
        } else if (kw == "COPY") {
            st.kind = StmtKind::copy;
            st.a = lp.tube_name();
            st.b = lp.tube_name();
            lp.finish();
            if (!lp.failed) {
                require_declared(st.a, line_no, head_col);
                declare(st.b);
            }
        } else if (kw == "DETECT") {
            st.kind = StmtKind::detect;
            st.a = lp.tube_name();
            lp.finish();
            if (!lp.failed) require_declared(st.a, line_no, head_col);
        } else if (kw == "SEPARATE") {
            st.kind = StmtKind::separate;
            st.a = lp.tube_name();
            lp.pattern_arg(st.patterns);
            st.b = lp.tube_name();
            if (!lp.failed && lp.pos < lp.tokens.size()) {
                const Token& t = lp.tokens[lp.pos];
                if (t.kind == Token::Kind::word && (t.text == "FULL" || t.text == "PREMARKER")) {
                    st.region = t.text == "FULL" ? MatchRegion::Kind::full
                                                 : MatchRegion::Kind::pre_marker;
                    ++lp.pos;
                }
            }
            lp.finish();
            if (!lp.failed) {
                require_declared(st.a, line_no, head_col);
                declare(st.b);
            }
        } else if (kw == "SELECT") {
            st.kind = StmtKind::select;
            st.a = lp.tube_name();
            st.length = lp.nat_arg("a strand length");
            st.b = lp.tube_name();
            lp.finish();
            if (!lp.failed) {
                require_declared(st.a, line_no, head_col);
                declare(st.b);
            }
        } else if (kw == "ANNEAL" || kw == "DENATURE" || kw == "DISCARD") {
            st.kind = kw == "ANNEAL"     ? StmtKind::anneal
                      : kw == "DENATURE" ? StmtKind::denature
                                         : StmtKind::discard;
            st.a = lp.tube_name();
            lp.finish();
            if (!lp.failed) require_declared(st.a, line_no, head_col);
        } else if (kw == "APPEND") {
            st.kind = StmtKind::append;
            st.a = lp.tube_name();
            st.strand = lp.strand_arg();
            lp.finish();
            if (!lp.failed) require_declared(st.a, line_no, head_col);
        } else {
            lp.error(Diagnostic::Category::syntactic, head->col,
                     "unknown statement '" + kw + "'");
        }

        if (!lp.failed) {
            st.canonicalize();
            program.statements.push_back(std::move(st));
            seen_statement = true;
        }
    }

    if (result.diagnostics.empty()) result.program = std::move(program);
    return result;
}

std::string print(const Statement& s) {
    std::ostringstream out;
    switch (s.kind) {
        case StmtKind::input: {
            out << "INPUT " << s.a << " {";
            bool first = true;
            for (const auto& [strand, count] : s.items) {
                if (!first) out << ", ";
                first = false;
                if (count != 1) out << count.str() << 'x';
                out << strand.str();
            }
            out << '}';
            break;
        }
        case StmtKind::merge:
            out << "MERGE " << s.a << ' ' << s.b;
            break;
        case StmtKind::copy:
            out << "COPY " << s.a << ' ' << s.b;
            break;
        case StmtKind::detect:
            out << "DETECT " << s.a;
            break;
        case StmtKind::separate: {
            out << "SEPARATE " << s.a << " {";
            bool first = true;
            for (const auto& p : s.patterns) {
                if (!first) out << ", ";
                first = false;
                out << p.str();
            }
            out << "} " << s.b << ' '
                << (s.region == MatchRegion::Kind::full ? "FULL" : "PREMARKER");
            break;
        }
        case StmtKind::select:
            out << "SELECT " << s.a << ' ' << s.length << ' ' << s.b;
            break;
        case StmtKind::anneal:
            out << "ANNEAL " << s.a;
            break;
        case StmtKind::denature:
            out << "DENATURE " << s.a;
            break;
        case StmtKind::discard:
            out << "DISCARD " << s.a;
            break;
        case StmtKind::append:
            out << "APPEND " << s.a << ' ' << s.strand.str();
            break;
    }
    return out.str();
}

std::string print(const Program& p) {
    std::string out;
    if (p.codebook_ref) out += "CODEBOOK " + *p.codebook_ref + "\n";
    for (const auto& s : p.statements) {
        out += print(s);
        out += '\n';
    }
    return out;
}

namespace {

Tube& tube_ref(ScriptEnv& env, const std::string& name, bool may_create, int line) {
    auto it = env.tubes.find(name);
    if (it != env.tubes.end()) return it->second;
    if (!may_create)
        throw ScriptRuntimeError(line, "tube '" + name + "' does not exist yet");
    return env.tubes.emplace(name, Tube(name)).first->second;
}

} // namespace

void execute(const Program& p, ScriptEnv& env) {
    for (const auto& st : p.statements) {
        try {
            switch (st.kind) {
                case StmtKind::input:
                    env.lab.input(tube_ref(env, st.a, true, st.line), st.items);
                    break;
                case StmtKind::merge: {
                    Tube& src = tube_ref(env, st.b, false, st.line);
                    env.lab.merge(tube_ref(env, st.a, true, st.line), src);
                    break;
                }
                case StmtKind::copy: {
                    Tube& src = tube_ref(env, st.a, false, st.line);
                    env.lab.copy(src, tube_ref(env, st.b, true, st.line));
                    break;
                }
                case StmtKind::detect:
                    env.detect_log.push_back(
                        {st.a, env.lab.detect(tube_ref(env, st.a, false, st.line))});
                    break;
                case StmtKind::separate: {
                    MatchRegion region;
                    if (st.region == MatchRegion::Kind::pre_marker) {
                        if (!env.codebook)
                            throw ScriptRuntimeError(st.line,
                                                     "PREMARKER matching needs a CODEBOOK binding");
                        region = MatchRegion::pre_marker(env.codebook->marker);
                    }
                    Tube& from = tube_ref(env, st.a, false, st.line);
                    env.lab.separation(from, st.patterns, tube_ref(env, st.b, true, st.line),
                                       region);
                    break;
                }
                case StmtKind::select: {
                    Tube& from = tube_ref(env, st.a, false, st.line);
                    env.lab.selection(from, st.length, tube_ref(env, st.b, true, st.line));
                    break;
                }
                case StmtKind::anneal: {
                    if (!env.codebook)
                        throw ScriptRuntimeError(st.line, "ANNEAL needs a CODEBOOK binding");
                    env.lab.annealing(tube_ref(env, st.a, false, st.line),
                                      hybridization_rule(*env.codebook), env.mode);
                    break;
                }
                case StmtKind::denature:
                    env.lab.denaturation(tube_ref(env, st.a, false, st.line));
                    break;
                case StmtKind::discard:
                    env.lab.discard(tube_ref(env, st.a, false, st.line));
                    break;
                case StmtKind::append:
                    env.lab.append(tube_ref(env, st.a, false, st.line), st.strand);
                    break;
            }
        } catch (const std::invalid_argument& e) {
            throw ScriptRuntimeError(st.line, e.what());
        }
    }
}

} // namespace dnapost::script
