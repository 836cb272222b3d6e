#include "dnapost/codebook.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "dnapost/errors.hpp"

namespace dnapost {

namespace {

constexpr int kHalfLen = 10;
constexpr int kMaxAttempts = 10'000;

std::string comp_str(const std::string& s) {
    std::string out(s.size(), ' ');
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case 'A': out[i] = 'T'; break;
            case 'T': out[i] = 'A'; break;
            case 'C': out[i] = 'G'; break;
            default: out[i] = 'C'; break;
        }
    }
    return out;
}

// Incrementally maintained collision state. `syms` holds every codeword
// half-mer and its complement; `wins` holds every 10-mer window that occurs
// at an unaligned offset inside some junction of two adjacent codeword
// half-mers. Accepting a candidate requires the two sets to stay disjoint.
struct SamplerState {
    std::set<std::string> syms;
    std::set<std::string> wins;

    static void junction_windows(const std::string& a, const std::string& b,
                                 std::vector<std::string>& out) {
        const std::string pair = a + b;
        for (int off = 1; off < kHalfLen; ++off)
            out.push_back(pair.substr(static_cast<std::size_t>(off), kHalfLen));
    }

    bool try_add(const std::string& h, const std::vector<std::vector<std::string>>& new_pairs) {
        const std::string hc = comp_str(h);
        if (syms.count(h) || syms.count(hc)) return false;
        if (wins.count(h) || wins.count(hc)) return false;
        std::vector<std::string> fresh;
        for (const auto& pq : new_pairs) junction_windows(pq[0], pq[1], fresh);
        for (const auto& w : fresh)
            if (w == h || w == hc || syms.count(w)) return false;
        syms.insert(h);
        syms.insert(hc);
        for (auto& w : fresh) wins.insert(std::move(w));
        return true;
    }
};

std::string draw_half(std::mt19937_64& rng) {
    std::string h(kHalfLen, 'A');
    std::uint64_t bits = rng();
    for (int i = 0; i < kHalfLen; ++i) {
        h[static_cast<std::size_t>(i)] = "ACGT"[bits & 3u];
        bits >>= 2;
    }
    return h;
}

} // namespace

Codebook build_codebook(const RppInstance& instance, std::uint64_t seed) {
    Codebook cb;
    cb.vertices = instance.vertices;
    cb.seed = seed;
    cb.half.resize(static_cast<std::size_t>(instance.vertices) + 1);

    std::mt19937_64 rng(seed);
    SamplerState state;
    std::vector<std::string> halves;

    auto sample = [&](auto&& pair_contexts) -> std::string {
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            std::string h = draw_half(rng);
            if (state.try_add(h, pair_contexts(h))) return h;
        }
        throw CodebookError("codeword rejection sampling exhausted " +
                            std::to_string(kMaxAttempts) + " attempts");
    };

    for (int i = 1; i <= instance.vertices; ++i) {
        auto contexts = [&halves](const std::string& h) {
            // chains place any half next to any other, and vertex codes
            // double their own half; cover both strand orientations
            std::vector<std::vector<std::string>> pairs;
            const std::string hc = comp_str(h);
            pairs.push_back({h, h});
            pairs.push_back({hc, hc});
            for (const auto& x : halves) {
                const std::string xc = comp_str(x);
                pairs.push_back({h, x});
                pairs.push_back({x, h});
                pairs.push_back({hc, xc});
                pairs.push_back({xc, hc});
            }
            return pairs;
        };
        std::string h = sample(contexts);
        cb.half[static_cast<std::size_t>(i)] = Strand::from_string(h);
        halves.push_back(std::move(h));
    }

    // marker halves: the marker follows a complement half-mer chain, so the
    // relevant junctions are (complement half, m1) and (m1, m2)
    auto m1_contexts = [&halves](const std::string& h) {
        std::vector<std::vector<std::string>> pairs;
        for (const auto& x : halves) pairs.push_back({comp_str(x), h});
        return pairs;
    };
    const std::string m1 = sample(m1_contexts);
    auto m2_contexts = [&m1](const std::string& h) {
        return std::vector<std::vector<std::string>>{{m1, h}};
    };
    const std::string m2 = sample(m2_contexts);
    cb.marker = Strand::from_string(m1 + m2);

    for (const auto& e : instance.edges) {
        const Strand& ha = cb.half[static_cast<std::size_t>(e.first)];
        const Strand& hb = cb.half[static_cast<std::size_t>(e.second)];
        cb.edge_code[{e.first, e.second}] = concat(ha, hb).complement();
        cb.edge_code[{e.second, e.first}] = concat(hb, ha).complement();
    }

    if (const auto anchor = anchor_edge(instance)) {
        cb.excluded = *anchor;
        cb.r_halves = {cb.half[static_cast<std::size_t>(anchor->first)].complement(),
                       cb.half[static_cast<std::size_t>(anchor->second)].complement()};
    }
    return cb;
}

std::vector<std::pair<Strand, Count>> tube_p(const Codebook& cb) {
    std::vector<std::pair<Strand, Count>> out;
    for (int i = 1; i <= cb.vertices; ++i) out.emplace_back(cb.vertex_code(i), 1);
    return out;
}

std::vector<std::pair<Strand, Count>> tube_q(const Codebook& cb) {
    std::vector<std::pair<Strand, Count>> out;
    for (const auto& [ij, code] : cb.edge_code) {
        if (cb.excluded && edge_key(ij.first, ij.second) == *cb.excluded) continue;
        out.emplace_back(code, 1);
    }
    return out;
}

std::vector<std::pair<Strand, Count>> tube_r(const Codebook& cb) {
    std::vector<std::pair<Strand, Count>> out;
    for (const auto& h : cb.r_halves) out.emplace_back(h, 1);
    return out;
}

HybridizationRule hybridization_rule(const Codebook& cb) {
    HybridizationRule rule;
    rule.half_length = kHalfLen;
    rule.max_span = 2u * kHalfLen * static_cast<std::uint64_t>(cb.vertices);
    for (int i = 1; i <= cb.vertices; ++i) rule.vertex_units[cb.vertex_code(i)] = i;
    for (const auto& [ij, code] : cb.edge_code) rule.bridge_units[code] = ij;
    if (cb.excluded) {
        rule.cap_units[cb.half[static_cast<std::size_t>(cb.excluded->first)].complement()] =
            cb.excluded->first;
        rule.cap_units[cb.half[static_cast<std::size_t>(cb.excluded->second)].complement()] =
            cb.excluded->second;
    }
    return rule;
}

WalkDecoder::WalkDecoder(const Codebook& cb) : cb_(cb), marker_(cb.marker.str()) {
    for (int i = 1; i <= cb.vertices; ++i)
        comp_half_[cb.half[static_cast<std::size_t>(i)].complement().str()] = i;
}

std::optional<std::vector<VertexId>> WalkDecoder::decode(const Strand& s) const {
    if (!cb_.excluded) return std::nullopt;
    std::string text = s.str();
    if (!marker_.empty()) {
        const auto pos = text.find(marker_);
        if (pos != std::string::npos) text.resize(pos);
    }
    const std::size_t len = text.size();
    if (len < 40 || len % 20 != 0) return std::nullopt;
    const std::size_t k = len / 20;

    auto vertex_at = [&](std::size_t off) -> VertexId {
        auto it = comp_half_.find(text.substr(off, kHalfLen));
        return it == comp_half_.end() ? 0 : it->second;
    };

    std::vector<VertexId> walk;
    walk.reserve(k);
    VertexId cur = vertex_at(0);
    if (cur == 0) return std::nullopt;
    walk.push_back(cur);
    for (std::size_t j = 0; j + 1 < k; ++j) {
        const std::size_t off = 10 + 20 * j;
        const VertexId u = vertex_at(off);
        const VertexId w = vertex_at(off + kHalfLen);
        if (u == 0 || w == 0 || u != cur) return std::nullopt;
        if (!cb_.edge_code.count({u, w})) return std::nullopt;
        cur = w;
        walk.push_back(w);
    }
    if (vertex_at(len - kHalfLen) != cur) return std::nullopt;
    if (edge_key(walk.front(), walk.back()) != *cb_.excluded) return std::nullopt;
    return walk;
}

std::optional<std::vector<VertexId>> decode_walk(const Strand& s, const Codebook& cb) {
    return WalkDecoder(cb).decode(s);
}

std::string Codebook::dump() const {
    std::ostringstream out;
    for (int i = 1; i <= vertices; ++i)
        out << "vertex " << i << ": " << vertex_code(i).str() << '\n';
    for (const auto& [ij, code] : edge_code)
        out << "edge (" << ij.first << "," << ij.second << "): " << code.str() << '\n';
    if (excluded) out << "excluded: (" << excluded->first << "," << excluded->second << ")\n";
    out << "marker: " << marker.str() << '\n';
    return out.str();
}

Codebook Codebook::parse_dump(const std::string& text) {
    Codebook cb;
    std::istringstream in(text);
    std::string line;
    std::map<int, Strand> codes;
    std::map<std::pair<int, int>, Strand> edges;
    std::optional<EdgeKey> excluded;
    std::optional<Strand> marker;

    auto fail = [](const std::string& why) -> Codebook {
        throw CodebookError("codebook dump: " + why);
    };
    auto strand20 = [&fail](const char* text, const std::string& where) {
        auto s = Strand::parse(text);
        if (!s || s->size() != 20) fail("bad 20-mer in " + where);
        return *s;
    };

    char code[64];
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int u = 0, v = 0;
        if (std::sscanf(line.c_str(), "vertex %d: %63s", &u, code) == 2) {
            codes[u] = strand20(code, line);
        } else if (std::sscanf(line.c_str(), "edge (%d,%d): %63s", &u, &v, code) == 3) {
            edges[{u, v}] = strand20(code, line);
        } else if (std::sscanf(line.c_str(), "excluded: (%d,%d)", &u, &v) == 2) {
            excluded = edge_key(u, v);
        } else if (std::sscanf(line.c_str(), "marker: %63s", code) == 1) {
            marker = strand20(code, line);
        } else {
            return fail("unrecognized line: " + line);
        }
    }

    if (!marker) return fail("missing marker line");
    cb.vertices = static_cast<int>(codes.size());
    cb.half.resize(codes.size() + 1);
    for (const auto& [i, code] : codes) {
        if (i < 1 || i > cb.vertices) return fail("vertex indices must be 1..v without gaps");
        const std::string s = code.str();
        if (s.substr(0, 10) != s.substr(10)) return fail("vertex code halves differ: " + s);
        cb.half[static_cast<std::size_t>(i)] = Strand::from_string(s.substr(0, 10));
    }
    for (const auto& [ij, code] : edges) {
        if (ij.first < 1 || ij.first > cb.vertices || ij.second < 1 || ij.second > cb.vertices ||
            ij.first == ij.second)
            return fail("edge endpoints out of range");
        const Strand expect = concat(cb.half[static_cast<std::size_t>(ij.first)],
                                     cb.half[static_cast<std::size_t>(ij.second)])
                                  .complement();
        if (!(code == expect)) return fail("edge code does not match vertex halves");
        cb.edge_code[ij] = code;
    }
    if (excluded) {
        if (!cb.edge_code.count({excluded->first, excluded->second}))
            return fail("excluded edge is not among the edge lines");
        cb.excluded = excluded;
        cb.r_halves = {cb.half[static_cast<std::size_t>(excluded->first)].complement(),
                       cb.half[static_cast<std::size_t>(excluded->second)].complement()};
    }
    cb.marker = *marker;
    return cb;
}

} // namespace dnapost
