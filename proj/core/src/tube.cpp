#include "dnapost/tube.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "dnapost/errors.hpp"

namespace dnapost {

Count Tube::total() const {
    Count sum = 0;
    for (const auto& e : items_) sum += e.count;
    return sum;
}

std::string Tube::dump() const {
    std::string out;
    for (const auto& e : items_) {
        out += e.count.str();
        out += ' ';
        out += e.strand.str();
        out += '\n';
    }
    return out;
}

void Tube::merge_in(std::vector<TubeEntry>&& batch) {
    if (batch.empty()) return;
    if (items_.empty()) {
        items_ = std::move(batch);
        return;
    }
    std::vector<TubeEntry> merged;
    merged.reserve(items_.size() + batch.size());
    auto a = items_.begin();
    auto b = batch.begin();
    while (a != items_.end() && b != batch.end()) {
        if (a->strand < b->strand) {
            merged.push_back(std::move(*a++));
        } else if (b->strand < a->strand) {
            merged.push_back(std::move(*b++));
        } else {
            a->count += b->count;
            a->paired += b->paired;
            merged.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(items_.end()));
    merged.insert(merged.end(), std::make_move_iterator(b), std::make_move_iterator(batch.end()));
    items_ = std::move(merged);
}

void Lab::after_mutation(const Tube& t, const char* op) {
    max_distinct_ = std::max<std::uint64_t>(max_distinct_, t.distinct());
    if (t.distinct() > capacity_) throw CapacityError(t.label(), op, t.distinct(), capacity_);
}

void Lab::input(Tube& t, std::vector<std::pair<Strand, Count>> multiset) {
    ++counts_.inputs;
    if (!t.empty()) throw std::invalid_argument("input: tube '" + t.label() + "' is not empty");
    std::sort(multiset.begin(), multiset.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<TubeEntry> items;
    items.reserve(multiset.size());
    for (auto& [s, n] : multiset) {
        if (n < 1) throw std::invalid_argument("input: multiplicity must be at least 1");
        if (!items.empty() && items.back().strand == s)
            items.back().count += n;
        else
            items.push_back({std::move(s), std::move(n), 0});
    }
    t.items_ = std::move(items);
    after_mutation(t, "input");
}

void Lab::merge(Tube& dst, Tube& src) {
    ++counts_.merges;
    if (&dst == &src) return;
    dst.merge_in(std::move(src.items_));
    src.items_.clear();
    src.items_.shrink_to_fit();
    after_mutation(dst, "merge");
}

void Lab::copy(const Tube& src, Tube& dst) {
    ++counts_.copies;
    if (&dst == &src) return;
    dst.items_ = src.items_;
    after_mutation(dst, "copy");
}

bool Lab::detect(const Tube& t) {
    ++counts_.detects;
    return !t.empty();
}

void Lab::separation(Tube& from, const std::vector<Strand>& patterns, Tube& into,
                     const MatchRegion& region) {
    ++counts_.separations;
    if (patterns.empty()) throw std::invalid_argument("separation: pattern set must be non-empty");

    std::vector<std::string> needles;
    needles.reserve(patterns.size());
    for (const auto& p : patterns) needles.push_back(p.str());
    std::string marker;
    if (region.kind == MatchRegion::Kind::pre_marker) marker = region.marker.str();

    std::vector<TubeEntry> kept, moved;
    kept.reserve(from.items_.size());
    std::string hay;
    for (auto& e : from.items_) {
        e.strand.unpack_into(hay);
        std::string_view view = hay;
        if (region.kind == MatchRegion::Kind::pre_marker) {
            const auto pos = hay.find(marker);
            if (pos != std::string::npos) view = view.substr(0, pos);
        }
        bool hit = false;
        for (const auto& n : needles)
            if (view.find(n) != std::string_view::npos) {
                hit = true;
                break;
            }
        (hit ? moved : kept).push_back(std::move(e));
    }
    from.items_ = std::move(kept);
    into.merge_in(std::move(moved));
    after_mutation(into, "separation");
}

void Lab::selection(Tube& from, std::uint64_t length, Tube& into) {
    ++counts_.selections;
    std::vector<TubeEntry> kept, moved;
    kept.reserve(from.items_.size());
    for (auto& e : from.items_)
        (e.strand.size() == length ? moved : kept).push_back(std::move(e));
    from.items_ = std::move(kept);
    into.merge_in(std::move(moved));
    after_mutation(into, "selection");
}

void Lab::annealing(Tube& t, const HybridizationRule& rule, AnnealMode mode) {
    ++counts_.anneals;
    auto assemblies = mode == AnnealMode::assembly ? assemble_by_rule(t, rule)
                                                   : assemble_literal(t, rule);
    std::vector<TubeEntry> batch;
    batch.reserve(assemblies.size() * 2);
    for (auto& [x, y] : assemblies) {
        batch.push_back({std::move(x), 1, 1});
        batch.push_back({std::move(y), 1, 1});
    }
    std::sort(batch.begin(), batch.end(),
              [](const TubeEntry& a, const TubeEntry& b) { return a.strand < b.strand; });
    std::vector<TubeEntry> unique;
    unique.reserve(batch.size());
    for (auto& e : batch) {
        if (!unique.empty() && unique.back().strand == e.strand) {
            unique.back().count += e.count;
            unique.back().paired += e.paired;
        } else {
            unique.push_back(std::move(e));
        }
    }
    t.merge_in(std::move(unique));
    after_mutation(t, "annealing");
}

void Lab::denaturation(Tube& t) {
    ++counts_.denatures;
    for (auto& e : t.items_) e.paired = 0;
}

void Lab::discard(Tube& t) {
    ++counts_.discards;
    t.items_.clear();
    t.items_.shrink_to_fit();
}

void Lab::append(Tube& t, const Strand& z) {
    ++counts_.appends;
    if (z.size() > 20)
        throw std::invalid_argument(
            "append: strand of length " + std::to_string(z.size()) +
            " exceeds the 20-nucleotide limit; use append_long");
    if (z.empty()) return;
    for (auto& e : t.items_) e.strand = concat(e.strand, z);
    std::sort(t.items_.begin(), t.items_.end(),
              [](const TubeEntry& a, const TubeEntry& b) { return a.strand < b.strand; });
    after_mutation(t, "append");
}

std::vector<Strand> append_long_chunks(std::uint64_t total, const FillerPolicy& filler) {
    std::vector<Strand> chunks;
    chunks.reserve(total / 20 + 1);
    for (std::uint64_t i = 0; i < total / 20; ++i) chunks.push_back(Strand::repeated(filler.base, 20));
    if (total % 20 != 0) chunks.push_back(Strand::repeated(filler.base, total % 20));
    return chunks;
}

void Lab::append_long(Tube& t, std::uint64_t total, const FillerPolicy& filler) {
    for (const Strand& chunk : append_long_chunks(total, filler)) append(t, chunk);
}

// ---------------------------------------------------------------------------
// assembly-mode annealing: walk the codebook joins.
//
// A maximal linear assembly is an upper chain of vertex units bridged by
// complement units, each overlapping two adjacent half-mer slots, closed at
// both ends by cap half-mers. The two caps must be distinct: they are the
// two halves of the one excluded edge, so a closed assembly corresponds
// exactly to a closed walk that traverses that edge once.
// ---------------------------------------------------------------------------

std::vector<std::pair<Strand, Strand>> Lab::assemble_by_rule(const Tube& t,
                                                             const HybridizationRule& rule) {
    const auto has = [&t](const Strand& s) {
        const auto& items = t.items();
        auto it = std::lower_bound(items.begin(), items.end(), s,
                                   [](const TubeEntry& e, const Strand& k) { return e.strand < k; });
        return it != items.end() && it->strand == s;
    };

    std::vector<int> verts;
    std::map<int, Strand> vcode;
    for (const auto& [code, i] : rule.vertex_units)
        if (has(code)) {
            verts.push_back(i);
            vcode[i] = code;
        }
    std::sort(verts.begin(), verts.end());

    std::map<int, std::vector<int>> adj;
    for (const auto& [code, ij] : rule.bridge_units)
        if (has(code) && vcode.count(ij.first) && vcode.count(ij.second))
            adj[ij.first].push_back(ij.second);
    for (auto& [u, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());

    std::vector<int> caps;
    for (const auto& [half, i] : rule.cap_units)
        if (has(half) && vcode.count(i)) caps.push_back(i);
    std::sort(caps.begin(), caps.end());

    const std::uint64_t unit = 2u * static_cast<std::uint64_t>(rule.half_length);
    const std::uint64_t max_k = (unit == 0 || rule.max_span == 0) ? 0 : rule.max_span / unit;

    std::vector<std::pair<Strand, Strand>> out;
    const std::uint64_t budget = capacity_;
    std::vector<int> walk;

    auto emit = [&](const std::vector<int>& w) {
        std::vector<Strand> parts;
        parts.reserve(w.size());
        for (int i : w) parts.push_back(vcode.at(i));
        Strand upper = concat(parts);
        Strand lower = upper.complement();
        out.emplace_back(std::move(upper), std::move(lower));
        if (t.distinct() + 2 * out.size() > budget)
            throw CapacityError(t.label(), "annealing", t.distinct() + 2 * out.size(), budget);
    };

    // walks start and end at the two distinct cap vertices
    std::function<void(int, int)> grow = [&](int cur, int target) {
        if (walk.size() >= 2 && cur == target) emit(walk);
        if (walk.size() >= max_k) return;
        auto it = adj.find(cur);
        if (it == adj.end()) return;
        for (int next : it->second) {
            walk.push_back(next);
            grow(next, target);
            walk.pop_back();
        }
    };

    for (int s : caps)
        for (int e : caps) {
            if (s == e) continue;
            walk.assign(1, s);
            grow(s, e);
        }
    return out;
}

// ---------------------------------------------------------------------------
// literal-mode annealing: brute force over nucleotide content.
//
// Grows two chains from a common left end, always extending the shorter one
// with any strand species from the tube, requiring complementarity over the
// overlapped region and rejecting coinciding internal nicks (they would
// sever the assembly). A flush state, where both chains have equal length,
// is maximal: any further unit would start a severable junction. The
// half-length units closing the two ends must be distinct species.
// ---------------------------------------------------------------------------

namespace {

char comp_char(char c) {
    switch (c) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        default: return 'C';
    }
}

struct LiteralSearch {
    const std::vector<std::string>& species;
    std::uint64_t max_span;
    std::size_t half_length;
    std::uint64_t budget;
    std::uint64_t existing;
    const std::string& label;
    std::set<std::pair<std::string, std::string>> found;

    struct Chain {
        std::string seq;
        std::vector<std::size_t> ends; // cumulative unit end positions
        std::size_t first_len = 0;
        std::size_t last_len = 0;
    };

    bool complementary(const std::string& unit, std::size_t at, const std::string& other) const {
        const std::size_t stop = std::min(at + unit.size(), other.size());
        for (std::size_t p = at; p < stop; ++p)
            if (comp_char(other[p]) != unit[p - at]) return false;
        return true;
    }

    void record(const Chain& a, const Chain& b) {
        // the assembly's closing half-length units must differ
        std::vector<std::string> closers;
        if (a.first_len == half_length) closers.push_back(a.seq.substr(0, half_length));
        if (b.first_len == half_length) closers.push_back(b.seq.substr(0, half_length));
        if (a.last_len == half_length) closers.push_back(a.seq.substr(a.seq.size() - half_length));
        if (b.last_len == half_length) closers.push_back(b.seq.substr(b.seq.size() - half_length));
        std::sort(closers.begin(), closers.end());
        if (std::adjacent_find(closers.begin(), closers.end()) != closers.end()) return;

        auto key = a.seq <= b.seq ? std::make_pair(a.seq, b.seq) : std::make_pair(b.seq, a.seq);
        found.insert(std::move(key));
        if (existing + 2 * found.size() > budget)
            throw CapacityError(label, "annealing", existing + 2 * found.size(), budget);
    }

    void grow(Chain& a, Chain& b) {
        if (a.seq.size() == b.seq.size()) {
            record(a, b);
            return; // flush is terminal: any extension would sever
        }
        Chain& shorter = a.seq.size() < b.seq.size() ? a : b;
        Chain& longer = a.seq.size() < b.seq.size() ? b : a;
        const std::size_t at = shorter.seq.size();
        // a new nick at `at` must not coincide with an internal nick opposite
        if (at > 0) {
            for (std::size_t e : longer.ends)
                if (e == at && e != longer.seq.size()) return;
        }
        for (const auto& unit : species) {
            if (unit.empty()) continue;
            if (at + unit.size() > max_span) continue;
            if (!complementary(unit, at, longer.seq)) continue;
            const std::size_t prev_last = shorter.last_len;
            shorter.seq += unit;
            shorter.ends.push_back(shorter.seq.size());
            shorter.last_len = unit.size();
            if (shorter.first_len == 0) shorter.first_len = unit.size();
            grow(a, b);
            shorter.seq.resize(shorter.seq.size() - unit.size());
            shorter.ends.pop_back();
            shorter.last_len = prev_last;
            if (shorter.ends.empty()) shorter.first_len = 0;
        }
    }
};

} // namespace

std::vector<std::pair<Strand, Strand>> Lab::assemble_literal(const Tube& t,
                                                             const HybridizationRule& rule) {
    std::vector<std::string> species;
    species.reserve(t.items().size());
    for (const auto& e : t.items())
        if (!e.strand.empty()) species.push_back(e.strand.str());

    LiteralSearch search{species,
                         rule.max_span,
                         static_cast<std::size_t>(rule.half_length),
                         capacity_,
                         t.distinct(),
                         t.label(),
                         {}};

    for (const auto& u0 : species) {
        if (u0.size() > rule.max_span) continue;
        for (const auto& w0 : species) {
            if (w0.size() > rule.max_span) continue;
            LiteralSearch::Chain a{u0, {u0.size()}, u0.size(), u0.size()};
            LiteralSearch::Chain b{w0, {w0.size()}, w0.size(), w0.size()};
            if (!search.complementary(w0, 0, u0)) continue;
            search.grow(a, b);
        }
    }

    std::vector<std::pair<Strand, Strand>> out;
    out.reserve(search.found.size());
    for (const auto& [x, y] : search.found)
        out.emplace_back(Strand::from_string(x), Strand::from_string(y));
    return out;
}

} // namespace dnapost
