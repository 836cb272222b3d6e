#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dnapost/strand.hpp"

namespace dnapost {

// Strand multiplicities are unbounded nonnegative integers; repeated
// copy+merge doubles them, so a fixed-width count would silently wrap.
using Count = boost::multiprecision::cpp_int;

struct TubeEntry {
    Strand strand;
    Count count;            // >= 1 for present strands
    std::uint64_t paired = 0; // copies currently hybridized into a duplex
};

// A test tube: a multiset of single strands. Contents are kept sorted by
// strand so every operation is deterministic and dumps are canonical.
// Duplexes are never stored as objects; annealing adds both constituent
// strands and marks them paired, denaturation erases the marks.
class Tube {
public:
    Tube() = default;
    explicit Tube(std::string label) : label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }
    bool empty() const noexcept { return items_.empty(); }
    std::size_t distinct() const noexcept { return items_.size(); }
    Count total() const;
    const std::vector<TubeEntry>& items() const noexcept { return items_; }

    // Canonical serialization: one "<multiplicity> <strand>" line per
    // distinct strand, sorted lexicographically. Bit-exact for golden tests.
    std::string dump() const;

private:
    friend class Lab;
    std::string label_ = "T";
    std::vector<TubeEntry> items_; // sorted by strand, strictly increasing

    void merge_in(std::vector<TubeEntry>&& batch); // batch sorted+unique
};

enum class AnnealMode { literal, assembly };

// Codebook-derived joins that make assembly-mode annealing well defined:
// which 20-mer acts as a chain unit for which vertex, which complement
// 20-mer bridges which ordered vertex pair, and which complement half-mers
// close an assembly's ends. max_span bounds each assembled chain; without
// it the simulated soup would grow walks forever.
struct HybridizationRule {
    int half_length = 10;
    std::uint64_t max_span = 0;
    std::map<Strand, int> vertex_units;
    std::map<Strand, std::pair<int, int>> bridge_units;
    std::map<Strand, int> cap_units;
};

// Where separation patterns may match: the whole strand, or only the prefix
// before the first occurrence of the marker. Phase 4 of the postman pipeline
// uses pre-marker matching so appended length filler can never fake an edge.
struct MatchRegion {
    enum class Kind { full, pre_marker };
    Kind kind = Kind::full;
    Strand marker;

    static MatchRegion full() { return {}; }
    static MatchRegion pre_marker(Strand marker) {
        return {Kind::pre_marker, std::move(marker)};
    }
};

// Content of length filler appended by append_long. Only the added length is
// ever inspected, so a fixed repeated base suffices.
struct FillerPolicy {
    Nucleotide base = Nucleotide::A;
};

// The append sequence realizing a total lengthening: floor(total/20)
// twenty-mers plus one remainder strand when total % 20 != 0.
std::vector<Strand> append_long_chunks(std::uint64_t total, const FillerPolicy& filler = {});

struct OpCounts {
    std::uint64_t inputs = 0, merges = 0, copies = 0, detects = 0, separations = 0,
                  selections = 0, anneals = 0, denatures = 0, discards = 0, appends = 0;
    std::uint64_t total() const {
        return inputs + merges + copies + detects + separations + selections + anneals +
               denatures + discards + appends;
    }
};

// Executes the ten tube operations, enforcing the distinct-strand capacity
// cap and keeping per-operation counters. A tube is owned by one operation
// at a time; a Lab itself is not thread safe.
class Lab {
public:
    explicit Lab(std::uint64_t capacity = 10'000'000) : capacity_(capacity) {}

    const OpCounts& counts() const noexcept { return counts_; }
    std::uint64_t capacity() const noexcept { return capacity_; }
    std::uint64_t max_distinct_seen() const noexcept { return max_distinct_; }

    // op 0: load the initial multiset; the tube must be empty.
    void input(Tube& t, std::vector<std::pair<Strand, Count>> multiset);
    // op 1: dst := dst + src, src emptied.
    void merge(Tube& dst, Tube& src);
    // op 2: dst becomes an exact copy of src.
    void copy(const Tube& src, Tube& dst);
    // op 3: true iff the tube holds at least one strand.
    bool detect(const Tube& t);
    // op 4: every strand of `from` containing any pattern (within `region`)
    // moves to `into` with its full multiplicity.
    void separation(Tube& from, const std::vector<Strand>& patterns, Tube& into,
                    const MatchRegion& region = {});
    // op 5: strands of exact length move to `into`.
    void selection(Tube& from, std::uint64_t length, Tube& into);
    // op 6: forms every maximal linear assembly and adds each one's two
    // constituent strands, paired, with multiplicity 1 per distinct assembly.
    void annealing(Tube& t, const HybridizationRule& rule, AnnealMode mode);
    // op 7: dissociates all duplexes; a pair-mark erasing pass.
    void denaturation(Tube& t);
    // op 8: empties the tube.
    void discard(Tube& t);
    // op 9: appends z to every strand; z must be at most 20 nucleotides.
    void append(Tube& t, const Strand& z);

    // Lengthens every strand by exactly `total` nucleotides as a sequence of
    // append() calls: floor(total/20) twenty-mers plus the remainder.
    void append_long(Tube& t, std::uint64_t total, const FillerPolicy& filler = {});

private:
    std::uint64_t capacity_;
    OpCounts counts_;
    std::uint64_t max_distinct_ = 0;

    void after_mutation(const Tube& t, const char* op);
    std::vector<std::pair<Strand, Strand>> assemble_by_rule(const Tube& t,
                                                            const HybridizationRule& rule);
    std::vector<std::pair<Strand, Strand>> assemble_literal(const Tube& t,
                                                            const HybridizationRule& rule);
};

} // namespace dnapost
