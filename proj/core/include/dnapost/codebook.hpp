#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnapost/graph.hpp"
#include "dnapost/strand.hpp"
#include "dnapost/tube.hpp"

namespace dnapost {

// Deterministic, seeded strand encoding of an instance. Every vertex gets a
// 20-mer of two identical 10-mer halves; every edge gets the complement of
// the two concatenated halves, in both orientations; one anchor edge is
// withheld from the edge set and split into its two complement half-mers,
// which close assembled cycles; a marker 20-mer terminates the encoded part
// of a strand before appended length filler.
//
// Generation rejects any candidate half-mer whose acceptance would let some
// codeword (or its complement) occur at an unaligned offset inside any
// two-codeword junction. Substring separations on codeword chains are
// therefore exact: a pattern occurs iff the chain really contains that
// vertex or traverses that edge.
struct Codebook {
    int vertices = 0;
    std::uint64_t seed = 0;
    std::vector<Strand> half;                    // [1..v]; [0] unused
    std::map<std::pair<int, int>, Strand> edge_code; // both orientations of every edge
    std::optional<EdgeKey> excluded;             // anchor edge e' (a<b); nullopt iff no edges
    std::vector<Strand> r_halves;                // complement(half a), complement(half b)
    Strand marker;

    Strand vertex_code(int i) const { return concat(half.at(static_cast<std::size_t>(i)),
                                                    half.at(static_cast<std::size_t>(i))); }
    Strand vertex_complement(int i) const { return vertex_code(i).complement(); }

    std::string dump() const;
    static Codebook parse_dump(const std::string& text);
};

// Builds the codebook for a validated instance. Identical (instance, seed)
// yield byte-identical codebooks; throws CodebookError if rejection sampling
// exhausts its attempt budget.
Codebook build_codebook(const RppInstance& instance, std::uint64_t seed);

// The paper-named input multisets, multiplicity 1 per strand.
std::vector<std::pair<Strand, Count>> tube_p(const Codebook& cb); // vertex codes
std::vector<std::pair<Strand, Count>> tube_q(const Codebook& cb); // edge codes minus anchor
std::vector<std::pair<Strand, Count>> tube_r(const Codebook& cb); // anchor half-mers

HybridizationRule hybridization_rule(const Codebook& cb);

// Inverse of assembly for edge-side strands: parses cap, bridge codes, cap
// (ignoring any post-marker suffix) and returns the closed walk's vertex
// sequence, or nullopt if the strand is not a well-formed walk strand.
class WalkDecoder {
public:
    explicit WalkDecoder(const Codebook& cb);
    std::optional<std::vector<VertexId>> decode(const Strand& s) const;

private:
    const Codebook& cb_;
    std::map<std::string, VertexId> comp_half_;
    std::string marker_;
};

std::optional<std::vector<VertexId>> decode_walk(const Strand& s, const Codebook& cb);

} // namespace dnapost
