#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dnapost {

// The four bases in lexicographic order. Watson-Crick pairing is code ^ 3,
// so A<->T and C<->G, and pairing is an involution by construction.
enum class Nucleotide : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

constexpr Nucleotide pair_of(Nucleotide n) noexcept {
    return static_cast<Nucleotide>(static_cast<std::uint8_t>(n) ^ 3u);
}
constexpr char to_char(Nucleotide n) noexcept { return "ACGT"[static_cast<std::uint8_t>(n)]; }
std::optional<Nucleotide> nucleotide_from_char(char c) noexcept;

// An immutable single DNA strand. Stored 2-bit packed, four bases per byte,
// first base in the high bits; tail bits of the last byte are kept zero so
// that byte comparison plus a length tiebreak is exactly lexicographic
// ACGT order. A strand of length y is a y-mer; the empty strand is the
// identity of concatenation.
class Strand {
public:
    Strand() = default;

    // Strict parse of an uppercase ACGT literal; rejects anything else.
    static std::optional<Strand> parse(std::string_view text);
    // Like parse() but throws std::invalid_argument naming the bad position.
    static Strand from_string(std::string_view text);
    static Strand repeated(Nucleotide base, std::size_t n);

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    Nucleotide at(std::size_t i) const;
    std::string str() const;
    // Appends the unpacked characters to `out` (hot paths reuse one buffer).
    void unpack_into(std::string& out) const;

    // Position-wise Watson-Crick complement, same length, no reversal: the
    // duplex model in this artifact aligns strands positionally.
    Strand complement() const;

    // True iff `pattern` occurs as a contiguous subsequence; the empty
    // pattern always matches.
    bool contains(const Strand& pattern) const;

    friend Strand concat(const Strand& a, const Strand& b);
    friend Strand concat(const std::vector<Strand>& parts);

    friend bool operator==(const Strand& a, const Strand& b) noexcept {
        return a.len_ == b.len_ && a.packed_ == b.packed_;
    }
    friend std::strong_ordering operator<=>(const Strand& a, const Strand& b) noexcept {
        if (int c = a.packed_.compare(b.packed_); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.len_ <=> b.len_;
    }

private:
    std::string packed_;
    std::uint32_t len_ = 0;

    void push_code(std::uint8_t code);
    std::uint8_t code_at(std::size_t i) const noexcept {
        const auto byte = static_cast<std::uint8_t>(packed_[i >> 2]);
        return static_cast<std::uint8_t>((byte >> (2 * (3 - (i & 3)))) & 3u);
    }
};

Strand concat(const Strand& a, const Strand& b);
Strand concat(const std::vector<Strand>& parts);

} // namespace dnapost
