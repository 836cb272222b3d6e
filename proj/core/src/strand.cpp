#include "dnapost/strand.hpp"

#include <stdexcept>

namespace dnapost {

std::optional<Nucleotide> nucleotide_from_char(char c) noexcept {
    switch (c) {
        case 'A': return Nucleotide::A;
        case 'C': return Nucleotide::C;
        case 'G': return Nucleotide::G;
        case 'T': return Nucleotide::T;
        default: return std::nullopt;
    }
}

void Strand::push_code(std::uint8_t code) {
    const std::size_t slot = len_ & 3;
    if (slot == 0) packed_.push_back('\0');
    packed_.back() = static_cast<char>(static_cast<std::uint8_t>(packed_.back()) |
                                       (code << (2 * (3 - slot))));
    ++len_;
}

std::optional<Strand> Strand::parse(std::string_view text) {
    Strand s;
    s.packed_.reserve((text.size() + 3) / 4);
    for (char c : text) {
        auto n = nucleotide_from_char(c);
        if (!n) return std::nullopt;
        s.push_code(static_cast<std::uint8_t>(*n));
    }
    return s;
}

Strand Strand::from_string(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!nucleotide_from_char(text[i]))
            throw std::invalid_argument("bad nucleotide '" + std::string(1, text[i]) +
                                        "' at position " + std::to_string(i));
    return *parse(text);
}

Strand Strand::repeated(Nucleotide base, std::size_t n) {
    Strand s;
    s.packed_.reserve((n + 3) / 4);
    for (std::size_t i = 0; i < n; ++i) s.push_code(static_cast<std::uint8_t>(base));
    return s;
}

Nucleotide Strand::at(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("strand index");
    return static_cast<Nucleotide>(code_at(i));
}

std::string Strand::str() const {
    std::string out;
    unpack_into(out);
    return out;
}

void Strand::unpack_into(std::string& out) const {
    out.clear();
    out.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i) out.push_back("ACGT"[code_at(i)]);
}

Strand Strand::complement() const {
    Strand out;
    out.len_ = len_;
    out.packed_.resize(packed_.size());
    for (std::size_t i = 0; i < packed_.size(); ++i)
        out.packed_[i] = static_cast<char>(~static_cast<std::uint8_t>(packed_[i]));
    // keep the unused tail bits zero so ordering stays canonical
    if (const std::size_t rem = len_ & 3; rem != 0 && !out.packed_.empty()) {
        const std::uint8_t mask = static_cast<std::uint8_t>(0xFFu << (2 * (4 - rem)));
        out.packed_.back() = static_cast<char>(static_cast<std::uint8_t>(out.packed_.back()) & mask);
    }
    return out;
}

bool Strand::contains(const Strand& pattern) const {
    if (pattern.empty()) return true;
    if (pattern.size() > size()) return false;
    std::string hay, needle;
    unpack_into(hay);
    pattern.unpack_into(needle);
    return hay.find(needle) != std::string::npos;
}

Strand concat(const Strand& a, const Strand& b) {
    Strand out = a;
    for (std::size_t i = 0; i < b.len_; ++i) out.push_code(b.code_at(i));
    return out;
}

Strand concat(const std::vector<Strand>& parts) {
    Strand out;
    for (const auto& p : parts)
        for (std::size_t i = 0; i < p.len_; ++i) out.push_code(p.code_at(i));
    return out;
}

} // namespace dnapost
