#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dnainfo {

/// The four DNA bases. The underlying values are the 2-bit storage codes;
/// complementary bases (A/T, G/C) differ exactly in the low bit.
enum class Nucleotide : std::uint8_t { A = 0, T = 1, G = 2, C = 3 };

constexpr std::uint8_t code_of(Nucleotide base) noexcept {
    return static_cast<std::uint8_t>(base);
}

constexpr Nucleotide nucleotide_of(std::uint8_t code) noexcept {
    return static_cast<Nucleotide>(code & 3u);
}

constexpr Nucleotide complement(Nucleotide base) noexcept {
    return nucleotide_of(code_of(base) ^ 1u);
}

constexpr char to_char(Nucleotide base) noexcept {
    constexpr char chars[4] = {'A', 'T', 'G', 'C'};
    return chars[code_of(base)];
}

/// Case-insensitive. Returns nullopt for anything outside {A,T,G,C}.
std::optional<Nucleotide> nucleotide_from_char(char c) noexcept;

/// An immutable DNA sequence with a text label. Bases are stored packed at
/// 2 bits each so per-position code extraction is O(1).
class DnaSequence {
public:
    DnaSequence() = default;

    /// Validates and canonicalizes `bases` (case-insensitive input).
    /// Throws ParseError naming the 1-based offset of the first bad character.
    explicit DnaSequence(std::string_view bases, std::string id = {});

    std::size_t length() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }
    const std::string& id() const noexcept { return id_; }

    /// 2-bit code of the base at 0-based position i.
    std::uint8_t code(std::size_t i) const noexcept {
        return (packed_[i >> 2] >> ((i & 3u) * 2u)) & 3u;
    }

    Nucleotide base(std::size_t i) const noexcept { return nucleotide_of(code(i)); }

    /// Uppercase text form; round-trips losslessly through the constructor.
    std::string to_string() const;

    /// Copy of this sequence relabeled with a new id.
    DnaSequence with_id(std::string id) const {
        DnaSequence copy = *this;
        copy.id_ = std::move(id);
        return copy;
    }

    /// Content equality; the id label does not participate.
    bool operator==(const DnaSequence& other) const noexcept {
        return length_ == other.length_ && packed_ == other.packed_;
    }

private:
    friend class SequenceBuilder;

    std::string id_;
    std::vector<std::uint8_t> packed_;
    std::size_t length_ = 0;
};

/// Incremental constructor for DnaSequence, used by the parsers and the
/// random-sequence generator.
class SequenceBuilder {
public:
    SequenceBuilder() = default;
    explicit SequenceBuilder(std::size_t expected_length) { reserve(expected_length); }

    void reserve(std::size_t n) { packed_.reserve((n + 3) / 4); }
    std::size_t size() const noexcept { return length_; }

    void push_code(std::uint8_t code) {
        if ((length_ & 3u) == 0) packed_.push_back(0);
        packed_.back() |= static_cast<std::uint8_t>((code & 3u) << ((length_ & 3u) * 2u));
        ++length_;
    }

    void push(Nucleotide base) { push_code(code_of(base)); }

    /// Finalizes the sequence; the builder is left empty.
    DnaSequence build(std::string id = {});

private:
    std::vector<std::uint8_t> packed_;
    std::size_t length_ = 0;
};

enum class RegionKind { Exon, Intron, Other };
enum class Orientation { Forward, Complement };

std::string_view to_string(RegionKind kind) noexcept;
std::string_view to_string(Orientation orientation) noexcept;

/// A typed, oriented span of a genome. Coordinates are 1-based inclusive.
struct Region {
    std::string id;
    RegionKind kind = RegionKind::Other;
    std::size_t start = 1;
    std::size_t end = 1;
    Orientation orientation = Orientation::Forward;

    std::size_t length() const noexcept { return end - start + 1; }
};

/// Per-base probabilities; fields sum to 1 for any non-empty sequence.
struct BaseComposition {
    double p_a = 0.0;
    double p_t = 0.0;
    double p_g = 0.0;
    double p_c = 0.0;
};

/// Empirical base frequencies. Throws Error on an empty sequence.
BaseComposition composition(const DnaSequence& seq);

/// Watson-Crick reverse complement: output[i] = complement(input[N-1-i]).
DnaSequence reverse_complement(const DnaSequence& seq);

/// Substring [start, end] of the genome, reverse-complemented when the
/// region orientation is Complement. The result carries the region id.
/// Throws Error naming the region id when the bounds do not fit.
DnaSequence extract_region(const DnaSequence& genome, const Region& region);

/// Concatenation of extract_region results in list order.
DnaSequence concat_regions(const DnaSequence& genome, const std::vector<Region>& regions,
                           std::string id = "concat");

}  // namespace dnainfo
