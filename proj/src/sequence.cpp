#include "dnainfo/sequence.hpp"

#include <array>
#include <utility>

#include "dnainfo/error.hpp"

namespace dnainfo {

namespace {

constexpr std::array<std::int8_t, 256> make_char_table() {
    std::array<std::int8_t, 256> table{};
    for (auto& entry : table) entry = -1;
    table['A'] = table['a'] = 0;
    table['T'] = table['t'] = 1;
    table['G'] = table['g'] = 2;
    table['C'] = table['c'] = 3;
    return table;
}

constexpr auto kCharTable = make_char_table();

}  // namespace

std::optional<Nucleotide> nucleotide_from_char(char c) noexcept {
    const std::int8_t code = kCharTable[static_cast<unsigned char>(c)];
    if (code < 0) return std::nullopt;
    return nucleotide_of(static_cast<std::uint8_t>(code));
}

DnaSequence::DnaSequence(std::string_view bases, std::string id) {
    SequenceBuilder builder(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
        const auto base = nucleotide_from_char(bases[i]);
        if (!base) {
            throw ParseError(std::string("invalid base '") + bases[i] + "'", 1, i + 1);
        }
        builder.push(*base);
    }
    *this = builder.build(std::move(id));
}

std::string DnaSequence::to_string() const {
    std::string text;
    text.reserve(length_);
    for (std::size_t i = 0; i < length_; ++i) text.push_back(to_char(base(i)));
    return text;
}

DnaSequence SequenceBuilder::build(std::string id) {
    DnaSequence seq;
    seq.id_ = std::move(id);
    seq.packed_ = std::move(packed_);
    seq.length_ = length_;
    packed_.clear();
    length_ = 0;
    return seq;
}

std::string_view to_string(RegionKind kind) noexcept {
    switch (kind) {
        case RegionKind::Exon: return "exon";
        case RegionKind::Intron: return "intron";
        case RegionKind::Other: break;
    }
    return "other";
}

std::string_view to_string(Orientation orientation) noexcept {
    return orientation == Orientation::Forward ? "forward" : "complement";
}

BaseComposition composition(const DnaSequence& seq) {
    if (seq.empty()) throw Error("empty sequence");
    std::array<std::size_t, 4> counts{};
    for (std::size_t i = 0; i < seq.length(); ++i) ++counts[seq.code(i)];
    const double n = static_cast<double>(seq.length());
    return {counts[0] / n, counts[1] / n, counts[2] / n, counts[3] / n};
}

DnaSequence reverse_complement(const DnaSequence& seq) {
    SequenceBuilder builder(seq.length());
    for (std::size_t i = seq.length(); i > 0; --i) {
        builder.push_code(seq.code(i - 1) ^ 1u);
    }
    return builder.build(seq.id());
}

DnaSequence extract_region(const DnaSequence& genome, const Region& region) {
    if (region.start < 1 || region.start > region.end || region.end > genome.length()) {
        throw Error("region '" + region.id + "': bounds [" + std::to_string(region.start) +
                    ", " + std::to_string(region.end) + "] do not fit genome of length " +
                    std::to_string(genome.length()));
    }
    SequenceBuilder builder(region.length());
    if (region.orientation == Orientation::Forward) {
        for (std::size_t pos = region.start; pos <= region.end; ++pos) {
            builder.push_code(genome.code(pos - 1));
        }
    } else {
        for (std::size_t pos = region.end; pos >= region.start; --pos) {
            builder.push_code(genome.code(pos - 1) ^ 1u);
        }
    }
    return builder.build(region.id);
}

DnaSequence concat_regions(const DnaSequence& genome, const std::vector<Region>& regions,
                           std::string id) {
    SequenceBuilder builder;
    for (const auto& region : regions) {
        const DnaSequence part = extract_region(genome, region);
        for (std::size_t i = 0; i < part.length(); ++i) builder.push_code(part.code(i));
    }
    return builder.build(std::move(id));
}

}  // namespace dnainfo
