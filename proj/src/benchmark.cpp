#include "dnainfo/benchmark.hpp"

#include <algorithm>

#include "dnainfo/error.hpp"

namespace dnainfo {

std::uint64_t derive_member_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 with the standard gamma; finalizer applied to stream position.
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

DnaSequence generate_random_sequence(std::size_t length, std::mt19937_64& engine) {
    SequenceBuilder builder(length);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (i % 32 == 0) word = engine();
        builder.push_code(static_cast<std::uint8_t>(word & 3u));
        word >>= 2;
    }
    return builder.build();
}

DnaSequence ensemble_member(const EnsembleConfig& config, std::size_t index) {
    std::mt19937_64 engine(derive_member_seed(config.seed, index));
    return generate_random_sequence(config.length, engine);
}

CorrectionTable correction_table(const EnsembleConfig& config) {
    if (config.ensemble_size < 1) throw Error("ensemble size must be at least 1");
    if (config.l_range.lo < 1 || config.l_range.lo > config.l_range.hi) {
        throw Error("invalid block length range");
    }
    if (config.length < static_cast<std::size_t>(config.l_range.hi)) {
        throw Error("sequence length " + std::to_string(config.length) +
                    " is shorter than the largest block length " +
                    std::to_string(config.l_range.hi));
    }

    const std::size_t num_lengths =
        static_cast<std::size_t>(config.l_range.hi - config.l_range.lo + 1);
    std::vector<double> sums(num_lengths, 0.0);
    for (std::size_t member = 0; member < config.ensemble_size; ++member) {
        const DnaSequence seq = ensemble_member(config, member);
        const EntropyProfile profile =
            entropy_profile(seq, config.l_range, config.mode, config.beta);
        for (std::size_t i = 0; i < num_lengths; ++i) {
            sums[i] += profile.entries[i].per_base_bits;
        }
    }

    CorrectionTable table;
    table.sequence_length = config.length;
    table.ensemble_size = config.ensemble_size;
    table.seed = config.seed;
    table.mode = config.mode;
    table.beta = config.beta;
    table.entries.reserve(num_lengths);
    for (std::size_t i = 0; i < num_lengths; ++i) {
        const double mean = sums[i] / static_cast<double>(config.ensemble_size);
        if (mean <= 0.0) throw Error("degenerate ensemble: mean random entropy is zero");
        table.entries.push_back(
            {config.l_range.lo + static_cast<int>(i), mean, 2.0 / mean});
    }
    return table;
}

CorrectedProfile corrected_profile(const EntropyProfile& profile,
                                   const CorrectionTable& table) {
    if (table.sequence_length != profile.sequence_length) {
        throw Error("correction table was built for length " +
                    std::to_string(table.sequence_length) + ", profile is length " +
                    std::to_string(profile.sequence_length));
    }

    CorrectedProfile corrected;
    corrected.sequence_id = profile.sequence_id;
    corrected.sequence_length = profile.sequence_length;
    corrected.entries.reserve(profile.entries.size());

    std::string missing;
    for (const auto& entry : profile.entries) {
        const auto it = std::find_if(
            table.entries.begin(), table.entries.end(),
            [&](const CorrectionEntry& e) { return e.block_length == entry.block_length; });
        if (it == table.entries.end()) {
            if (!missing.empty()) missing += ", ";
            missing += std::to_string(entry.block_length);
            continue;
        }
        corrected.entries.push_back({entry.block_length, entry.per_base_bits, it->delta,
                                     entry.per_base_bits * it->delta});
    }
    if (!missing.empty()) {
        throw Error("correction table is missing L = " + missing);
    }
    return corrected;
}

}  // namespace dnainfo
