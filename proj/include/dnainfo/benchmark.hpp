#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dnainfo/entropy.hpp"
#include "dnainfo/sequence.hpp"

namespace dnainfo {

/// Generator recorded in report metadata: per-member seeds are derived from
/// the master seed with splitmix64, each member draws bases two bits at a
/// time from mt19937_64 words.
inline constexpr const char* kRngAlgorithm = "splitmix64+mt19937_64";

inline constexpr std::uint64_t kDefaultSeed = 42;

struct EnsembleConfig {
    std::size_t ensemble_size = 30;
    std::uint64_t seed = kDefaultSeed;
    std::size_t length = 0;  // matched to the sequence under test
    LengthRange l_range{};
    CountMode mode = CountMode::NonOverlapping;
    double beta = 0.0;
};

struct CorrectionEntry {
    int block_length = 0;
    double mean_random_per_base = 0.0;  // ensemble mean of h(L), bits/base
    double delta = 0.0;                 // 2 / mean_random_per_base
};

/// Finite-length correction factors for uniform random sequences of one
/// fixed length.
struct CorrectionTable {
    std::size_t sequence_length = 0;
    std::size_t ensemble_size = 0;
    std::uint64_t seed = 0;
    CountMode mode = CountMode::NonOverlapping;
    double beta = 0.0;
    std::vector<CorrectionEntry> entries;
};

struct CorrectedEntry {
    int block_length = 0;
    double h_raw = 0.0;
    double delta = 0.0;
    double h_corrected = 0.0;  // h_raw * delta, never clamped
};

struct CorrectedProfile {
    std::string sequence_id;
    std::size_t sequence_length = 0;
    std::vector<CorrectedEntry> entries;
};

/// splitmix64 stream value i of the given master seed.
std::uint64_t derive_member_seed(std::uint64_t seed, std::uint64_t index);

/// i.i.d. uniform bases over {A,T,G,C}; deterministic given the engine state
/// and draw order (two bits per base from each 64-bit word).
DnaSequence generate_random_sequence(std::size_t length, std::mt19937_64& engine);

/// The index-th ensemble member for this config. Depends only on
/// (seed, index, length), so members are reproducible in isolation.
DnaSequence ensemble_member(const EnsembleConfig& config, std::size_t index);

/// Generates the ensemble, averages the per-base entropy at every L in the
/// range (member order, so results are seed-reproducible), and derives
/// delta = 2 / mean.
CorrectionTable correction_table(const EnsembleConfig& config);

/// Entrywise h_corrected = h_raw * delta. The table must come from the same
/// sequence length and cover every L of the profile.
CorrectedProfile corrected_profile(const EntropyProfile& profile,
                                   const CorrectionTable& table);

}  // namespace dnainfo
