#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnainfo/sequence.hpp"

namespace dnainfo {

/// How length-L blocks are taken from a sequence. NonOverlapping blocks
/// start at positions 1, L+1, 2L+1, ... and a trailing remainder shorter
/// than L is discarded; Sliding blocks start at every position 1..N-L+1.
enum class CountMode { NonOverlapping, Sliding };

std::string_view to_string(CountMode mode) noexcept;

/// Inclusive range of block lengths.
struct LengthRange {
    int lo = 2;
    int hi = 9;
};

/// Packs a length-L block over {A,T,G,C} into a 2L-bit code.
/// Returns nullopt when the string contains a character outside the alphabet.
std::optional<std::uint64_t> encode_block(std::string_view block);

std::string decode_block(std::uint64_t code, int block_length);

/// The empirical distribution of length-L blocks of one sequence, plus the
/// smoothing constant used when it is turned into probabilities.
class BlockDistribution {
public:
    BlockDistribution(int block_length, std::uint64_t total_blocks, double beta,
                      std::vector<std::uint32_t> dense_counts);
    BlockDistribution(int block_length, std::uint64_t total_blocks, double beta,
                      std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted_counts);

    int block_length() const noexcept { return block_length_; }
    std::uint64_t total_blocks() const noexcept { return total_blocks_; }
    double beta() const noexcept { return beta_; }

    /// 4^L, the number of possible length-L blocks.
    std::uint64_t num_possible_blocks() const noexcept {
        return std::uint64_t{1} << (2 * block_length_);
    }

    std::uint64_t count_of_code(std::uint64_t code) const;

    /// Occurrence count of the given block string. Throws Error when the
    /// string is not a valid length-L block.
    std::uint64_t count_of(std::string_view block) const;

    std::size_t distinct_observed() const noexcept;

    /// Visits every observed (code, count) pair in increasing code order.
    void for_each_observed(
        const std::function<void(std::uint64_t code, std::uint64_t count)>& visit) const;

private:
    int block_length_;
    std::uint64_t total_blocks_;
    double beta_;
    bool dense_;
    std::vector<std::uint32_t> dense_counts_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sparse_counts_;
};

/// Counts the length-L blocks of `seq`. `beta` is carried into the
/// distribution for probability estimation (0 = maximum likelihood,
/// 1 = Laplace). Throws Error when L < 1 or L > length.
BlockDistribution count_blocks(const DnaSequence& seq, int block_length, CountMode mode,
                               double beta = 0.0);

/// (n(g) + beta) / (total_blocks + beta * 4^L).
double estimate_probability(const BlockDistribution& dist, std::string_view block);

/// Shannon entropy of the block distribution in bits, with 0*log2(0) = 0.
/// For beta > 0 every one of the 4^L blocks contributes.
double block_entropy(const BlockDistribution& dist);

struct EntropyEntry {
    int block_length = 0;
    double block_entropy_bits = 0.0;
    double per_base_bits = 0.0;  // block_entropy_bits / block_length
};

struct EntropyProfile {
    std::string sequence_id;
    std::size_t sequence_length = 0;
    CountMode mode = CountMode::NonOverlapping;
    double beta = 0.0;
    std::vector<EntropyEntry> entries;
};

/// Block entropy and per-base entropy for every L in the inclusive range.
EntropyProfile entropy_profile(const DnaSequence& seq, LengthRange range = {},
                               CountMode mode = CountMode::NonOverlapping,
                               double beta = 0.0);

}  // namespace dnainfo
