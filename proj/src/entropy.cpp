#include "dnainfo/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "dnainfo/error.hpp"

namespace dnainfo {

namespace {

// Dense count arrays up to 4^11 slots (16 MiB of uint32); hash counting above.
constexpr int kDenseMaxL = 11;
constexpr int kMaxBlockLength = 31;  // 2L bits must fit a 64-bit code

}  // namespace

std::string_view to_string(CountMode mode) noexcept {
    return mode == CountMode::NonOverlapping ? "blocks" : "sliding";
}

std::optional<std::uint64_t> encode_block(std::string_view block) {
    std::uint64_t code = 0;
    for (const char c : block) {
        const auto base = nucleotide_from_char(c);
        if (!base) return std::nullopt;
        code = (code << 2) | code_of(*base);
    }
    return code;
}

std::string decode_block(std::uint64_t code, int block_length) {
    std::string block(static_cast<std::size_t>(block_length), 'A');
    for (int i = block_length - 1; i >= 0; --i) {
        block[static_cast<std::size_t>(i)] = to_char(nucleotide_of(code & 3u));
        code >>= 2;
    }
    return block;
}

BlockDistribution::BlockDistribution(int block_length, std::uint64_t total_blocks,
                                     double beta, std::vector<std::uint32_t> dense_counts)
    : block_length_(block_length),
      total_blocks_(total_blocks),
      beta_(beta),
      dense_(true),
      dense_counts_(std::move(dense_counts)) {}

BlockDistribution::BlockDistribution(
    int block_length, std::uint64_t total_blocks, double beta,
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted_counts)
    : block_length_(block_length),
      total_blocks_(total_blocks),
      beta_(beta),
      dense_(false),
      sparse_counts_(std::move(sorted_counts)) {}

std::uint64_t BlockDistribution::count_of_code(std::uint64_t code) const {
    if (dense_) {
        return code < dense_counts_.size() ? dense_counts_[code] : 0;
    }
    const auto it = std::lower_bound(
        sparse_counts_.begin(), sparse_counts_.end(), code,
        [](const auto& entry, std::uint64_t key) { return entry.first < key; });
    return (it != sparse_counts_.end() && it->first == code) ? it->second : 0;
}

std::uint64_t BlockDistribution::count_of(std::string_view block) const {
    if (static_cast<int>(block.size()) != block_length_) {
        throw Error("block '" + std::string(block) + "' has length " +
                    std::to_string(block.size()) + ", expected " +
                    std::to_string(block_length_));
    }
    const auto code = encode_block(block);
    if (!code) {
        throw Error("block '" + std::string(block) + "' contains a non-ATGC character");
    }
    return count_of_code(*code);
}

std::size_t BlockDistribution::distinct_observed() const noexcept {
    if (!dense_) return sparse_counts_.size();
    return static_cast<std::size_t>(
        std::count_if(dense_counts_.begin(), dense_counts_.end(),
                      [](std::uint32_t c) { return c > 0; }));
}

void BlockDistribution::for_each_observed(
    const std::function<void(std::uint64_t, std::uint64_t)>& visit) const {
    if (dense_) {
        for (std::uint64_t code = 0; code < dense_counts_.size(); ++code) {
            if (dense_counts_[code] > 0) visit(code, dense_counts_[code]);
        }
    } else {
        for (const auto& [code, count] : sparse_counts_) visit(code, count);
    }
}

BlockDistribution count_blocks(const DnaSequence& seq, int block_length, CountMode mode,
                               double beta) {
    if (block_length < 1) throw Error("block length must be at least 1");
    if (static_cast<std::size_t>(block_length) > seq.length()) {
        throw Error("block longer than sequence (L = " + std::to_string(block_length) +
                    ", N = " + std::to_string(seq.length()) + ")");
    }
    if (block_length > kMaxBlockLength) {
        throw Error("block length above " + std::to_string(kMaxBlockLength) +
                    " is not supported");
    }
    if (beta < 0) throw Error("beta must be non-negative");

    const std::size_t n = seq.length();
    const std::size_t len = static_cast<std::size_t>(block_length);
    const std::uint64_t mask = (std::uint64_t{1} << (2 * block_length)) - 1;
    const std::uint64_t total = mode == CountMode::NonOverlapping
                                    ? static_cast<std::uint64_t>(n / len)
                                    : static_cast<std::uint64_t>(n - len + 1);

    const bool dense = block_length <= kDenseMaxL;
    std::vector<std::uint32_t> dense_counts;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse_counts;
    if (dense) {
        dense_counts.assign(std::size_t{1} << (2 * block_length), 0);
    } else {
        sparse_counts.reserve(std::min<std::uint64_t>(total, 1u << 20));
    }

    // One rolling pass; after consuming base i the code holds bases
    // [i-L+1, i]. Non-overlapping mode records only block-aligned windows.
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
        code = ((code << 2) | seq.code(i)) & mask;
        if (i + 1 < len) continue;
        if (mode == CountMode::NonOverlapping && (i + 1) % len != 0) continue;
        if (dense) {
            ++dense_counts[code];
        } else {
            ++sparse_counts[code];
        }
    }

    if (dense) {
        return BlockDistribution(block_length, total, beta, std::move(dense_counts));
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(sparse_counts.begin(),
                                                                sparse_counts.end());
    std::sort(sorted.begin(), sorted.end());
    return BlockDistribution(block_length, total, beta, std::move(sorted));
}

double estimate_probability(const BlockDistribution& dist, std::string_view block) {
    if (dist.total_blocks() == 0) throw Error("distribution has no blocks");
    const double count = static_cast<double>(dist.count_of(block));
    const double d = static_cast<double>(dist.num_possible_blocks());
    return (count + dist.beta()) /
           (static_cast<double>(dist.total_blocks()) + dist.beta() * d);
}

double block_entropy(const BlockDistribution& dist) {
    if (dist.total_blocks() == 0) throw Error("distribution has no blocks");
    const double n = static_cast<double>(dist.total_blocks());
    const double beta = dist.beta();
    double entropy = 0.0;
    if (beta == 0.0) {
        dist.for_each_observed([&](std::uint64_t, std::uint64_t count) {
            const double p = static_cast<double>(count) / n;
            entropy -= p * std::log2(p);
        });
        return entropy;
    }
    const double d = static_cast<double>(dist.num_possible_blocks());
    const double denom = n + beta * d;
    dist.for_each_observed([&](std::uint64_t, std::uint64_t count) {
        const double p = (static_cast<double>(count) + beta) / denom;
        entropy -= p * std::log2(p);
    });
    // All unseen blocks share the same probability.
    const double unseen =
        d - static_cast<double>(dist.distinct_observed());
    if (unseen > 0) {
        const double p = beta / denom;
        entropy -= unseen * p * std::log2(p);
    }
    return entropy;
}

EntropyProfile entropy_profile(const DnaSequence& seq, LengthRange range, CountMode mode,
                               double beta) {
    if (range.lo < 1 || range.lo > range.hi) {
        throw Error("invalid block length range " + std::to_string(range.lo) + ".." +
                    std::to_string(range.hi));
    }
    EntropyProfile profile;
    profile.sequence_id = seq.id();
    profile.sequence_length = seq.length();
    profile.mode = mode;
    profile.beta = beta;
    profile.entries.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
    for (int len = range.lo; len <= range.hi; ++len) {
        const double h_block = block_entropy(count_blocks(seq, len, mode, beta));
        profile.entries.push_back({len, h_block, h_block / len});
    }
    return profile;
}

}  // namespace dnainfo
