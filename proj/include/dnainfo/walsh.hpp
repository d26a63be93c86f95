#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dnainfo/autocorr.hpp"
#include "dnainfo/sequence.hpp"

namespace dnainfo {

/// Walsh coefficients in sequency order (coefficient s belongs to the Walsh
/// function with s sign changes), with the 1/N forward scaling applied.
struct WalshSpectrum {
    std::vector<double> coefficients;
};

/// In-place unnormalized sequency-ordered Walsh transform. The sequency
/// Walsh matrix is symmetric and orthogonal, so applying this twice yields
/// N times the input. Throws Error unless the size is a power of two >= 1.
void walsh_transform_unnormalized(std::vector<double>& values);

/// Forward transform: coefficient[s] = (1/N) * sum_n values[n] * wal(s, n).
WalshSpectrum fwht_sequency(std::vector<double> values);

/// Recovers the input of fwht_sequency.
std::vector<double> inverse_fwht_sequency(const WalshSpectrum& spectrum);

enum class LengthAdjustment { None, Padded, Truncated };

std::string_view to_string(LengthAdjustment adjustment) noexcept;

struct AdjustedSignal {
    NumericSignal signal;
    std::size_t original_length = 0;
    LengthAdjustment adjustment = LengthAdjustment::None;
};

/// Resizes the signal to the nearest power of two (ties round up): zeros are
/// appended when growing, the tail is dropped when shrinking.
AdjustedSignal adjust_to_power_of_two(const NumericSignal& signal);

/// Number of distinct coefficient values; sign-differing values are
/// distinct. Comparison uses a 1e-9 relative tolerance, which is exact on
/// the dyadic rationals produced by the default substitution alphabet.
std::size_t count_independent(const WalshSpectrum& spectrum);

struct RandomnessReport {
    std::string sequence_id;
    std::size_t original_length = 0;
    std::size_t adjusted_length = 0;
    LengthAdjustment adjustment = LengthAdjustment::None;
    std::size_t independent_count = 0;

    /// r(s) = independent_count / adjusted_length.
    double coefficient() const {
        return static_cast<double>(independent_count) /
               static_cast<double>(adjusted_length);
    }
};

/// Full pipeline: substitute, adjust to a power of two, transform, count
/// independent amplitudes.
RandomnessReport randomness_coefficient(const DnaSequence& seq,
                                        const SubstitutionMap& mapping = {});

}  // namespace dnainfo
