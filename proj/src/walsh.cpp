#include "dnainfo/walsh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "dnainfo/error.hpp"

namespace dnainfo {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t reverse_bits(std::size_t value, unsigned bits) {
    std::size_t reversed = 0;
    for (unsigned i = 0; i < bits; ++i) {
        reversed = (reversed << 1) | ((value >> i) & 1u);
    }
    return reversed;
}

}  // namespace

void walsh_transform_unnormalized(std::vector<double>& values) {
    const std::size_t n = values.size();
    if (!is_power_of_two(n)) {
        throw Error("Walsh transform needs a power-of-two length, got " +
                    std::to_string(n));
    }

    for (std::size_t half = 1; half < n; half *= 2) {
        for (std::size_t base = 0; base < n; base += 2 * half) {
            for (std::size_t i = base; i < base + half; ++i) {
                const double lo = values[i];
                const double hi = values[i + half];
                values[i] = lo + hi;
                values[i + half] = lo - hi;
            }
        }
    }

    // Natural (Hadamard) order to sequency order: coefficient s of wal(s, .)
    // sits at natural index bit_reverse(gray(s)).
    const unsigned bits = static_cast<unsigned>(std::countr_zero(n));
    std::vector<double> ordered(n);
    for (std::size_t s = 0; s < n; ++s) {
        ordered[s] = values[reverse_bits(s ^ (s >> 1), bits)];
    }
    values = std::move(ordered);
}

WalshSpectrum fwht_sequency(std::vector<double> values) {
    const double n = static_cast<double>(values.size());
    walsh_transform_unnormalized(values);
    for (double& v : values) v /= n;
    return WalshSpectrum{std::move(values)};
}

std::vector<double> inverse_fwht_sequency(const WalshSpectrum& spectrum) {
    std::vector<double> values = spectrum.coefficients;
    walsh_transform_unnormalized(values);
    return values;
}

std::string_view to_string(LengthAdjustment adjustment) noexcept {
    switch (adjustment) {
        case LengthAdjustment::Padded: return "padded";
        case LengthAdjustment::Truncated: return "truncated";
        case LengthAdjustment::None: break;
    }
    return "none";
}

AdjustedSignal adjust_to_power_of_two(const NumericSignal& signal) {
    const std::size_t n = signal.values.size();
    if (n == 0) throw Error("cannot adjust an empty signal");

    AdjustedSignal adjusted;
    adjusted.signal = signal;
    adjusted.original_length = n;
    if (is_power_of_two(n)) {
        adjusted.adjustment = LengthAdjustment::None;
        return adjusted;
    }
    const std::size_t below = std::size_t{1} << (std::bit_width(n) - 1);
    const std::size_t above = below * 2;
    // Ties round up (padding preserves the signal, truncation does not).
    if (above - n <= n - below) {
        adjusted.signal.values.resize(above, 0.0);
        adjusted.adjustment = LengthAdjustment::Padded;
    } else {
        adjusted.signal.values.resize(below);
        adjusted.adjustment = LengthAdjustment::Truncated;
    }
    return adjusted;
}

std::size_t count_independent(const WalshSpectrum& spectrum) {
    if (spectrum.coefficients.empty()) return 0;
    std::vector<double> sorted = spectrum.coefficients;
    std::sort(sorted.begin(), sorted.end());
    std::size_t distinct = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const double gap = sorted[i] - sorted[i - 1];
        const double scale = std::max(std::abs(sorted[i]), std::abs(sorted[i - 1]));
        if (gap > 1e-9 * scale) ++distinct;
    }
    return distinct;
}

RandomnessReport randomness_coefficient(const DnaSequence& seq,
                                        const SubstitutionMap& mapping) {
    if (seq.empty()) throw Error("empty sequence");
    const AdjustedSignal adjusted = adjust_to_power_of_two(substitute(seq, mapping));
    const WalshSpectrum spectrum = fwht_sequency(adjusted.signal.values);

    RandomnessReport report;
    report.sequence_id = seq.id();
    report.original_length = adjusted.original_length;
    report.adjusted_length = spectrum.coefficients.size();
    report.adjustment = adjusted.adjustment;
    report.independent_count = count_independent(spectrum);
    return report;
}

}  // namespace dnainfo
