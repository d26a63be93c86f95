#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dnainfo/sequence.hpp"

namespace dnainfo {

/// Numeric values substituted for the four bases. The default assigns
/// complementary bases sign-opposite values of equal magnitude
/// (A/T -> -+0.5, G/C -> -+1.5).
struct SubstitutionMap {
    double a = -0.5;
    double t = 0.5;
    double g = -1.5;
    double c = 1.5;

    double value_of(Nucleotide base) const noexcept {
        switch (base) {
            case Nucleotide::A: return a;
            case Nucleotide::T: return t;
            case Nucleotide::G: return g;
            case Nucleotide::C: break;
        }
        return c;
    }
};

struct NumericSignal {
    std::vector<double> values;
    std::string source_id;
    SubstitutionMap mapping;
};

/// Lag-indexed autocorrelation values for lags -max_lag..+max_lag.
struct AutocorrSeries {
    int max_lag = 0;
    std::size_t source_length = 0;
    std::vector<double> values;  // index i holds the value at lag i - max_lag

    double at_lag(int lag) const { return values[static_cast<std::size_t>(lag + max_lag)]; }
};

NumericSignal substitute(const DnaSequence& seq, const SubstitutionMap& mapping = {});

/// Subtracts the signal mean from every sample (covariance-style output).
NumericSignal subtract_mean(NumericSignal signal);

/// Biased estimator: R(k) = (1/N) * sum_{n=0}^{N-1-k} x(n) x(n+k) for k >= 0,
/// mirrored to negative lags. Throws Error unless 0 <= max_lag < N.
AutocorrSeries autocorrelation(const NumericSignal& signal, int max_lag = 10);

}  // namespace dnainfo
