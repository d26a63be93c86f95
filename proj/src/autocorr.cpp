#include "dnainfo/autocorr.hpp"

#include <utility>

#include "dnainfo/error.hpp"

namespace dnainfo {

NumericSignal substitute(const DnaSequence& seq, const SubstitutionMap& mapping) {
    NumericSignal signal;
    signal.source_id = seq.id();
    signal.mapping = mapping;
    signal.values.reserve(seq.length());
    for (std::size_t i = 0; i < seq.length(); ++i) {
        signal.values.push_back(mapping.value_of(seq.base(i)));
    }
    return signal;
}

NumericSignal subtract_mean(NumericSignal signal) {
    if (signal.values.empty()) return signal;
    double sum = 0.0;
    for (const double v : signal.values) sum += v;
    const double mean = sum / static_cast<double>(signal.values.size());
    for (double& v : signal.values) v -= mean;
    return signal;
}

AutocorrSeries autocorrelation(const NumericSignal& signal, int max_lag) {
    const std::size_t n = signal.values.size();
    if (max_lag < 0) throw Error("max lag must be non-negative");
    if (static_cast<std::size_t>(max_lag) >= n) {
        throw Error("max lag " + std::to_string(max_lag) +
                    " must be smaller than the signal length " + std::to_string(n));
    }

    AutocorrSeries series;
    series.max_lag = max_lag;
    series.source_length = n;
    series.values.assign(static_cast<std::size_t>(2 * max_lag + 1), 0.0);
    const auto& x = signal.values;
    for (int lag = 0; lag <= max_lag; ++lag) {
        double sum = 0.0;
        const std::size_t limit = n - static_cast<std::size_t>(lag);
        for (std::size_t i = 0; i < limit; ++i) {
            sum += x[i] * x[i + static_cast<std::size_t>(lag)];
        }
        const double value = sum / static_cast<double>(n);
        series.values[static_cast<std::size_t>(max_lag + lag)] = value;
        series.values[static_cast<std::size_t>(max_lag - lag)] = value;
    }
    return series;
}

}  // namespace dnainfo
