#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dnainfo/autocorr.hpp"
#include "dnainfo/error.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace dnainfo;

TEST_CASE("default substitution assigns signed half-integer levels") {
    const auto signal = substitute(DnaSequence("ATGC", "x"));
    REQUIRE(signal.values.size() == 4);
    CHECK(signal.values[0] == doctest::Approx(-0.5));
    CHECK(signal.values[1] == doctest::Approx(0.5));
    CHECK(signal.values[2] == doctest::Approx(-1.5));
    CHECK(signal.values[3] == doctest::Approx(1.5));
    CHECK(signal.source_id == "x");

    const auto all_a = substitute(DnaSequence("AAAA", "x"));
    CHECK(std::all_of(all_a.values.begin(), all_a.values.end(),
                      [](double v) { return v == -0.5; }));
}

TEST_CASE("custom substitution maps are honored") {
    SubstitutionMap map{1.0, 2.0, 3.0, 4.0};
    const auto signal = substitute(DnaSequence("CGTA", "x"), map);
    CHECK(signal.values == std::vector<double>{4.0, 3.0, 2.0, 1.0});
}

TEST_CASE("complementing a strand negates and reverses the default signal") {
    std::mt19937_64 rng(11001);
    for (int rep = 0; rep < 50; ++rep) {
        const auto len = 1 + static_cast<std::size_t>(rng() % 200);
        const DnaSequence seq(testutil::random_base_string(rng, len), "s");
        auto mirrored = substitute(reverse_complement(seq)).values;
        std::reverse(mirrored.begin(), mirrored.end());
        for (auto& v : mirrored) v = -v;
        CHECK(mirrored == substitute(seq).values);
    }
}

TEST_CASE("subtract_mean centers the signal") {
    std::mt19937_64 rng(11002);
    const auto seq = DnaSequence(testutil::random_base_string(rng, 333), "s");
    const auto centered = subtract_mean(substitute(seq));
    double sum = 0.0;
    for (double v : centered.values) sum += v;
    CHECK(sum == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("hand-worked lags for the four-base alternating signal") {
    // x = [-0.5, 0.5, -1.5, 1.5]:
    //   R(0) = (0.25 + 0.25 + 2.25 + 2.25) / 4 = 1.25
    //   R(1) = (-0.25 - 0.75 - 2.25) / 4     = -0.8125
    const auto series = autocorrelation(substitute(DnaSequence("ATGC", "x")), 3);
    CHECK(series.at_lag(0) == doctest::Approx(1.25));
    CHECK(series.at_lag(1) == doctest::Approx(-0.8125));
    CHECK(series.at_lag(-1) == doctest::Approx(-0.8125));
    CHECK(series.max_lag == 3);
    CHECK(series.source_length == 4);
    CHECK(series.values.size() == 7);
}

TEST_CASE("constant signals follow the closed form c^2 (N-k) / N") {
    const std::size_t n = 25;
    const double c = -1.5;  // a run of G under the default map
    const auto series =
        autocorrelation(substitute(DnaSequence(std::string(n, 'G'), "g")), 10);
    for (int lag = 0; lag <= 10; ++lag) {
        const double expected = c * c * static_cast<double>(n - static_cast<std::size_t>(lag)) / static_cast<double>(n);
        CHECK(series.at_lag(lag) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("autocorrelation agrees with the direct-sum oracle") {
    std::mt19937_64 rng(11003);
    for (int rep = 0; rep < 40; ++rep) {
        const auto len = 2 + static_cast<std::size_t>(rng() % 1000);
        const auto seq = DnaSequence(testutil::random_base_string(rng, len), "s");
        const auto signal = substitute(seq);
        const int max_lag = static_cast<int>(rng() % std::min<std::size_t>(len, 15));
        const auto series = autocorrelation(signal, max_lag);
        for (int lag = 0; lag <= max_lag; ++lag) {
            CHECK(series.at_lag(lag) ==
                  doctest::Approx(oracle::autocorr_at(signal.values, lag)).epsilon(1e-12));
        }
    }
}

TEST_CASE("series are even and bounded by the zero lag") {
    std::mt19937_64 rng(11004);
    for (int rep = 0; rep < 40; ++rep) {
        const auto len = 12 + static_cast<std::size_t>(rng() % 500);
        const auto signal = substitute(DnaSequence(testutil::random_base_string(rng, len), "s"));
        const auto series = autocorrelation(signal, 10);
        CHECK(series.at_lag(0) >= 0.0);
        for (int lag = 1; lag <= 10; ++lag) {
            CHECK(series.at_lag(lag) == series.at_lag(-lag));
            CHECK(std::abs(series.at_lag(lag)) <= series.at_lag(0) + 1e-12);
        }
    }
}

TEST_CASE("scaling the signal scales the series quadratically") {
    std::mt19937_64 rng(11005);
    const auto seq = DnaSequence(testutil::random_base_string(rng, 256), "s");
    auto signal = substitute(seq);
    const auto base = autocorrelation(signal, 10);
    const double scale = 2.5;
    for (auto& v : signal.values) v *= scale;
    const auto scaled = autocorrelation(signal, 10);
    for (int lag = -10; lag <= 10; ++lag) {
        CHECK(scaled.at_lag(lag) ==
              doctest::Approx(scale * scale * base.at_lag(lag)).epsilon(1e-12));
    }
}

TEST_CASE("lag bounds are validated") {
    const auto signal = substitute(DnaSequence("ATGCATGC", "x"));
    CHECK_THROWS_AS(autocorrelation(signal, -1), Error);
    CHECK_THROWS_AS(autocorrelation(signal, 8), Error);   // max_lag must be < N
    CHECK_NOTHROW(autocorrelation(signal, 7));
    CHECK_THROWS_AS(autocorrelation(NumericSignal{}, 0), Error);
}

TEST_CASE("default maximum lag is ten") {
    std::mt19937_64 rng(11006);
    const auto signal = substitute(DnaSequence(testutil::random_base_string(rng, 64), "s"));
    const auto series = autocorrelation(signal);
    CHECK(series.max_lag == 10);
    CHECK(series.values.size() == 21);
}
