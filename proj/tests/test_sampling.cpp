// Copyright 2026 The qclass Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qclass/error.hpp"
#include "qclass/simulator.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace qclass {
namespace {

StateVector fixed_state() {
    std::mt19937_64 rng(99);
    return testing::random_state(3, rng);
}

TEST(Sampling, SameSeedSameHistogram) {
    const auto psi = fixed_state();
    const std::vector<std::size_t> q{0, 1, 2};
    const auto a = sample_measurements(psi, q, 50000, 42);
    const auto b = sample_measurements(psi, q, 50000, 42);
    EXPECT_EQ(a.counts, b.counts);
    const auto c = sample_measurements(psi, q, 50000, 43);
    EXPECT_NE(a.counts, c.counts);
}

TEST(Sampling, IndependentOfThreadCount) {
    const auto psi = fixed_state();
    const std::vector<std::size_t> q{2, 0};
    SamplingOptions one;
    SamplingOptions four;
    four.threads = 4;
    const auto a = sample_measurements(psi, q, 100003, 5, one);
    const auto b = sample_measurements(psi, q, 100003, 5, four);
    EXPECT_EQ(a.counts, b.counts);
}

TEST(Sampling, CountsSumToShots) {
    const auto psi = fixed_state();
    const std::vector<std::size_t> q{1};
    const auto h = sample_measurements(psi, q, 12345, 1);
    EXPECT_EQ(std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0}), 12345U);
    EXPECT_EQ(h.shots, 12345U);
}

TEST(Sampling, ChiSquareAgainstExact) {
    const auto psi = fixed_state();
    const std::vector<std::size_t> q{0, 1, 2};
    const auto dist = exact_probabilities(psi, q);
    constexpr std::uint64_t shots = 200000;
    // Upper 1e-4 tail of chi-square with 7 degrees of freedom.
    constexpr double critical = 29.88;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto h = sample_measurements(psi, q, shots, seed);
        double chi2 = 0.0;
        for (std::size_t o = 0; o < 8; ++o) {
            const double e = dist[o] * static_cast<double>(shots);
            const double d = static_cast<double>(h.counts[o]) - e;
            chi2 += d * d / e;
        }
        EXPECT_LT(chi2, critical) << "seed " << seed;
    }
}

TEST(Sampling, DeterministicOutcomeAlwaysHit) {
    const auto psi = StateVector::basis(2, 0b10);
    const std::vector<std::size_t> q{0, 1};
    const auto h = sample_measurements(psi, q, 1000, 9);
    EXPECT_EQ(h.counts[0b10], 1000U);
    EXPECT_EQ(h.label(0b10), "10");
}

TEST(Sampling, ZeroShotsRejected) {
    const auto psi = fixed_state();
    const std::vector<std::size_t> q{0};
    EXPECT_THROW((void)sample_measurements(psi, q, 0, 1), InvalidArgument);
}

TEST(Sampling, StreamSeedsDiffer) {
    EXPECT_NE(derive_stream_seed(1, 0), derive_stream_seed(1, 1));
    EXPECT_NE(derive_stream_seed(1, 0), derive_stream_seed(2, 0));
    EXPECT_EQ(derive_stream_seed(1, 3), derive_stream_seed(1, 3));
}

TEST(Sampling, DistributionSamplingMatchesStateSampling) {
    const auto psi = fixed_state();
    const std::vector<std::size_t> q{1, 2};
    const auto dist = exact_probabilities(psi, q);
    EXPECT_EQ(sample_distribution(dist, 30000, 8).counts,
              sample_measurements(psi, q, 30000, 8).counts);
}

} // namespace
} // namespace qclass
