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

#include <algorithm>
#include <random>
#include <thread>

namespace qclass {

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over a Weyl step, applied twice so neighbouring
    // (seed, stream) pairs land far apart.
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(seed + 0x9e3779b97f4a7c15ULL) + stream * 0x9e3779b97f4a7c15ULL);
}

namespace {

void sample_stream(const std::vector<double> &cdf, std::uint64_t shots,
                   std::uint64_t seed, std::vector<std::uint64_t> &counts) {
    std::mt19937_64 rng(seed);
    const std::size_t last = cdf.size() - 1;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto outcome = static_cast<std::size_t>(it - cdf.begin());
        // u can only exceed the final cdf entry through rounding; fold it
        // back onto the last outcome with non-zero probability.
        if (outcome > last) {
            outcome = last;
            while (outcome > 0 && cdf[outcome] == cdf[outcome - 1]) {
                --outcome;
            }
        }
        ++counts[outcome];
    }
}

} // namespace

Histogram sample_distribution(const OutcomeDistribution &dist,
                              std::uint64_t shots, std::uint64_t seed,
                              const SamplingOptions &options) {
    if (shots == 0) {
        throw InvalidArgument("shots must be at least 1");
    }
    if (options.shots_per_stream == 0) {
        throw InvalidArgument("shots_per_stream must be at least 1");
    }
    const std::size_t outcomes = dist.probabilities.size();
    std::vector<double> cdf(outcomes);
    double acc = 0.0;
    for (std::size_t i = 0; i < outcomes; ++i) {
        acc += dist.probabilities[i];
        cdf[i] = acc;
    }

    const std::uint64_t per = options.shots_per_stream;
    const std::uint64_t streams = (shots + per - 1) / per;
    std::vector<std::vector<std::uint64_t>> partial(
        streams, std::vector<std::uint64_t>(outcomes, 0));
    auto work = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t k = first; k < streams; k += stride) {
            const std::uint64_t n = std::min(per, shots - k * per);
            sample_stream(cdf, n, derive_stream_seed(seed, k), partial[k]);
        }
    };

    const unsigned threads =
        std::max(1U, std::min<unsigned>(options.threads,
                                        static_cast<unsigned>(streams)));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t, threads);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    Histogram hist{dist.qubits, std::vector<std::uint64_t>(outcomes, 0), shots};
    for (const auto &p : partial) {
        for (std::size_t i = 0; i < outcomes; ++i) {
            hist.counts[i] += p[i];
        }
    }
    return hist;
}

Histogram sample_measurements(const StateVector &state,
                              std::span<const std::size_t> qubits,
                              std::uint64_t shots, std::uint64_t seed,
                              const SamplingOptions &options) {
    if (shots == 0) {
        throw InvalidArgument("shots must be at least 1");
    }
    return sample_distribution(exact_probabilities(state, qubits), shots, seed,
                               options);
}

} // namespace qclass
