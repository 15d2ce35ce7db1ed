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
/**
 * @file
 * Maps feature vectors to normalized computational-basis amplitudes and
 * provides the product-state tools used to prepare them with Ry rotations.
 *
 * Region f (0-based) is the basis state |f>, so with the big-endian qubit
 * convention the first region is |0...0> and the last is |1...1>.
 */
#pragma once

#include "qclass/feature_vector.hpp"
#include "qclass/simulator.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qclass {

/// A normalized state together with the norm (eta) that was divided out.
struct EncodedState {
    StateVector state;
    double eta;
};

/**
 * Unnormalized computational coefficients of @p v under @p metric: the counts
 * themselves for AIP, 2c - W for SIP (so +1/-1 for a sample).
 */
[[nodiscard]] std::vector<std::int64_t> metric_coefficients(const FeatureVector &v,
                                                            Metric metric);

/// Amplitude f = c_f / |c|. Requires F = 2^n and a non-zero vector.
[[nodiscard]] EncodedState encode_aip(const FeatureVector &v);
/// Amplitude f proportional to 2c_f - W. Requires F = 2^n.
[[nodiscard]] EncodedState encode_sip(const FeatureVector &v);
[[nodiscard]] EncodedState encode(const FeatureVector &v, Metric metric);

/// Real single-qubit state a|0> + b|1>.
struct QubitPair {
    double a{1.0};
    double b{0.0};
};

/// Ry angle taking |0> to the normalized pair (a, b), in (-2pi, 2pi].
[[nodiscard]] double ry_angle(QubitPair pair);

/// (a_0|0> + b_0|1>) (x) ... (x) (a_{n-1}|0> + b_{n-1}|1>), qubit 0 first.
[[nodiscard]] StateVector product_state(std::span<const QubitPair> pairs);

struct ProductFit {
    /// One normalized pair per qubit, qubit 0 (most significant) first.
    std::vector<QubitPair> pairs;
    /// 1 - |<target|product>|.
    double residual{1.0};
    /// False if the best restart hit max_iter before becoming stationary.
    bool converged{false};
    std::size_t sweeps{0};

    [[nodiscard]] StateVector state() const { return product_state(pairs); }
    [[nodiscard]] double fidelity() const {
        return (1.0 - residual) * (1.0 - residual);
    }
};

struct FitOptions {
    double tol{1e-9};
    std::size_t max_iter{10000};
    std::size_t restarts{8};
    std::uint64_t seed{0x51ced5eedULL};
};

/**
 * @brief Closest real product state to @p target by overlap magnitude.
 *
 * Coordinate ascent over qubits: with all other pairs fixed the overlap is
 * linear in (a_i, b_i), and the unit pair maximizing its magnitude is the
 * top eigenvector of a 2x2 Gram matrix. Each restart starts from random
 * angles and sweeps until the overlap stops improving (or reaches 1 - tol).
 * The returned pairs are sign-fixed so that <target|product> has a
 * non-negative real part.
 */
[[nodiscard]] ProductFit fit_product_state(const StateVector &target,
                                           const FitOptions &options = {});

/**
 * Ry gates preparing the product of @p pattern from |0...0>. Pairs are
 * normalized first; pairs equal to (1, 0) emit nothing. @p qubits names the
 * target of each pair (defaults to 0..n-1).
 */
[[nodiscard]] std::vector<Gate>
binomial_pattern_gates(std::span<const QubitPair> pattern,
                       std::span<const std::size_t> qubits = {});

struct ExclusionResult {
    FeatureVector test;
    std::vector<FeatureVector> classes;
    /// index_map[reduced] = original region.
    std::vector<std::size_t> index_map;
};

/**
 * Drops every region where the test vector is 0. Only meaningful for AIP,
 * whose value is unchanged by the reduction.
 */
[[nodiscard]] ExclusionResult
zero_coefficient_exclusion(const FeatureVector &test,
                           std::span<const FeatureVector> classes);

} // namespace qclass
