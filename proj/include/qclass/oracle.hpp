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
 * Classical ground truth: Hamming distance, match counts, AIP and SIP, and
 * the decision rules built on them.
 */
#pragma once

#include "qclass/feature_vector.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qclass {

/**
 * Positional match counts between a test vector and one training vector.
 * s_xy counts regions where the test has x and the training vector has y.
 */
struct OracleCounts {
    std::int64_t s11{0};
    std::int64_t s00{0};
    std::int64_t s01{0};
    std::int64_t s10{0};

    [[nodiscard]] std::int64_t matches() const { return s11 + s00; }
    [[nodiscard]] std::int64_t mismatches() const { return s01 + s10; }
    [[nodiscard]] std::int64_t total() const { return matches() + mismatches(); }
};

/// Number of positions where the binary vectors differ.
[[nodiscard]] std::int64_t hamming(const FeatureVector &a, const FeatureVector &b);

[[nodiscard]] OracleCounts match_counts(const FeatureVector &test,
                                        const FeatureVector &training);

/// Sum over members of s11 (the active inner product).
[[nodiscard]] std::int64_t aip(const FeatureVector &test,
                               std::span<const FeatureVector> members);
/// Dot product of the test with a (summed) class vector.
[[nodiscard]] std::int64_t aip(const FeatureVector &test,
                               const FeatureVector &class_vector);

/// Sum over members of (matches - mismatches).
[[nodiscard]] std::int64_t sip(const FeatureVector &test,
                               std::span<const FeatureVector> members);

/// Summed Hamming distance chi between the test and every member.
[[nodiscard]] std::int64_t summed_hamming(const FeatureVector &test,
                                          std::span<const FeatureVector> members);

/// Per-class aggregate of every classical quantity.
struct ClassScore {
    std::size_t class_id{0};
    std::int64_t sigma{0};   // SIP
    std::int64_t sigma11{0}; // AIP
    std::int64_t chi{0};     // summed Hamming distance
    std::int64_t matches{0}; // sum of s11 + s00
    std::size_t members{0};  // W
    std::size_t length{0};   // n

    /// sigma = 2 * matches - W n and -chi = matches - W n.
    [[nodiscard]] bool identities_hold() const;
};

[[nodiscard]] ClassScore class_score(std::size_t class_id, const FeatureVector &test,
                                     std::span<const FeatureVector> members);

enum class SignPrecondition { MatchesDominate, MismatchesDominate };

/// Whether the SIP sign is available (classically) or only |sigma| (as
/// measured on the swap test).
enum class SipObservable { Signed, Magnitude };

/// A class index or an exact tie.
struct Decision {
    std::optional<std::size_t> class_id;

    [[nodiscard]] bool ambiguous() const { return !class_id.has_value(); }
    static Decision ambiguous_result() { return {}; }
    static Decision of(std::size_t id) { return {id}; }
    friend bool operator==(const Decision &, const Decision &) = default;
};

/// Index of the unique maximum, ambiguous on a tie.
[[nodiscard]] Decision unique_argmax(std::span<const std::int64_t> values);
[[nodiscard]] Decision unique_argmin(std::span<const std::int64_t> values);

/**
 * @brief Applies the decision rule to precomputed scores.
 *
 * AIP picks the largest sigma11. SIP needs @p sign: with a signed observable
 * it picks the largest sigma; with only |sigma| it picks the largest |sigma|
 * when matches dominate and the smallest |sigma| when mismatches dominate.
 */
[[nodiscard]] Decision decide(std::span<const ClassScore> scores, Metric metric,
                              std::optional<SignPrecondition> sign,
                              SipObservable observable = SipObservable::Signed);

/// Scores every class and applies decide(). Needs at least two classes.
[[nodiscard]] Decision classify(const FeatureVector &test,
                                std::span<const std::vector<FeatureVector>> classes,
                                Metric metric,
                                std::optional<SignPrecondition> sign = std::nullopt,
                                SipObservable observable = SipObservable::Signed);

/// Classification by the smallest summed Hamming distance.
[[nodiscard]] Decision classify_hamming(const FeatureVector &test,
                                        std::span<const std::vector<FeatureVector>> classes);

/**
 * Multi-class inner-product region: the class whose normalized class vector
 * has the largest dot product with the test. Needs at least three non-zero
 * class vectors.
 */
[[nodiscard]] Decision multiclass_region(const FeatureVector &test,
                                         std::span<const FeatureVector> class_vectors);

} // namespace qclass
