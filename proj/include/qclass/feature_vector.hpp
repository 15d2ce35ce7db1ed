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
 * Binary sample vectors and summed class vectors over ordered feature
 * regions, plus the metric selector shared by encoding, oracle and pipeline.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qclass {

/// Active inner product (1-1 matches) or symmetric inner product
/// (matches minus mismatches).
enum class Metric { AIP, SIP };

[[nodiscard]] std::string_view to_string(Metric metric);
/// Accepts "aip"/"sip" in any case; throws InvalidArgument otherwise.
[[nodiscard]] Metric parse_metric(std::string_view text);

enum class VectorKind { Sample, Class };

/**
 * @brief Integer components over F ordered regions.
 *
 * A sample is binary (1 = CNV present). A class vector is the componentwise
 * sum of its W member samples, so every component lies in [0, W].
 */
class FeatureVector {
  public:
    /// Throws InvalidArgument if any component is not 0 or 1.
    static FeatureVector sample(std::vector<std::int64_t> bits);
    /// Componentwise sum of equally long samples; throws on empty input.
    static FeatureVector class_sum(std::span<const FeatureVector> members);
    /// A class vector given directly as region counts over @p members samples.
    static FeatureVector class_counts(std::vector<std::int64_t> counts,
                                      std::size_t members);

    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
    [[nodiscard]] std::span<const std::int64_t> components() const noexcept {
        return c_;
    }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] VectorKind kind() const noexcept { return kind_; }
    /// W: 1 for a sample.
    [[nodiscard]] std::size_t members() const noexcept { return members_; }
    [[nodiscard]] bool is_zero() const;

    /// Per-region (#CNV members) - (#non-CNV members), i.e. 2c - W.
    [[nodiscard]] std::vector<std::int64_t> signed_components() const;

    /// Copy extended with @p extra trailing "no CNV" regions.
    [[nodiscard]] FeatureVector padded(std::size_t extra) const;
    /// Copy restricted to @p regions, in that order.
    [[nodiscard]] FeatureVector select(std::span<const std::size_t> regions) const;

    friend bool operator==(const FeatureVector &, const FeatureVector &) = default;

  private:
    FeatureVector(std::vector<std::int64_t> c, VectorKind kind,
                  std::size_t members)
        : c_(std::move(c)), kind_(kind), members_(members) {}

    std::vector<std::int64_t> c_;
    VectorKind kind_{VectorKind::Sample};
    std::size_t members_{1};
};

/// Smallest power of two >= n (n >= 1).
[[nodiscard]] std::size_t next_power_of_two(std::size_t n);

} // namespace qclass
