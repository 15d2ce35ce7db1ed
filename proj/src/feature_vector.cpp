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
#include "qclass/feature_vector.hpp"

#include "qclass/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

namespace qclass {

std::string_view to_string(Metric metric) {
    return metric == Metric::AIP ? "aip" : "sip";
}

Metric parse_metric(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "aip") {
        return Metric::AIP;
    }
    if (lower == "sip") {
        return Metric::SIP;
    }
    throw InvalidArgument("unknown metric '" + std::string(text) + "'");
}

FeatureVector FeatureVector::sample(std::vector<std::int64_t> bits) {
    if (bits.empty()) {
        throw InvalidArgument("sample has no regions");
    }
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) {
            throw InvalidArgument("sample component " + std::to_string(i) +
                                  " is " + std::to_string(bits[i]) +
                                  ", expected 0 or 1");
        }
    }
    return {std::move(bits), VectorKind::Sample, 1};
}

FeatureVector FeatureVector::class_sum(std::span<const FeatureVector> members) {
    if (members.empty()) {
        throw InvalidArgument("class has no member samples");
    }
    std::vector<std::int64_t> sum(members.front().size(), 0);
    for (const auto &m : members) {
        if (m.kind() != VectorKind::Sample) {
            throw InvalidArgument("class members must be samples");
        }
        if (m.size() != sum.size()) {
            throw InvalidArgument("class members differ in length");
        }
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += m[i];
        }
    }
    return {std::move(sum), VectorKind::Class, members.size()};
}

FeatureVector FeatureVector::class_counts(std::vector<std::int64_t> counts,
                                          std::size_t members) {
    if (members == 0) {
        throw InvalidArgument("class has no member samples");
    }
    if (counts.empty()) {
        throw InvalidArgument("class vector has no regions");
    }
    const auto w = static_cast<std::int64_t>(members);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0 || counts[i] > w) {
            throw InvalidArgument("class count " + std::to_string(counts[i]) +
                                  " at region " + std::to_string(i) +
                                  " outside [0, " + std::to_string(w) + "]");
        }
    }
    return {std::move(counts), VectorKind::Class, members};
}

bool FeatureVector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](auto v) { return v == 0; });
}

std::vector<std::int64_t> FeatureVector::signed_components() const {
    const auto w = static_cast<std::int64_t>(members_);
    std::vector<std::int64_t> out(c_.size());
    std::transform(c_.begin(), c_.end(), out.begin(),
                   [w](auto v) { return 2 * v - w; });
    return out;
}

FeatureVector FeatureVector::padded(std::size_t extra) const {
    auto c = c_;
    c.resize(c.size() + extra, 0);
    return {std::move(c), kind_, members_};
}

FeatureVector FeatureVector::select(std::span<const std::size_t> regions) const {
    std::vector<std::int64_t> c;
    c.reserve(regions.size());
    for (auto r : regions) {
        if (r >= c_.size()) {
            throw InvalidArgument("region index out of range");
        }
        c.push_back(c_[r]);
    }
    return {std::move(c), kind_, members_};
}

std::size_t next_power_of_two(std::size_t n) {
    return std::bit_ceil(std::max<std::size_t>(n, 1));
}

} // namespace qclass
