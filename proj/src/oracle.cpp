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
#include "qclass/oracle.hpp"

#include "qclass/error.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace qclass {

namespace {

void require_same_length(const FeatureVector &a, const FeatureVector &b) {
    if (a.size() != b.size()) {
        throw InvalidArgument("vector lengths differ: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
    }
}

void require_binary(const FeatureVector &v) {
    if (v.kind() != VectorKind::Sample) {
        throw InvalidArgument("expected a binary sample vector");
    }
}

void require_members(std::span<const FeatureVector> members) {
    if (members.empty()) {
        throw InvalidArgument("class has no members");
    }
}

} // namespace

std::int64_t hamming(const FeatureVector &a, const FeatureVector &b) {
    const auto c = match_counts(a, b);
    return c.mismatches();
}

OracleCounts match_counts(const FeatureVector &test, const FeatureVector &training) {
    require_same_length(test, training);
    require_binary(test);
    require_binary(training);
    OracleCounts c;
    for (std::size_t f = 0; f < test.size(); ++f) {
        const bool x = test[f] != 0;
        const bool y = training[f] != 0;
        if (x && y) {
            ++c.s11;
        } else if (!x && !y) {
            ++c.s00;
        } else if (!x) {
            ++c.s01;
        } else {
            ++c.s10;
        }
    }
    return c;
}

std::int64_t aip(const FeatureVector &test, std::span<const FeatureVector> members) {
    require_members(members);
    std::int64_t total = 0;
    for (const auto &m : members) {
        total += match_counts(test, m).s11;
    }
    return total;
}

std::int64_t aip(const FeatureVector &test, const FeatureVector &class_vector) {
    require_same_length(test, class_vector);
    std::int64_t total = 0;
    for (std::size_t f = 0; f < test.size(); ++f) {
        total += test[f] * class_vector[f];
    }
    return total;
}

std::int64_t sip(const FeatureVector &test, std::span<const FeatureVector> members) {
    require_members(members);
    std::int64_t total = 0;
    for (const auto &m : members) {
        const auto c = match_counts(test, m);
        total += c.matches() - c.mismatches();
    }
    return total;
}

std::int64_t summed_hamming(const FeatureVector &test,
                            std::span<const FeatureVector> members) {
    require_members(members);
    std::int64_t total = 0;
    for (const auto &m : members) {
        total += hamming(test, m);
    }
    return total;
}

bool ClassScore::identities_hold() const {
    const auto wn = static_cast<std::int64_t>(members * length);
    return sigma == 2 * matches - wn && -chi == matches - wn;
}

ClassScore class_score(std::size_t class_id, const FeatureVector &test,
                       std::span<const FeatureVector> members) {
    require_members(members);
    ClassScore s;
    s.class_id = class_id;
    s.members = members.size();
    s.length = test.size();
    for (const auto &m : members) {
        const auto c = match_counts(test, m);
        s.sigma += c.matches() - c.mismatches();
        s.sigma11 += c.s11;
        s.chi += c.mismatches();
        s.matches += c.matches();
    }
    return s;
}

Decision unique_argmax(std::span<const std::int64_t> values) {
    if (values.empty()) {
        return Decision::ambiguous_result();
    }
    std::size_t best = 0;
    bool tie = false;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) {
            best = i;
            tie = false;
        } else if (values[i] == values[best]) {
            tie = true;
        }
    }
    return tie ? Decision::ambiguous_result() : Decision::of(best);
}

Decision unique_argmin(std::span<const std::int64_t> values) {
    std::vector<std::int64_t> neg(values.begin(), values.end());
    for (auto &v : neg) {
        v = -v;
    }
    return unique_argmax(neg);
}

Decision decide(std::span<const ClassScore> scores, Metric metric,
                std::optional<SignPrecondition> sign, SipObservable observable) {
    if (scores.size() < 2) {
        throw InvalidArgument("classification needs at least two classes");
    }
    std::vector<std::int64_t> v;
    v.reserve(scores.size());
    if (metric == Metric::AIP) {
        for (const auto &s : scores) {
            v.push_back(s.sigma11);
        }
        return unique_argmax(v);
    }
    if (!sign) {
        throw PreconditionError("SIP classification requires a sign precondition "
                                "(matches or mismatches dominate)");
    }
    for (const auto &s : scores) {
        v.push_back(observable == SipObservable::Signed ? s.sigma
                                                        : std::abs(s.sigma));
    }
    if (observable == SipObservable::Magnitude &&
        *sign == SignPrecondition::MismatchesDominate) {
        return unique_argmin(v);
    }
    return unique_argmax(v);
}

Decision classify(const FeatureVector &test,
                  std::span<const std::vector<FeatureVector>> classes, Metric metric,
                  std::optional<SignPrecondition> sign, SipObservable observable) {
    std::vector<ClassScore> scores;
    scores.reserve(classes.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
        scores.push_back(class_score(k, test, classes[k]));
    }
    return decide(scores, metric, sign, observable);
}

Decision classify_hamming(const FeatureVector &test,
                          std::span<const std::vector<FeatureVector>> classes) {
    if (classes.size() < 2) {
        throw InvalidArgument("classification needs at least two classes");
    }
    std::vector<std::int64_t> chi;
    chi.reserve(classes.size());
    for (const auto &members : classes) {
        chi.push_back(summed_hamming(test, members));
    }
    return unique_argmin(chi);
}

Decision multiclass_region(const FeatureVector &test,
                           std::span<const FeatureVector> class_vectors) {
    if (class_vectors.size() < 3) {
        throw InvalidArgument("multiclass_region needs at least three classes");
    }
    std::vector<double> score;
    for (const auto &c : class_vectors) {
        require_same_length(test, c);
        if (c.is_zero()) {
            throw InvalidArgument("class vector is all zero");
        }
        double dot = 0.0;
        double sq = 0.0;
        for (std::size_t f = 0; f < c.size(); ++f) {
            dot += static_cast<double>(test[f]) * static_cast<double>(c[f]);
            sq += static_cast<double>(c[f]) * static_cast<double>(c[f]);
        }
        score.push_back(dot / std::sqrt(sq));
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < score.size(); ++k) {
        if (score[k] > score[best]) {
            best = k;
        }
    }
    constexpr double tie_tol = 1e-12;
    for (std::size_t k = 0; k < score.size(); ++k) {
        if (k != best &&
            std::abs(score[k] - score[best]) <= tie_tol * std::max(1.0, std::abs(score[best]))) {
            return Decision::ambiguous_result();
        }
    }
    return Decision::of(best);
}

} // namespace qclass
