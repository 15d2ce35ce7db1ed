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
 * End-to-end classification runs and the three reference problems.
 */
#pragma once

#include "qclass/circuits.hpp"
#include "qclass/encoding.hpp"
#include "qclass/feature_vector.hpp"
#include "qclass/oracle.hpp"
#include "qclass/router.hpp"
#include "qclass/simulator.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qclass {

struct LabeledSample {
    std::string label;
    FeatureVector features;

    friend bool operator==(const LabeledSample &, const LabeledSample &) = default;
};

/**
 * @brief Labeled binary training samples over F regions.
 *
 * Class ids follow the order in which labels first appear, so the first
 * label is class 0 (class index qubit |0>).
 */
class Dataset {
  public:
    explicit Dataset(std::vector<LabeledSample> samples);

    [[nodiscard]] std::size_t regions() const noexcept { return regions_; }
    [[nodiscard]] const std::vector<LabeledSample> &samples() const noexcept {
        return samples_;
    }
    [[nodiscard]] const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }
    [[nodiscard]] std::size_t num_classes() const noexcept { return labels_.size(); }
    /// Samples grouped by class id.
    [[nodiscard]] std::vector<std::vector<FeatureVector>> members() const;

    friend bool operator==(const Dataset &, const Dataset &) = default;

  private:
    std::vector<LabeledSample> samples_;
    std::vector<std::string> labels_;
    std::size_t regions_{0};
};

struct RunConfig {
    Metric metric{Metric::AIP};
    /// 0 selects exact probabilities.
    std::uint64_t shots{0};
    std::uint64_t seed{0};
    std::optional<SignPrecondition> sign;
    std::optional<CouplingGraph> graph;
    /// Pad F up to the next power of two with "no CNV" regions.
    bool pad_to_pow2{false};
    /// Restrict the swap test to pairs that can differ.
    bool elide{true};
    /// Data-qubit budget per register; AIP runs over it try zero-coefficient
    /// exclusion first.
    std::optional<std::size_t> max_data_qubits;
    SamplingOptions sampling{};
};

struct ClassVectors {
    std::vector<FeatureVector> vectors;
    /// Feature-basis norm of each class vector.
    std::vector<double> eta;
    std::vector<std::string> warnings;
};

/// Componentwise sum per class; warns when classes differ in W.
[[nodiscard]] ClassVectors build_class_vectors(const Dataset &dataset);

/// Everything needed to simulate one two-class run.
struct ClassifierBuild {
    ClassifierCircuit circuit;
    std::vector<EncodedState> classes;
    EncodedState test;
    /// Regions kept by zero-coefficient exclusion (empty if not applied).
    std::vector<std::size_t> kept_regions;
    std::size_t pad_count{0};
    /// True if the gate-level preparation failed and |psi0> was loaded.
    bool direct_load{false};
    std::vector<std::string> warnings;
};

/// Encodes and builds the circuit for a two-class dataset.
[[nodiscard]] ClassifierBuild build_classifier(const Dataset &dataset,
                                               const FeatureVector &test,
                                               const RunConfig &config);

struct RunReport {
    static constexpr int schema_version = 1;

    Metric metric{Metric::AIP};
    std::vector<std::string> labels;
    /// False when the run fell back to the classical oracle only.
    bool quantum{false};
    std::uint64_t shots{0};
    std::uint64_t seed{0};
    std::size_t num_qubits{0};
    std::optional<SwapTestProbabilities> exact;
    std::optional<Histogram> histogram;
    /// rho_10 and rho_11 used for the decision (empirical when sampled).
    double rho10{0.0};
    double rho11{0.0};
    /// rho_11 / rho_10; empty when rho_10 = 0.
    std::optional<double> ratio;
    Decision predicted;
    Decision oracle;
    std::vector<ClassScore> scores;
    /// Norm divided out of each encoded class vector.
    std::vector<double> eta;
    std::size_t cswap_count{0};
    std::size_t swap_count{0};
    std::size_t pad_count{0};
    std::vector<std::size_t> kept_regions;
    bool direct_load{false};
    std::vector<std::string> warnings;

    [[nodiscard]] std::string label_of(const Decision &d) const {
        return d.class_id ? labels[*d.class_id] : "ambiguous";
    }
};

/**
 * @brief Runs one classification.
 *
 * Throws PreconditionError for SIP without a sign assumption and
 * InvalidArgument for malformed data. Datasets with more than two classes
 * get an oracle-only report with a warning.
 */
[[nodiscard]] RunReport run(const Dataset &dataset, const FeatureVector &test,
                            const RunConfig &config);

/// Decision from the two swap signals rho_10 and rho_11.
[[nodiscard]] Decision decide_from_rho(double rho10, double rho11, Metric metric,
                                       std::optional<SignPrecondition> sign,
                                       double tie_tolerance);

struct ReferenceProblem {
    std::string name;
    Dataset dataset;
    FeatureVector test;
    RunConfig config;
    std::size_t expected_class{0};
    double expected_rho10{0.0};
    double expected_rho11{0.0};
};

/// "5q-ex1", "14q-ex1" and "14q-ex2".
[[nodiscard]] std::vector<std::string> reference_problem_names();
/// Throws InvalidArgument for an unknown name.
[[nodiscard]] ReferenceProblem reference_problem(const std::string &name);

} // namespace qclass
