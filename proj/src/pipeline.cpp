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
#include "qclass/pipeline.hpp"

#include "qclass/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace qclass {

Dataset::Dataset(std::vector<LabeledSample> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw InvalidArgument("dataset has no samples");
    }
    regions_ = samples_.front().features.size();
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto &s = samples_[i];
        if (s.label.empty()) {
            throw InvalidArgument("sample " + std::to_string(i) + " has an empty label");
        }
        if (s.features.kind() != VectorKind::Sample) {
            throw InvalidArgument("sample " + std::to_string(i) + " is not binary");
        }
        if (s.features.size() != regions_) {
            throw InvalidArgument("sample " + std::to_string(i) + " has " +
                                  std::to_string(s.features.size()) +
                                  " regions, expected " + std::to_string(regions_));
        }
        if (std::find(labels_.begin(), labels_.end(), s.label) == labels_.end()) {
            labels_.push_back(s.label);
        }
    }
    if (labels_.size() < 2) {
        throw InvalidArgument("dataset needs at least two classes");
    }
}

std::vector<std::vector<FeatureVector>> Dataset::members() const {
    std::vector<std::vector<FeatureVector>> out(labels_.size());
    for (const auto &s : samples_) {
        const auto k = static_cast<std::size_t>(
            std::find(labels_.begin(), labels_.end(), s.label) - labels_.begin());
        out[k].push_back(s.features);
    }
    return out;
}

namespace {

double coefficient_norm(const FeatureVector &v, Metric metric) {
    double sq = 0.0;
    for (auto c : metric_coefficients(v, metric)) {
        sq += static_cast<double>(c) * static_cast<double>(c);
    }
    return std::sqrt(sq);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void warn_unequal_eta(const std::vector<double> &eta, std::vector<std::string> &warnings) {
    const auto [lo, hi] = std::minmax_element(eta.begin(), eta.end());
    if (*hi - *lo > 1e-9 * std::max(1.0, *hi)) {
        std::string msg = "class normalization constants differ (eta:";
        for (auto e : eta) {
            msg += " " + format_double(e);
        }
        warnings.push_back(msg + "); inner products are not directly comparable");
    }
}

std::size_t log2_exact(std::size_t n) {
    return static_cast<std::size_t>(std::countr_zero(n));
}

} // namespace

ClassVectors build_class_vectors(const Dataset &dataset) {
    ClassVectors out;
    const auto groups = dataset.members();
    for (std::size_t k = 0; k < groups.size(); ++k) {
        if (groups[k].empty()) {
            throw InvalidArgument("class '" + dataset.labels()[k] + "' is empty");
        }
        out.vectors.push_back(FeatureVector::class_sum(groups[k]));
        out.eta.push_back(coefficient_norm(out.vectors.back(), Metric::AIP));
    }
    const auto w0 = groups.front().size();
    if (std::any_of(groups.begin(), groups.end(),
                    [w0](const auto &g) { return g.size() != w0; })) {
        std::string msg = "classes have unequal training counts (W:";
        for (const auto &g : groups) {
            msg += " " + std::to_string(g.size());
        }
        out.warnings.push_back(msg + ")");
    }
    return out;
}

ClassifierBuild build_classifier(const Dataset &dataset, const FeatureVector &test,
                                 const RunConfig &config) {
    if (dataset.num_classes() != 2) {
        throw InvalidArgument("the swap-test circuit handles exactly two classes");
    }
    if (test.kind() != VectorKind::Sample || test.size() != dataset.regions()) {
        throw InvalidArgument("test vector must be a binary sample with " +
                              std::to_string(dataset.regions()) + " regions");
    }
    const auto cv = build_class_vectors(dataset);
    std::vector<std::size_t> kept;
    std::size_t pad_count = 0;
    std::vector<std::string> warnings;

    FeatureVector t = test;
    std::vector<FeatureVector> classes = cv.vectors;
    bool reduce = false;
    const auto budget = config.max_data_qubits;
    if (budget && log2_exact(next_power_of_two(t.size())) > *budget) {
        if (config.metric != Metric::AIP) {
            throw PreconditionError("data needs more than " + std::to_string(*budget) +
                                    " qubits per register and exclusion only "
                                    "applies to AIP");
        }
        auto ex = zero_coefficient_exclusion(t, classes);
        t = std::move(ex.test);
        classes = std::move(ex.classes);
        kept = std::move(ex.index_map);
        warnings.push_back("zero-coefficient exclusion kept " +
                                 std::to_string(t.size()) + " of " +
                                 std::to_string(test.size()) + " regions");
        reduce = true;
    }
    if (!std::has_single_bit(t.size())) {
        if (!config.pad_to_pow2 && !reduce) {
            throw InvalidArgument("region count " + std::to_string(t.size()) +
                                  " is not a power of two; enable padding");
        }
        pad_count = next_power_of_two(t.size()) - t.size();
        t = t.padded(pad_count);
        for (auto &c : classes) {
            c = c.padded(pad_count);
        }
    }
    const std::size_t k = log2_exact(t.size());
    if (budget && k > *budget) {
        throw PreconditionError("data needs " + std::to_string(k) +
                                " qubits per register, budget is " +
                                std::to_string(*budget));
    }

    auto test_enc = encode(t, config.metric);
    std::vector<EncodedState> class_enc;
    std::vector<double> eta;
    for (const auto &c : classes) {
        class_enc.push_back(encode(c, config.metric));
        eta.push_back(class_enc.back().eta);
    }
    warn_unequal_eta(eta, warnings);

    const std::array<StateVector, 2> states{class_enc[0].state, class_enc[1].state};
    const auto roles = QubitRoles::standard(k);
    std::vector<Gate> prep;
    StateVector initial(roles.num_qubits());
    bool direct_load = false;
    try {
        prep = build_initial_state_prep(states, test_enc.state, roles);
    } catch (const UnpreparableState &e) {
        direct_load = true;
        warnings.push_back(std::string("gate-level preparation unavailable (") +
                           e.what() + "); initial state loaded directly");
        initial = initial_state(states, test_enc.state, roles);
    }
    std::optional<std::vector<SwapPair>> pairs;
    if (config.elide) {
        pairs = elide_like_valued_pairs(states, test_enc.state, roles).pairs;
    }
    auto circuit = append_swap_test(std::move(initial), std::move(prep), roles,
                                    std::move(pairs), config.metric);
    return {std::move(circuit), std::move(class_enc), std::move(test_enc),
            std::move(kept),    pad_count,            direct_load,
            std::move(warnings)};
}

Decision decide_from_rho(double rho10, double rho11, Metric metric,
                         std::optional<SignPrecondition> sign, double tie_tolerance) {
    if (std::abs(rho10 - rho11) <= tie_tolerance) {
        return Decision::ambiguous_result();
    }
    if (metric == Metric::SIP && !sign) {
        throw PreconditionError("SIP classification requires a sign precondition");
    }
    const bool lower_wins =
        metric == Metric::AIP || *sign == SignPrecondition::MatchesDominate;
    const bool class0_lower = rho10 < rho11;
    return Decision::of(lower_wins == class0_lower ? 0 : 1);
}

RunReport run(const Dataset &dataset, const FeatureVector &test,
              const RunConfig &config) {
    if (dataset.num_classes() < 2) {
        throw InvalidArgument("dataset needs at least two classes");
    }
    if (config.metric == Metric::SIP && !config.sign) {
        throw PreconditionError("SIP runs require a sign precondition "
                                "(matches or mismatches dominate)");
    }
    if (test.size() != dataset.regions()) {
        throw InvalidArgument("test vector has " + std::to_string(test.size()) +
                              " regions, dataset has " +
                              std::to_string(dataset.regions()));
    }

    RunReport report;
    report.metric = config.metric;
    report.labels = dataset.labels();
    report.shots = config.shots;
    report.seed = config.seed;

    const auto groups = dataset.members();
    for (std::size_t k = 0; k < groups.size(); ++k) {
        report.scores.push_back(class_score(k, test, groups[k]));
    }
    report.oracle = decide(report.scores, config.metric, config.sign);

    const auto cv = build_class_vectors(dataset);
    report.warnings = cv.warnings;

    if (dataset.num_classes() > 2) {
        report.warnings.push_back("more than two classes: quantum path skipped, "
                                  "oracle decision reported");
        for (const auto &v : cv.vectors) {
            report.eta.push_back(coefficient_norm(v, config.metric));
        }
        report.predicted = report.oracle;
        return report;
    }

    auto build = build_classifier(dataset, test, config);
    report.quantum = true;
    report.num_qubits = build.circuit.num_qubits();
    report.cswap_count = build.circuit.count(GateKind::CSWAP);
    report.pad_count = build.pad_count;
    report.kept_regions = build.kept_regions;
    report.direct_load = build.direct_load;
    for (const auto &e : build.classes) {
        report.eta.push_back(e.eta);
    }
    report.warnings.insert(report.warnings.end(), build.warnings.begin(),
                           build.warnings.end());

    const auto &circuit = build.circuit;
    StateVector final_state = circuit.initial;
    if (config.graph) {
        const auto lowered = lower_to_two_qubit(circuit.gates);
        const auto routed = route(lowered, circuit.num_qubits(), *config.graph);
        report.swap_count = swap_count(routed);
        auto phys = embed_state(circuit.initial, routed.initial_layout,
                                routed.num_physical);
        phys.apply(routed.gates);
        final_state = extract_logical(phys, routed.final_layout);
    } else {
        final_state.apply(circuit.gates);
    }

    report.exact = swap_test_probabilities(final_state, circuit.roles);
    report.rho10 = report.exact->rho(1, 0);
    report.rho11 = report.exact->rho(1, 1);
    double tie_tol = 1e-12;
    if (config.shots > 0) {
        const std::array<std::size_t, 2> sm{circuit.roles.s, circuit.roles.m};
        report.histogram = sample_measurements(final_state, sm, config.shots,
                                               config.seed, config.sampling);
        report.rho10 = report.histogram->frequency(0b10);
        report.rho11 = report.histogram->frequency(0b11);
        tie_tol = 0.0;
    }
    if (report.rho10 != 0.0) {
        report.ratio = report.rho11 / report.rho10;
    } else {
        report.warnings.push_back("rho_10 is zero; ratio undefined");
    }
    report.predicted = decide_from_rho(report.rho10, report.rho11, config.metric,
                                       config.sign, tie_tol);
    return report;
}

namespace {

FeatureVector ones_in(std::size_t regions, std::size_t first, std::size_t last) {
    std::vector<std::int64_t> v(regions, 0);
    for (std::size_t i = first; i < last; ++i) {
        v[i] = 1;
    }
    return FeatureVector::sample(std::move(v));
}

} // namespace

std::vector<std::string> reference_problem_names() {
    return {"5q-ex1", "14q-ex1", "14q-ex2"};
}

ReferenceProblem reference_problem(const std::string &name) {
    if (name == "5q-ex1") {
        // Normal has a CNV in both regions, disease only in the second; the
        // test has one in the first.
        Dataset ds({{"disease", ones_in(2, 1, 2)}, {"normal", ones_in(2, 0, 2)}});
        return {name, std::move(ds), ones_in(2, 0, 1), RunConfig{}, 1, 0.25, 0.125};
    }
    if (name == "14q-ex1") {
        Dataset ds({{"disease", ones_in(64, 0, 32)}, {"normal", ones_in(64, 32, 64)}});
        return {name, std::move(ds), ones_in(64, 0, 16), RunConfig{}, 0, 0.125, 0.25};
    }
    if (name == "14q-ex2") {
        Dataset ds({{"disease", ones_in(64, 0, 64)}, {"normal", ones_in(64, 32, 64)}});
        RunConfig cfg;
        cfg.metric = Metric::SIP;
        cfg.sign = SignPrecondition::MismatchesDominate;
        return {name, std::move(ds), ones_in(64, 0, 32), cfg, 0, 0.25, 0.0};
    }
    throw InvalidArgument("unknown example '" + name +
                          "' (expected 5q-ex1, 14q-ex1 or 14q-ex2)");
}

} // namespace qclass
