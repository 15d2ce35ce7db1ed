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
#include "qclass/encoding.hpp"
#include "qclass/error.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace qclass {
namespace {

void expect_amplitudes(const StateVector &psi, std::vector<double> want) {
    ASSERT_EQ(psi.dimension(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(std::abs(psi[i] - Complex(want[i])), 0.0, 1e-12) << i;
    }
}

FeatureVector members_sum(std::vector<std::vector<std::int64_t>> rows) {
    std::vector<FeatureVector> m;
    for (auto &r : rows) {
        m.push_back(FeatureVector::sample(std::move(r)));
    }
    return FeatureVector::class_sum(m);
}

TEST(EncodeAip, Sample) {
    const double r = 1.0 / std::sqrt(3.0);
    const auto e = encode_aip(FeatureVector::sample({1, 1, 1, 0}));
    expect_amplitudes(e.state, {r, r, r, 0});
    EXPECT_NEAR(e.eta, std::sqrt(3.0), 1e-12);
}

TEST(EncodeAip, SummedIdenticalSamples) {
    const auto v = members_sum({{1, 1, 1, 0}, {1, 1, 1, 0}});
    EXPECT_EQ(v[0], 2);
    const double r = 2.0 / std::sqrt(12.0);
    expect_amplitudes(encode_aip(v).state, {r, r, r, 0});
}

TEST(EncodeAip, SingleBasisState) {
    expect_amplitudes(encode_aip(FeatureVector::sample({1, 0, 0, 0})).state, {1, 0, 0, 0});
}

TEST(EncodeAip, Errors) {
    EXPECT_THROW((void)encode_aip(FeatureVector::sample({1, 0, 1})), InvalidArgument);
    EXPECT_THROW((void)encode_aip(FeatureVector::sample({0, 0, 0, 0})), InvalidArgument);
}

TEST(EncodeSip, Sample) {
    expect_amplitudes(encode_sip(FeatureVector::sample({1, 1, 1, 0})).state,
                      {0.5, 0.5, 0.5, -0.5});
}

TEST(EncodeSip, AllOnes) {
    expect_amplitudes(encode_sip(FeatureVector::sample({1, 1, 1, 1})).state,
                      {0.5, 0.5, 0.5, 0.5});
}

TEST(EncodeSip, ClassOfTwo) {
    const auto v = members_sum({{1, 1, 1, 0}, {1, 0, 1, 0}});
    EXPECT_EQ(v.signed_components(), (std::vector<std::int64_t>{2, 0, 2, -2}));
    const double r = 1.0 / std::sqrt(12.0);
    expect_amplitudes(encode_sip(v).state, {2 * r, 0, 2 * r, -2 * r});
}

TEST(EncodeSip, ZeroSignedVectorRejected) {
    const auto v = members_sum({{1, 0}, {0, 1}});
    EXPECT_THROW((void)encode_sip(v), InvalidArgument);
    EXPECT_THROW((void)encode_sip(FeatureVector::sample({1, 0, 1})), InvalidArgument);
}

TEST(EncodeSip, InnerProductIsScaledSigma) {
    // <t|c> * eta_t * eta_c equals the signed dot product.
    const auto t = FeatureVector::sample({1, 0, 0, 1});
    const auto c = members_sum({{1, 1, 0, 0}, {1, 0, 0, 1}, {0, 0, 0, 1}});
    const auto et = encode_sip(t);
    const auto ec = encode_sip(c);
    const auto ts = t.signed_components();
    const auto cs = c.signed_components();
    double dot = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        dot += static_cast<double>(ts[i] * cs[i]);
    }
    EXPECT_NEAR(et.state.inner(ec.state).real() * et.eta * ec.eta, dot, 1e-12);
}

double grid_best_overlap_bell(double step) {
    // max over real products (cos a, sin a) x (cos b, sin b) of |<Bell|.>|.
    const double r = 1.0 / std::sqrt(2.0);
    double best = 0.0;
    for (double a = 0.0; a < std::numbers::pi; a += step) {
        for (double b = 0.0; b < std::numbers::pi; b += step) {
            const double ov = r * (std::cos(a) * std::cos(b) + std::sin(a) * std::sin(b));
            best = std::max(best, std::abs(ov));
        }
    }
    return best;
}

TEST(FitProductState, Uniform) {
    const auto fit = fit_product_state(StateVector::from_amplitudes({0.5, 0.5, 0.5, 0.5}));
    EXPECT_LT(fit.residual, 1e-9);
    EXPECT_TRUE(fit.converged);
    for (const auto &p : fit.pairs) {
        EXPECT_NEAR(p.a, 1.0 / std::sqrt(2.0), 1e-6);
        EXPECT_NEAR(p.b, 1.0 / std::sqrt(2.0), 1e-6);
    }
}

TEST(FitProductState, BellAgainstGridSearch) {
    const double r = 1.0 / std::sqrt(2.0);
    const auto fit = fit_product_state(StateVector::from_amplitudes({r, 0, 0, r}));
    const double oracle = 1.0 - grid_best_overlap_bell(1e-3);
    EXPECT_NEAR(fit.residual, oracle, 1e-3);
    EXPECT_NEAR(fit.residual, 1.0 - r, 1e-9);
}

TEST(FitProductState, BasisState) {
    const auto fit = fit_product_state(StateVector::basis(2, 0b01));
    EXPECT_LT(fit.residual, 1e-9);
    EXPECT_NEAR(std::abs(fit.pairs[0].a), 1.0, 1e-9);
    EXPECT_NEAR(std::abs(fit.pairs[1].b), 1.0, 1e-9);
}

TEST(FitProductState, OverlapHasNonNegativeRealPart) {
    const auto target = StateVector::from_amplitudes({0.0, 0.0, 0.0, -1.0});
    const auto fit = fit_product_state(target);
    EXPECT_LT(fit.residual, 1e-9);
    EXPECT_NEAR(target.inner(fit.state()).real(), 1.0, 1e-9);
}

TEST(FitProductState, RandomProducts) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        std::vector<QubitPair> pairs(n);
        for (auto &p : pairs) {
            const double a = angle(rng);
            p = {std::cos(a), std::sin(a)};
        }
        const auto fit = fit_product_state(product_state(pairs));
        EXPECT_LT(fit.residual, 1e-9) << "trial " << trial;
    }
}

TEST(FitProductState, SingleQubitIsExact) {
    const auto fit = fit_product_state(StateVector::from_amplitudes({0.6, -0.8}));
    EXPECT_LT(fit.residual, 1e-12);
    EXPECT_NEAR(fit.pairs[0].a, 0.6, 1e-12);
    EXPECT_NEAR(fit.pairs[0].b, -0.8, 1e-12);
}

TEST(BinomialPattern, FiveHadamardEquivalents) {
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<QubitPair> pattern(5, {r, r});
    const auto gates = binomial_pattern_gates(pattern);
    ASSERT_EQ(gates.size(), 5U);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(gates[i].kind, GateKind::Ry);
        EXPECT_EQ(gates[i].qubits[0], i);
        EXPECT_NEAR(gates[i].angle, std::numbers::pi / 2, 1e-15);
    }
    const auto psi = simulate(5, gates);
    for (auto a : psi.amplitudes()) {
        EXPECT_NEAR(std::abs(a - Complex(std::pow(r, 5))), 0.0, 1e-12);
    }
}

TEST(BinomialPattern, NegativePair) {
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<QubitPair> pattern{{r, -r}};
    const auto gates = binomial_pattern_gates(pattern);
    ASSERT_EQ(gates.size(), 1U);
    EXPECT_NEAR(gates[0].angle, -std::numbers::pi / 2, 1e-15);
}

TEST(BinomialPattern, IdentityPairAndErrors) {
    const std::vector<QubitPair> one{{1.0, 0.0}};
    EXPECT_TRUE(binomial_pattern_gates(one).empty());
    const std::vector<QubitPair> zero{{0.0, 0.0}};
    EXPECT_THROW((void)binomial_pattern_gates(zero), InvalidArgument);
}

TEST(BinomialPattern, UnnormalizedPairIsNormalized) {
    const std::vector<QubitPair> p{{3.0, 4.0}};
    const std::vector<std::size_t> q{2};
    const auto gates = binomial_pattern_gates(p, q);
    ASSERT_EQ(gates.size(), 1U);
    EXPECT_EQ(gates[0].qubits[0], 2U);
    const auto psi = simulate(3, gates);
    EXPECT_NEAR(psi[0].real(), 0.6, 1e-12);
    EXPECT_NEAR(psi[1].real(), 0.8, 1e-12);
}

TEST(ZeroCoefficientExclusion, ReducedLabels) {
    const auto test = FeatureVector::sample({1, 0, 1, 0});
    const std::vector<FeatureVector> classes{FeatureVector::class_counts({5, 4, 3, 2}, 5)};
    const auto r = zero_coefficient_exclusion(test, classes);
    EXPECT_EQ(r.index_map, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(std::vector<std::int64_t>(r.test.components().begin(), r.test.components().end()),
              (std::vector<std::int64_t>{1, 1}));
    EXPECT_EQ(r.classes[0][0], 5);
    EXPECT_EQ(r.classes[0][1], 3);
    // Dot products before and after: 5 + 3 = 8 on both forms.
    EXPECT_EQ(r.test[0] * r.classes[0][0] + r.test[1] * r.classes[0][1], 8);
}

TEST(ZeroCoefficientExclusion, AllOnesIsIdentity) {
    const auto test = FeatureVector::sample({1, 1, 1, 1});
    const std::vector<FeatureVector> classes{FeatureVector::class_counts({1, 0, 2, 1}, 2)};
    const auto r = zero_coefficient_exclusion(test, classes);
    EXPECT_EQ(r.test, test);
    EXPECT_EQ(r.classes[0], classes[0]);
    EXPECT_EQ(r.index_map, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(ZeroCoefficientExclusion, AllZeroTestRejected) {
    const auto test = FeatureVector::sample({0, 0});
    const std::vector<FeatureVector> classes{FeatureVector::sample({1, 0})};
    EXPECT_THROW((void)zero_coefficient_exclusion(test, classes), InvalidArgument);
}

TEST(FeatureVector, SampleMustBeBinary) {
    EXPECT_THROW((void)FeatureVector::sample({0, 2}), InvalidArgument);
    EXPECT_THROW((void)FeatureVector::sample({}), InvalidArgument);
}

TEST(FeatureVector, ClassCountsBoundedByW) {
    EXPECT_THROW((void)FeatureVector::class_counts({3, 0}, 2), InvalidArgument);
    EXPECT_THROW((void)FeatureVector::class_counts({-1, 0}, 2), InvalidArgument);
}

TEST(FeatureVector, PaddedAppendsZeros) {
    const auto v = FeatureVector::sample({1, 0, 1}).padded(1);
    EXPECT_EQ(v.size(), 4U);
    EXPECT_EQ(v[3], 0);
    EXPECT_EQ(next_power_of_two(3), 4U);
    EXPECT_EQ(next_power_of_two(4), 4U);
    EXPECT_EQ(next_power_of_two(1), 1U);
}

TEST(Metric, ParseRoundTrip) {
    EXPECT_EQ(parse_metric("aip"), Metric::AIP);
    EXPECT_EQ(parse_metric(to_string(Metric::SIP)), Metric::SIP);
    EXPECT_THROW((void)parse_metric("xyz"), InvalidArgument);
}

} // namespace
} // namespace qclass
