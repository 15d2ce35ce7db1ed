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
#include "qclass/circuits.hpp"
#include "qclass/error.hpp"
#include "qclass/pipeline.hpp"
#include "qclass/router.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace qclass {
namespace {

using testing::max_abs_diff;

// Random spanning tree plus a few extra edges.
CouplingGraph random_connected(std::size_t n, std::mt19937_64 &rng, bool directed = false) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 1; v < n; ++v) {
        const std::size_t u = rng() % v;
        edges.emplace_back(rng() % 2 ? u : v, rng() % 2 ? v : u);
        if (edges.back().first == edges.back().second) {
            edges.back() = {u, v};
        }
    }
    const std::size_t extra = n > 2 ? rng() % n : 0;
    for (std::size_t i = 0; i < extra; ++i) {
        const std::size_t a = rng() % n;
        const std::size_t b = rng() % n;
        if (a != b) {
            edges.emplace_back(a, b);
        }
    }
    return {n, edges, directed};
}

void expect_equivalent(std::span<const Gate> logical, std::size_t n, const CouplingGraph &g,
                       std::mt19937_64 &rng) {
    const auto routed = route(logical, n, g);
    ASSERT_TRUE(conforms(routed.gates, g));
    const auto psi = testing::random_state(n, rng);
    const auto want = simulate(psi, logical);
    const auto phys = simulate(embed_state(psi, routed.initial_layout, g.num_qubits()),
                               routed.gates);
    const auto got = extract_logical(phys, routed.final_layout);
    ASSERT_LT(max_abs_diff(got.amplitudes(), want.amplitudes()), 1e-9);
}

TEST(CouplingGraph, Validation) {
    EXPECT_THROW((CouplingGraph{2, {{0, 0}}}), InvalidArgument);
    EXPECT_THROW((CouplingGraph{2, {{0, 2}}}), InvalidArgument);
    EXPECT_THROW((CouplingGraph{0, {}}), InvalidArgument);
    const CouplingGraph g{3, {{0, 1}}};
    EXPECT_FALSE(g.is_connected());
    EXPECT_TRUE(CouplingGraph::path(3).is_connected());
}

TEST(CouplingGraph, ShortestPath) {
    const auto g = CouplingGraph::path(4);
    EXPECT_EQ(g.shortest_path(0, 3), (std::vector<std::size_t>{0, 1, 2, 3}));
    const auto star = CouplingGraph::star(5, 2);
    EXPECT_EQ(star.shortest_path(0, 4), (std::vector<std::size_t>{0, 2, 4}));
}

TEST(CouplingGraph, DirectedArcs) {
    const CouplingGraph g{2, {{1, 0}}, true};
    EXPECT_TRUE(g.has_arc(1, 0));
    EXPECT_FALSE(g.has_arc(0, 1));
    EXPECT_TRUE(g.connected(0, 1));
}

TEST(Route, PathOfThree) {
    const std::vector<Gate> c{Gate::cnot(0, 2)};
    const auto r = route(c, 3, CouplingGraph::path(3));
    ASSERT_EQ(r.gates.size(), 2U);
    EXPECT_EQ(r.gates[0], Gate::swap(0, 1));
    EXPECT_EQ(r.gates[1], Gate::cnot(1, 2));
    EXPECT_EQ(r.final_layout, (std::vector<std::size_t>{1, 0, 2}));
    EXPECT_EQ(swap_count(r), 1U);
}

TEST(Route, PathOfFour) {
    const std::vector<Gate> c{Gate::cnot(0, 3)};
    EXPECT_EQ(swap_count(route(c, 4, CouplingGraph::path(4))), 2U);
}

TEST(Route, ConformantUnchanged) {
    const std::vector<Gate> c{Gate::h(0), Gate::cnot(0, 1), Gate::swap(1, 2), Gate::ry(2, 0.3)};
    const auto r = route(c, 3, CouplingGraph::path(3));
    EXPECT_EQ(r.gates, c);
    EXPECT_EQ(swap_count(r), 0U);
}

TEST(Route, Errors) {
    const std::vector<Gate> wide{Gate::cnot(0, 3)};
    EXPECT_THROW((void)route(wide, 4, CouplingGraph::path(3)), InvalidArgument);
    const CouplingGraph broken{3, {{0, 1}}};
    const std::vector<Gate> c{Gate::cnot(0, 1)};
    EXPECT_THROW((void)route(c, 3, broken), InvalidArgument);
    const std::vector<Gate> three{Gate::cswap(0, 1, 2)};
    EXPECT_THROW((void)route(three, 3, CouplingGraph::path(3)), InvalidArgument);
    const std::vector<std::size_t> bad_layout{0, 0, 1};
    EXPECT_THROW((void)route(c, 3, CouplingGraph::path(3), bad_layout), InvalidArgument);
}

TEST(Route, DirectedReversesCnot) {
    const CouplingGraph g{2, {{1, 0}}, true};
    const std::vector<Gate> c{Gate::cnot(0, 1)};
    const auto r = route(c, 2, g);
    EXPECT_TRUE(conforms(r.gates, g));
    std::mt19937_64 rng(1);
    expect_equivalent(c, 2, g, rng);
}

TEST(Route, FiveQubitExampleOnStar) {
    const auto p = reference_problem("5q-ex1");
    const auto build = build_classifier(p.dataset, p.test, p.config);
    const auto &roles = build.circuit.roles;
    const auto lowered = lower_to_two_qubit(build.circuit.gates);
    const auto star = CouplingGraph::star(5, 2);
    const auto r = route(lowered, roles.num_qubits(), star);
    ASSERT_TRUE(conforms(r.gates, star));
    const auto phys = simulate(embed_state(build.circuit.initial, r.initial_layout, 5), r.gates);
    const auto logical = extract_logical(phys, r.final_layout);
    const auto before = swap_test_probabilities(build.circuit.final_state(), roles);
    const auto after = swap_test_probabilities(logical, roles);
    for (std::size_t s = 0; s < 2; ++s) {
        for (std::size_t m = 0; m < 2; ++m) {
            EXPECT_NEAR(before.rho(s, m), after.rho(s, m), 1e-9);
        }
    }
}

TEST(Route, RandomCircuitsPreserveState) {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        const std::size_t phys = n + rng() % 2;
        const auto g = random_connected(phys, rng, trial % 3 == 0);
        std::vector<Gate> c;
        const std::size_t len = 1 + rng() % 25;
        for (std::size_t i = 0; i < len; ++i) {
            c.push_back(testing::random_gate(n, rng, 2));
        }
        expect_equivalent(c, n, g, rng);
    }
}

TEST(Layout, EmbedAndExtractRoundTrip) {
    std::mt19937_64 rng(6);
    const auto psi = testing::random_state(3, rng);
    const std::vector<std::size_t> layout{4, 0, 2};
    const auto phys = embed_state(psi, layout, 5);
    EXPECT_EQ(phys.num_qubits(), 5U);
    const auto back = extract_logical(phys, layout);
    EXPECT_LT(max_abs_diff(back.amplitudes(), psi.amplitudes()), 1e-15);
}

TEST(Layout, ExtractRejectsExcitedAncilla) {
    const auto phys = StateVector::basis(3, 0b001);
    const std::vector<std::size_t> layout{0, 1};
    EXPECT_THROW((void)extract_logical(phys, layout), InvalidArgument);
}

} // namespace
} // namespace qclass
