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
// Shared helpers for the test suite: an independent dense reference for
// gate application and random generators.
#pragma once

#include "qclass/simulator.hpp"

#include <cmath>
#include <algorithm>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace qclass::testing {

using CMatrix = std::vector<std::vector<Complex>>;

// Local gate matrices written out by hand; operand 0 is the high bit.
inline CMatrix reference_matrix(const Gate &g) {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex w = std::polar(1.0, std::numbers::pi / 4);
    auto perm = [](std::vector<std::size_t> image) {
        CMatrix m(image.size(), std::vector<Complex>(image.size(), 0.0));
        for (std::size_t j = 0; j < image.size(); ++j) {
            m[image[j]][j] = 1.0;
        }
        return m;
    };
    switch (g.kind) {
    case GateKind::H:
        return {{r, r}, {r, -r}};
    case GateKind::X:
        return {{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::Ry: {
        const double c = std::cos(g.angle / 2);
        const double s = std::sin(g.angle / 2);
        return {{c, -s}, {s, c}};
    }
    case GateKind::T:
        return {{1.0, 0.0}, {0.0, w}};
    case GateKind::Tdg:
        return {{1.0, 0.0}, {0.0, std::conj(w)}};
    case GateKind::CNOT:
        return perm({0, 1, 3, 2});
    case GateKind::SWAP:
        return perm({0, 2, 1, 3});
    case GateKind::CSWAP:
        return perm({0, 1, 2, 3, 4, 6, 5, 7});
    case GateKind::Toffoli:
        return perm({0, 1, 2, 3, 4, 5, 7, 6});
    }
    return {};
}

// Builds the full 2^n x 2^n operator element by element and multiplies.
inline std::vector<Complex> dense_apply(const std::vector<Complex> &psi, const Gate &g,
                                        std::size_t n) {
    const auto local = reference_matrix(g);
    const auto ops = g.operands();
    const std::size_t dim = psi.size();
    auto bit = [n](std::size_t index, std::size_t q) { return (index >> (n - 1 - q)) & 1U; };
    auto local_index = [&](std::size_t index) {
        std::size_t l = 0;
        for (auto q : ops) {
            l = (l << 1) | bit(index, q);
        }
        return l;
    };
    auto rest = [&](std::size_t index) {
        std::size_t r = index;
        for (auto q : ops) {
            r &= ~(std::size_t{1} << (n - 1 - q));
        }
        return r;
    };
    std::vector<Complex> out(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (rest(i) == rest(j)) {
                out[i] += local[local_index(i)][local_index(j)] * psi[j];
            }
        }
    }
    return out;
}

inline std::vector<Complex> random_amplitudes(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &x : a) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto &x : a) {
        x /= std::sqrt(norm);
    }
    return a;
}

inline StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    return StateVector::from_amplitudes(random_amplitudes(n, rng));
}

inline std::vector<std::size_t> distinct_qubits(std::size_t k, std::size_t n,
                                                std::mt19937_64 &rng) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) {
        all[i] = i;
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    return all;
}

// Random gate over the full gate set; max_arity trims multi-qubit kinds.
inline Gate random_gate(std::size_t n, std::mt19937_64 &rng, std::size_t max_arity = 3) {
    static const GateKind kinds[] = {GateKind::H,    GateKind::X,    GateKind::Ry,
                                     GateKind::T,    GateKind::Tdg,  GateKind::CNOT,
                                     GateKind::SWAP, GateKind::CSWAP, GateKind::Toffoli};
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    for (;;) {
        const GateKind kind = kinds[rng() % std::size(kinds)];
        const std::size_t k = arity(kind);
        if (k > max_arity || k > n) {
            continue;
        }
        Gate g;
        g.kind = kind;
        const auto qs = distinct_qubits(k, n, rng);
        for (std::size_t i = 0; i < k; ++i) {
            g.qubits[i] = qs[i];
        }
        if (kind == GateKind::Ry) {
            g.angle = angle(rng);
        }
        return g;
    }
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

} // namespace qclass::testing
