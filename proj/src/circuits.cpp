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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qclass {

namespace {

constexpr double kFidelityFloor = 1.0 - 1e-6;
constexpr double kAngleTol = 1e-9;

std::size_t register_value(std::size_t index, std::span<const std::size_t> reg,
                           std::size_t n) {
    std::size_t v = 0;
    for (auto q : reg) {
        v = (v << 1) | ((index & qubit_mask(q, n)) ? 1U : 0U);
    }
    return v;
}

void check_widths(const std::array<StateVector, 2> &classes,
                  const StateVector &test, const QubitRoles &roles) {
    roles.validate();
    for (const auto &c : classes) {
        if (c.num_qubits() != roles.d.size()) {
            throw InvalidArgument("class state spans " +
                                  std::to_string(c.num_qubits()) +
                                  " qubits, roles give " +
                                  std::to_string(roles.d.size()));
        }
    }
    if (test.num_qubits() != roles.t.size()) {
        throw InvalidArgument("test state spans " +
                              std::to_string(test.num_qubits()) +
                              " qubits, roles give " +
                              std::to_string(roles.t.size()));
    }
}

// Angle reduced into [-2pi, 2pi); Ry has period 4pi.
double wrap4pi(double a) {
    const double period = 4.0 * std::numbers::pi;
    a = std::fmod(a + 2.0 * std::numbers::pi, period);
    if (a < 0) {
        a += period;
    }
    return a - 2.0 * std::numbers::pi;
}

bool near(double a, double b) { return std::abs(a - b) < kAngleTol; }

ProductFit fit_or_throw(const StateVector &s, const char *what) {
    auto fit = fit_product_state(s);
    if (fit.fidelity() < kFidelityFloor) {
        throw UnpreparableState(std::string(what) +
                                " is not a product state (fidelity " +
                                std::to_string(fit.fidelity()) + ")");
    }
    return fit;
}

} // namespace

QubitRoles QubitRoles::standard(std::size_t data_qubits) {
    QubitRoles r;
    r.m = 0;
    for (std::size_t i = 0; i < data_qubits; ++i) {
        r.d.push_back(1 + i);
        r.t.push_back(1 + data_qubits + i);
    }
    r.s = 1 + 2 * data_qubits;
    return r;
}

void QubitRoles::validate() const {
    if (d.size() != t.size()) {
        throw InvalidArgument("class and test registers differ in width");
    }
    std::vector<std::size_t> all{s, m};
    all.insert(all.end(), d.begin(), d.end());
    all.insert(all.end(), t.begin(), t.end());
    const std::size_t n = num_qubits();
    for (auto q : all) {
        if (q >= n) {
            throw InvalidArgument("role qubit " + std::to_string(q) +
                                  " out of range");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw InvalidArgument("qubit assigned to two roles");
    }
}

std::size_t ClassifierCircuit::count(GateKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        gates.begin(), gates.end(), [kind](const Gate &g) { return g.kind == kind; }));
}

SwapTestProbabilities swap_test_probabilities(const StateVector &state,
                                              const QubitRoles &roles) {
    const std::array<std::size_t, 2> sm{roles.s, roles.m};
    const auto dist = exact_probabilities(state, sm);
    SwapTestProbabilities out;
    for (std::size_t s = 0; s < 2; ++s) {
        for (std::size_t k = 0; k < 2; ++k) {
            out.p[s][k] = dist[(s << 1) | k];
        }
    }
    return out;
}

double expected_rho(const StateVector &test, const StateVector &cls,
                    std::size_t num_classes) {
    const double a2 = std::norm(test.inner(cls));
    return (1.0 - a2) / (2.0 * static_cast<double>(num_classes));
}

std::vector<Gate> controlled_ry(std::size_t control, std::size_t target,
                                double theta) {
    return {Gate::ry(target, theta / 2), Gate::cnot(control, target),
            Gate::ry(target, -theta / 2), Gate::cnot(control, target)};
}

std::vector<Gate> rotation_routine(double ratio, std::size_t m, std::size_t d) {
    if (!(ratio > 0.0)) {
        throw InvalidArgument("rotation_routine: ratio must be positive");
    }
    const double theta = std::atan(ratio);
    // Ry(pi - th) then the m-controlled part of Ry(-2 th), merged.
    return {Gate::h(m), Gate::ry(d, std::numbers::pi - theta), Gate::cnot(m, d),
            Gate::ry(d, theta), Gate::cnot(m, d)};
}

StateVector initial_state(const std::array<StateVector, 2> &classes,
                          const StateVector &test, const QubitRoles &roles) {
    check_widths(classes, test, roles);
    const std::size_t n = roles.num_qubits();
    const double w = 1.0 / std::numbers::sqrt2;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (x & qubit_mask(roles.s, n)) {
            continue;
        }
        const std::size_t k = (x & qubit_mask(roles.m, n)) ? 1 : 0;
        amps[x] = classes[k][register_value(x, roles.d, n)] *
                  test[register_value(x, roles.t, n)] * w;
    }
    return StateVector::from_amplitudes(std::move(amps), 1e-9);
}

std::vector<Gate> build_initial_state_prep(const std::array<StateVector, 2> &classes,
                                           const StateVector &test,
                                           const QubitRoles &roles) {
    check_widths(classes, test, roles);
    std::vector<Gate> gates;

    const auto tfit = fit_or_throw(test, "test state");
    for (const auto &g : binomial_pattern_gates(tfit.pairs, roles.t)) {
        gates.push_back(g);
    }

    const auto &c0 = classes[0];
    const auto &c1 = classes[1];
    // Two-region shape: class 0 entirely in the second region, class 1
    // spread over both with positive weights.
    if (roles.d.size() == 1 && std::abs(c0[0]) < 1e-12 &&
        std::abs(c0[1] - Complex{1}) < 1e-12 && c1[0].real() > 0 &&
        c1[1].real() > 0 && std::abs(c1[0].imag()) < 1e-12 &&
        std::abs(c1[1].imag()) < 1e-12) {
        const auto rr = rotation_routine(c1[0].real() / c1[1].real(), roles.m,
                                         roles.d[0]);
        gates.insert(gates.end(), rr.begin(), rr.end());
    } else {
        const auto f0 = fit_or_throw(c0, "class 0 state");
        const auto f1 = fit_or_throw(c1, "class 1 state");
        gates.push_back(Gate::h(roles.m));
        bool flip = false;
        for (std::size_t i = 0; i < roles.d.size(); ++i) {
            const std::size_t q = roles.d[i];
            const double th0 = ry_angle(f0.pairs[i]);
            const double delta = wrap4pi(ry_angle(f1.pairs[i]) - th0);
            const bool has_th0 = !near(wrap4pi(th0), 0.0);
            if (near(delta, 0.0) || near(std::abs(delta), 2.0 * std::numbers::pi)) {
                // Ry(th0 + 2pi) = -Ry(th0): same rotation, sign on branch 1.
                flip ^= !near(delta, 0.0);
                if (has_th0) {
                    gates.push_back(Gate::ry(q, th0));
                }
            } else if (near(std::abs(delta), std::numbers::pi)) {
                // Ry(th0)|1> = Ry(th0 + pi)|0>.
                flip ^= delta < 0;
                gates.push_back(Gate::cnot(roles.m, q));
                if (has_th0) {
                    gates.push_back(Gate::ry(q, th0));
                }
            } else {
                if (has_th0) {
                    gates.push_back(Gate::ry(q, th0));
                }
                for (const auto &g : controlled_ry(roles.m, q, delta)) {
                    gates.push_back(g);
                }
            }
        }
        if (flip) {
            // Z on the class index.
            gates.push_back(Gate::h(roles.m));
            gates.push_back(Gate::x(roles.m));
            gates.push_back(Gate::h(roles.m));
        }
    }

    const auto target = initial_state(classes, test, roles);
    const double fid = std::norm(target.inner(simulate(roles.num_qubits(), gates)));
    if (fid < kFidelityFloor) {
        throw UnpreparableState("state preparation fidelity " +
                                std::to_string(fid) + " below floor");
    }
    return gates;
}

namespace {

void check_pairs(const std::vector<SwapPair> &pairs, const QubitRoles &roles) {
    for (const auto &[dq, tq] : pairs) {
        const auto di = std::find(roles.d.begin(), roles.d.end(), dq);
        const auto ti = std::find(roles.t.begin(), roles.t.end(), tq);
        if (di == roles.d.end() || ti == roles.t.end()) {
            throw InvalidArgument("swap pair (" + std::to_string(dq) + ", " +
                                  std::to_string(tq) +
                                  ") is not a class/test qubit pair");
        }
    }
}

} // namespace

ClassifierCircuit append_swap_test(StateVector initial, std::vector<Gate> prep,
                                   const QubitRoles &roles,
                                   std::optional<std::vector<SwapPair>> swap_pairs,
                                   Metric metric) {
    roles.validate();
    if (initial.num_qubits() != roles.num_qubits()) {
        throw InvalidArgument("initial state width does not match roles");
    }
    std::vector<SwapPair> pairs;
    if (swap_pairs) {
        check_pairs(*swap_pairs, roles);
        pairs = std::move(*swap_pairs);
    } else {
        for (std::size_t i = 0; i < roles.d.size(); ++i) {
            pairs.emplace_back(roles.d[i], roles.t[i]);
        }
    }
    prep.push_back(Gate::h(roles.s));
    for (const auto &[dq, tq] : pairs) {
        prep.push_back(Gate::cswap(roles.s, dq, tq));
    }
    prep.push_back(Gate::h(roles.s));
    for (const auto &g : prep) {
        validate_gate(g, roles.num_qubits());
    }
    return {std::move(initial), std::move(prep), roles, metric, 2};
}

ClassifierCircuit append_swap_test(std::vector<Gate> prep, const QubitRoles &roles,
                                   std::optional<std::vector<SwapPair>> swap_pairs,
                                   Metric metric) {
    return append_swap_test(StateVector(roles.num_qubits()), std::move(prep), roles,
                            std::move(swap_pairs), metric);
}

ElisionResult elide_like_valued_pairs(const std::array<StateVector, 2> &classes,
                                      const StateVector &test,
                                      const QubitRoles &roles) {
    check_widths(classes, test, roles);
    ElisionResult out;
    std::vector<SwapPair> all;
    for (std::size_t i = 0; i < roles.d.size(); ++i) {
        all.emplace_back(roles.d[i], roles.t[i]);
    }

    constexpr double tol = 1e-9;
    const auto tf = fit_product_state(test);
    const auto f0 = fit_product_state(classes[0]);
    const auto f1 = fit_product_state(classes[1]);
    if (tf.residual > tol || f0.residual > tol || f1.residual > tol) {
        out.pairs = std::move(all);
        out.product_form = false;
        return out;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto overlap = [&](const ProductFit &f) {
            return std::abs(tf.pairs[i].a * f.pairs[i].a +
                            tf.pairs[i].b * f.pairs[i].b);
        };
        if (std::min(overlap(f0), overlap(f1)) < 1.0 - tol) {
            out.pairs.push_back(all[i]);
        }
    }
    return out;
}

std::vector<Gate> decompose_cswap(const Gate &gate) {
    if (gate.kind != GateKind::CSWAP) {
        throw InvalidArgument("decompose_cswap: not a CSWAP gate");
    }
    const auto [c, a, b] = gate.qubits;
    return {Gate::cnot(b, a), Gate::toffoli(c, a, b), Gate::cnot(b, a)};
}

std::vector<Gate> decompose_toffoli(const Gate &gate) {
    if (gate.kind != GateKind::Toffoli) {
        throw InvalidArgument("decompose_toffoli: not a Toffoli gate");
    }
    const auto [c1, c2, t] = gate.qubits;
    return {Gate::h(t),        Gate::cnot(c2, t), Gate::tdg(t),
            Gate::cnot(c1, t), Gate::t(t),        Gate::cnot(c2, t),
            Gate::tdg(t),      Gate::cnot(c1, t), Gate::t(c2),
            Gate::t(t),        Gate::h(t),        Gate::cnot(c1, c2),
            Gate::t(c1),       Gate::tdg(c2),     Gate::cnot(c1, c2)};
}

std::vector<Gate> lower_to_two_qubit(std::span<const Gate> gates) {
    std::vector<Gate> out;
    auto push_toffoli = [&out](const Gate &g) {
        const auto parts = decompose_toffoli(g);
        out.insert(out.end(), parts.begin(), parts.end());
    };
    for (const auto &g : gates) {
        if (g.kind == GateKind::CSWAP) {
            for (const auto &part : decompose_cswap(g)) {
                if (part.kind == GateKind::Toffoli) {
                    push_toffoli(part);
                } else {
                    out.push_back(part);
                }
            }
        } else if (g.kind == GateKind::Toffoli) {
            push_toffoli(g);
        } else {
            out.push_back(g);
        }
    }
    return out;
}

} // namespace qclass
