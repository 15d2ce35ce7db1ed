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
#include "qclass/simulator.hpp"

#include "qclass/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace qclass {

std::size_t arity(GateKind kind) {
    switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Ry:
    case GateKind::T:
    case GateKind::Tdg:
        return 1;
    case GateKind::CNOT:
    case GateKind::SWAP:
        return 2;
    case GateKind::CSWAP:
    case GateKind::Toffoli:
        return 3;
    }
    return 0;
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::Ry:
        return "RY";
    case GateKind::T:
        return "T";
    case GateKind::Tdg:
        return "TDG";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::SWAP:
        return "SWAP";
    case GateKind::CSWAP:
        return "CSWAP";
    case GateKind::Toffoli:
        return "TOFFOLI";
    }
    return "?";
}

bool operator==(const Gate &a, const Gate &b) {
    if (a.kind != b.kind) {
        return false;
    }
    const auto ao = a.operands();
    const auto bo = b.operands();
    if (!std::equal(ao.begin(), ao.end(), bo.begin())) {
        return false;
    }
    return a.kind != GateKind::Ry || a.angle == b.angle;
}

void validate_gate(const Gate &gate, std::size_t num_qubits) {
    if (gate.kind == GateKind::Ry && !std::isfinite(gate.angle)) {
        throw InvalidArgument("RY: angle must be finite");
    }
    const auto ops = gate.operands();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i] >= num_qubits) {
            throw InvalidArgument(std::string(gate_name(gate.kind)) +
                                  ": operand " + std::to_string(ops[i]) +
                                  " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (ops[i] == ops[j]) {
                throw InvalidArgument(std::string(gate_name(gate.kind)) +
                                      ": duplicate operand " +
                                      std::to_string(ops[i]));
            }
        }
    }
}

namespace {

// cos and sin of theta / 2, taken from a table when theta is a multiple of
// pi / 2.
std::pair<double, double> half_angle_cos_sin(double theta) {
    const double quarter = theta / (std::numbers::pi / 2);
    const double k = std::nearbyint(quarter);
    const double slack = 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(quarter));
    if (std::abs(quarter - k) > slack || std::abs(k) > 1e15) {
        return {std::cos(theta / 2), std::sin(theta / 2)};
    }
    constexpr double r = 1.0 / std::numbers::sqrt2;
    static constexpr std::array<std::pair<double, double>, 8> table{
        {{1, 0}, {r, r}, {0, 1}, {-r, r}, {-1, 0}, {-r, -r}, {0, -1}, {r, -r}}};
    const auto idx = static_cast<std::size_t>(((static_cast<long long>(k) % 8) + 8) % 8);
    return table[idx];
}

std::array<Complex, 4> single_qubit_matrix(const Gate &gate) {
    using std::numbers::sqrt2;
    const double r = 1.0 / sqrt2;
    switch (gate.kind) {
    case GateKind::H:
        return {Complex{r}, Complex{r}, Complex{r}, Complex{-r}};
    case GateKind::X:
        return {Complex{0}, Complex{1}, Complex{1}, Complex{0}};
    case GateKind::Ry: {
        const auto [c, s] = half_angle_cos_sin(gate.angle);
        return {Complex{c}, Complex{-s}, Complex{s}, Complex{c}};
    }
    case GateKind::T:
        return {Complex{1}, Complex{0}, Complex{0},
                std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::Tdg:
        return {Complex{1}, Complex{0}, Complex{0},
                std::polar(1.0, -std::numbers::pi / 4)};
    default:
        break;
    }
    throw InvalidArgument("not a single-qubit gate");
}

// Image of local basis state j under a permutation gate (operand 0 = MSB).
std::size_t permute_local(GateKind kind, std::size_t j) {
    switch (kind) {
    case GateKind::X:
        return j ^ 1U;
    case GateKind::CNOT:
        return (j & 2U) ? (j ^ 1U) : j;
    case GateKind::SWAP:
        return ((j & 1U) << 1) | ((j >> 1) & 1U);
    case GateKind::CSWAP:
        return (j & 4U) ? (4U | ((j & 1U) << 1) | ((j >> 1) & 1U)) : j;
    case GateKind::Toffoli:
        return ((j & 6U) == 6U) ? (j ^ 1U) : j;
    default:
        break;
    }
    throw InvalidArgument("not a permutation gate");
}

} // namespace

std::vector<Complex> gate_matrix(const Gate &gate) {
    const std::size_t dim = std::size_t{1} << arity(gate.kind);
    std::vector<Complex> m(dim * dim, Complex{0});
    switch (gate.kind) {
    case GateKind::H:
    case GateKind::Ry:
    case GateKind::T:
    case GateKind::Tdg: {
        const auto s = single_qubit_matrix(gate);
        std::copy(s.begin(), s.end(), m.begin());
        break;
    }
    default:
        for (std::size_t j = 0; j < dim; ++j) {
            m[permute_local(gate.kind, j) * dim + j] = Complex{1};
        }
    }
    return m;
}

StateVector::StateVector(std::size_t num_qubits)
    : StateVector(num_qubits,
                  std::vector<Complex>(std::size_t{1} << num_qubits)) {
    data_[0] = Complex{1};
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> data)
    : num_qubits_(num_qubits), data_(std::move(data)) {}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
    if (index >= (std::size_t{1} << num_qubits)) {
        throw InvalidArgument("basis index out of range");
    }
    StateVector sv(num_qubits);
    sv.data_[0] = Complex{0};
    sv.data_[index] = Complex{1};
    return sv;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes,
                                         double tolerance) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw InvalidArgument("amplitude count " +
                              std::to_string(amplitudes.size()) +
                              " is not a power of two");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    StateVector sv(n, std::move(amplitudes));
    if (std::abs(sv.norm() - 1.0) > tolerance) {
        throw InvalidArgument("amplitudes are not normalized (norm " +
                              std::to_string(sv.norm()) + ")");
    }
    return sv;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto &a : data_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw InvalidArgument("inner product of states of different width");
    }
    Complex acc{0};
    for (std::size_t i = 0; i < data_.size(); ++i) {
        acc += std::conj(data_[i]) * other.data_[i];
    }
    return acc;
}

StateVector StateVector::tensor(const StateVector &rhs) const {
    std::vector<Complex> out(data_.size() * rhs.data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.data_.size(); ++j) {
            out[i * rhs.data_.size() + j] = data_[i] * rhs.data_[j];
        }
    }
    return {num_qubits_ + rhs.num_qubits_, std::move(out)};
}

void StateVector::apply_single(std::size_t qubit,
                               const std::array<Complex, 4> &m) {
    const std::size_t mask = qubit_mask(qubit, num_qubits_);
    const std::size_t low = mask - 1;
    const std::size_t half = data_.size() / 2;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = ((k & ~low) << 1) | (k & low);
        const std::size_t i1 = i0 | mask;
        const Complex a = data_[i0];
        const Complex b = data_[i1];
        data_[i0] = m[0] * a + m[1] * b;
        data_[i1] = m[2] * a + m[3] * b;
    }
}

void StateVector::apply_x_controlled(std::size_t mask_controls,
                                     std::size_t target) {
    const std::size_t tmask = qubit_mask(target, num_qubits_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if ((i & mask_controls) == mask_controls && (i & tmask) == 0) {
            std::swap(data_[i], data_[i | tmask]);
        }
    }
}

void StateVector::apply_swap_controlled(std::size_t mask_controls,
                                        std::size_t a, std::size_t b) {
    const std::size_t amask = qubit_mask(a, num_qubits_);
    const std::size_t bmask = qubit_mask(b, num_qubits_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if ((i & mask_controls) == mask_controls && (i & amask) != 0 &&
            (i & bmask) == 0) {
            std::swap(data_[i], data_[i ^ amask ^ bmask]);
        }
    }
}

void StateVector::apply(const Gate &gate) {
    validate_gate(gate, num_qubits_);
    const auto &q = gate.qubits;
    switch (gate.kind) {
    case GateKind::H:
    case GateKind::Ry:
    case GateKind::T:
    case GateKind::Tdg:
        apply_single(q[0], single_qubit_matrix(gate));
        break;
    case GateKind::X:
        apply_x_controlled(0, q[0]);
        break;
    case GateKind::CNOT:
        apply_x_controlled(qubit_mask(q[0], num_qubits_), q[1]);
        break;
    case GateKind::Toffoli:
        apply_x_controlled(qubit_mask(q[0], num_qubits_) |
                               qubit_mask(q[1], num_qubits_),
                           q[2]);
        break;
    case GateKind::SWAP:
        apply_swap_controlled(0, q[0], q[1]);
        break;
    case GateKind::CSWAP:
        apply_swap_controlled(qubit_mask(q[0], num_qubits_), q[1], q[2]);
        break;
    }
}

void StateVector::apply(std::span<const Gate> gates) {
    for (const auto &g : gates) {
        apply(g);
    }
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

StateVector simulate(StateVector initial, std::span<const Gate> gates) {
    initial.apply(gates);
    return initial;
}

StateVector simulate(std::size_t num_qubits, std::span<const Gate> gates) {
    return simulate(StateVector(num_qubits), gates);
}

namespace {

std::string outcome_label(std::size_t outcome, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if (outcome & (std::size_t{1} << (width - 1 - i))) {
            s[i] = '1';
        }
    }
    return s;
}

} // namespace

std::string OutcomeDistribution::label(std::size_t outcome) const {
    return outcome_label(outcome, qubits.size());
}

std::string Histogram::label(std::size_t outcome) const {
    return outcome_label(outcome, qubits.size());
}

OutcomeDistribution exact_probabilities(const StateVector &state,
                                        std::span<const std::size_t> qubits) {
    const std::size_t n = state.num_qubits();
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= n) {
            throw InvalidArgument("measured qubit " + std::to_string(qubits[i]) +
                                  " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[i] == qubits[j]) {
                throw InvalidArgument("measured qubit " +
                                      std::to_string(qubits[i]) +
                                      " listed twice");
            }
        }
    }
    const std::size_t width = qubits.size();
    OutcomeDistribution dist{{qubits.begin(), qubits.end()},
                             std::vector<double>(std::size_t{1} << width, 0.0)};
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::size_t outcome = 0;
        for (std::size_t k = 0; k < width; ++k) {
            outcome = (outcome << 1) |
                      ((i & qubit_mask(qubits[k], n)) != 0 ? 1U : 0U);
        }
        dist.probabilities[outcome] += std::norm(amps[i]);
    }
    return dist;
}

} // namespace qclass
