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
 * Dense complex statevector, the gate set used by the classifier circuits and
 * measurement (exact marginals and seeded shot sampling).
 *
 * Basis convention: qubit 0 carries the most significant bit of a basis
 * label, so the label of |q0 q1 ... q(n-1)> is the big-endian integer formed
 * by the qubit values. All index arithmetic goes through qubit_mask().
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qclass {

using Complex = std::complex<double>;

/// Bit of a basis index that holds @p qubit in an @p num_qubits register.
[[nodiscard]] constexpr std::size_t qubit_mask(std::size_t qubit,
                                               std::size_t num_qubits) {
    return std::size_t{1} << (num_qubits - 1 - qubit);
}

enum class GateKind { H, X, Ry, T, Tdg, CNOT, SWAP, CSWAP, Toffoli };

[[nodiscard]] std::size_t arity(GateKind kind);
[[nodiscard]] std::string_view gate_name(GateKind kind);

/**
 * @brief One gate of a circuit.
 *
 * Operand order follows the usual convention: controls first, then targets.
 * CNOT(c, t), CSWAP(c, a, b), Toffoli(c1, c2, t).
 */
struct Gate {
    GateKind kind{GateKind::H};
    std::array<std::size_t, 3> qubits{};
    /// Rotation angle in radians; only meaningful for Ry.
    double angle{0.0};

    [[nodiscard]] std::span<const std::size_t> operands() const {
        return {qubits.data(), arity(kind)};
    }

    static Gate h(std::size_t q) { return {GateKind::H, {q, 0, 0}, 0.0}; }
    static Gate x(std::size_t q) { return {GateKind::X, {q, 0, 0}, 0.0}; }
    static Gate t(std::size_t q) { return {GateKind::T, {q, 0, 0}, 0.0}; }
    static Gate tdg(std::size_t q) { return {GateKind::Tdg, {q, 0, 0}, 0.0}; }
    static Gate ry(std::size_t q, double theta) {
        return {GateKind::Ry, {q, 0, 0}, theta};
    }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target, 0}, 0.0};
    }
    static Gate swap(std::size_t a, std::size_t b) {
        return {GateKind::SWAP, {a, b, 0}, 0.0};
    }
    static Gate cswap(std::size_t control, std::size_t a, std::size_t b) {
        return {GateKind::CSWAP, {control, a, b}, 0.0};
    }
    static Gate toffoli(std::size_t c1, std::size_t c2, std::size_t target) {
        return {GateKind::Toffoli, {c1, c2, target}, 0.0};
    }

    friend bool operator==(const Gate &a, const Gate &b);
};

/// Throws InvalidArgument unless every operand is < num_qubits and distinct.
void validate_gate(const Gate &gate, std::size_t num_qubits);

/**
 * @brief Dense matrix of a gate on its own operands, row-major,
 * 2^k x 2^k with operand 0 as the most significant local bit.
 */
[[nodiscard]] std::vector<Complex> gate_matrix(const Gate &gate);

/**
 * @brief Statevector over n qubits holding 2^n amplitudes.
 *
 * Gates are applied in place by iterating over amplitude pairs selected with
 * bitmasks; no 2^n x 2^n operator is ever formed.
 */
class StateVector {
  public:
    /// |0...0> on @p num_qubits qubits.
    explicit StateVector(std::size_t num_qubits);

    /// Computational basis state |index>.
    static StateVector basis(std::size_t num_qubits, std::size_t index);

    /**
     * Wrap explicit amplitudes. The length must be a power of two and the
     * norm must be 1 within @p tolerance.
     */
    static StateVector from_amplitudes(std::vector<Complex> amplitudes,
                                       double tolerance = 1e-10);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return data_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return data_;
    }
    [[nodiscard]] Complex operator[](std::size_t index) const {
        return data_[index];
    }

    [[nodiscard]] double norm() const;

    /// <this|other>; both states must have the same width.
    [[nodiscard]] Complex inner(const StateVector &other) const;

    /// this (x) rhs, with this occupying the most significant qubits.
    [[nodiscard]] StateVector tensor(const StateVector &rhs) const;

    void apply(const Gate &gate);
    void apply(std::span<const Gate> gates);

  private:
    StateVector(std::size_t num_qubits, std::vector<Complex> data);

    void apply_single(std::size_t qubit, const std::array<Complex, 4> &m);
    void apply_x_controlled(std::size_t mask_controls, std::size_t target);
    void apply_swap_controlled(std::size_t mask_controls, std::size_t a,
                               std::size_t b);

    std::size_t num_qubits_;
    std::vector<Complex> data_;
};

/// Returns U * state.
[[nodiscard]] StateVector apply_gate(StateVector state, const Gate &gate);

/// Simulates @p gates starting from @p initial.
[[nodiscard]] StateVector simulate(StateVector initial,
                                   std::span<const Gate> gates);

/// Simulates @p gates starting from |0...0> on @p num_qubits qubits.
[[nodiscard]] StateVector simulate(std::size_t num_qubits,
                                   std::span<const Gate> gates);

/**
 * @brief Marginal distribution over the outcomes of a set of qubits.
 *
 * Outcome index o encodes the listed qubits big-endian in the caller's order:
 * qubits {s, m} map outcome "10" (s=1, m=0) to index 2.
 */
struct OutcomeDistribution {
    std::vector<std::size_t> qubits;
    std::vector<double> probabilities;

    [[nodiscard]] double operator[](std::size_t outcome) const {
        return probabilities[outcome];
    }
    [[nodiscard]] std::string label(std::size_t outcome) const;
};

/// Seeded shot counts over the same outcome indexing as OutcomeDistribution.
struct Histogram {
    std::vector<std::size_t> qubits;
    std::vector<std::uint64_t> counts;
    std::uint64_t shots{0};

    [[nodiscard]] double frequency(std::size_t outcome) const {
        return static_cast<double>(counts[outcome]) /
               static_cast<double>(shots);
    }
    [[nodiscard]] std::string label(std::size_t outcome) const;
};

[[nodiscard]] OutcomeDistribution
exact_probabilities(const StateVector &state, std::span<const std::size_t> qubits);

struct SamplingOptions {
    /// Worker threads; the histogram does not depend on this value.
    unsigned threads{1};
    /// Shots drawn per independent PRNG stream.
    std::uint64_t shots_per_stream{std::uint64_t{1} << 14};
};

/**
 * @brief Draws @p shots measurements of @p qubits.
 *
 * Shots are split into consecutive streams of SamplingOptions::shots_per_stream;
 * stream k uses a generator seeded from (seed, k) and the per-stream counts
 * are summed in stream order, so the result is the same for any thread count.
 */
[[nodiscard]] Histogram sample_measurements(const StateVector &state,
                                            std::span<const std::size_t> qubits,
                                            std::uint64_t shots,
                                            std::uint64_t seed,
                                            const SamplingOptions &options = {});

/// Same as above, from a precomputed marginal.
[[nodiscard]] Histogram sample_distribution(const OutcomeDistribution &dist,
                                            std::uint64_t shots,
                                            std::uint64_t seed,
                                            const SamplingOptions &options = {});

/// Seed of PRNG stream @p stream derived from a run seed (splitmix64 mixing).
[[nodiscard]] std::uint64_t derive_stream_seed(std::uint64_t seed,
                                               std::uint64_t stream);

} // namespace qclass
