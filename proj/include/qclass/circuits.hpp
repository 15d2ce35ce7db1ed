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
 * Two-class swap-test classifier circuits: state preparation of
 *   |0>_s |t>_t (|0>_m |d0>_d + |1>_m |d1>_d) / sqrt(2),
 * the swap test itself, like-valued pair elision and Fredkin lowering.
 */
#pragma once

#include "qclass/encoding.hpp"
#include "qclass/error.hpp"
#include "qclass/simulator.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qclass {

/// Thrown when a class or test state is outside what the builders can prepare.
class UnpreparableState : public Error {
  public:
    using Error::Error;
};

/**
 * @brief Functional role of every qubit.
 *
 * d and t list class-vector and test-vector qubits, most significant bit
 * first, and pair up position by position in the swap test.
 */
struct QubitRoles {
    std::size_t s{0};
    std::size_t m{0};
    std::vector<std::size_t> d;
    std::vector<std::size_t> t;

    /// m = 0, d = 1..k, t = k+1..2k, s = 2k+1.
    static QubitRoles standard(std::size_t data_qubits);

    [[nodiscard]] std::size_t num_qubits() const { return 2 + d.size() + t.size(); }
    [[nodiscard]] std::size_t data_qubits() const { return d.size(); }
    /// Throws InvalidArgument unless indices are distinct, |d| = |t| and
    /// every index is below num_qubits().
    void validate() const;
};

using SwapPair = std::pair<std::size_t, std::size_t>;

struct ClassifierCircuit {
    /// Start state; |0...0> unless the state was loaded directly.
    StateVector initial;
    std::vector<Gate> gates;
    QubitRoles roles;
    Metric metric{Metric::AIP};
    std::size_t num_classes{2};

    [[nodiscard]] std::size_t num_qubits() const { return roles.num_qubits(); }
    [[nodiscard]] StateVector final_state() const { return simulate(initial, gates); }
    [[nodiscard]] std::size_t count(GateKind kind) const;
};

/// Probabilities of (s, m) outcomes; rho(1, k) is the class-k swap signal.
struct SwapTestProbabilities {
    std::array<std::array<double, 2>, 2> p{};

    [[nodiscard]] double rho(std::size_t s, std::size_t k) const { return p[s][k]; }
};

[[nodiscard]] SwapTestProbabilities
swap_test_probabilities(const StateVector &state, const QubitRoles &roles);

/// (1 - |<test|cls>|^2) / (2M).
[[nodiscard]] double expected_rho(const StateVector &test, const StateVector &cls,
                                  std::size_t num_classes = 2);

/// m-controlled Ry(theta) on @p target as Ry, CNOT, Ry, CNOT.
[[nodiscard]] std::vector<Gate> controlled_ry(std::size_t control,
                                              std::size_t target, double theta);

/**
 * @brief Prepares (|01> + sin(th)|10> + cos(th)|11>) / sqrt(2) on (m, d)
 * from |00>, with th = atan(ratio).
 *
 * Class 0 sits wholly in the second region; class 1 splits between the two
 * regions in @p ratio (first : second).
 */
[[nodiscard]] std::vector<Gate> rotation_routine(double ratio, std::size_t m = 0,
                                                 std::size_t d = 1);

/// The ideal pre-swap-test state, built amplitude by amplitude.
[[nodiscard]] StateVector initial_state(const std::array<StateVector, 2> &classes,
                                        const StateVector &test,
                                        const QubitRoles &roles);

/**
 * Gate list taking |0...0> to initial_state(classes, test, roles).
 *
 * The test register and each class register must be product states (to
 * within fidelity 1 - 1e-6); per-qubit differences between the two class
 * states become m-controlled rotations or plain CNOTs. Throws
 * UnpreparableState otherwise.
 */
[[nodiscard]] std::vector<Gate>
build_initial_state_prep(const std::array<StateVector, 2> &classes,
                         const StateVector &test, const QubitRoles &roles);

/**
 * Appends H(s), CSWAP(s, d_i, t_i) for every pair, H(s). Without
 * @p swap_pairs every (d_i, t_i) is swapped.
 */
[[nodiscard]] ClassifierCircuit
append_swap_test(std::vector<Gate> prep, const QubitRoles &roles,
                 std::optional<std::vector<SwapPair>> swap_pairs = std::nullopt,
                 Metric metric = Metric::AIP);

/// Same, starting from an explicitly loaded initial state.
[[nodiscard]] ClassifierCircuit
append_swap_test(StateVector initial, std::vector<Gate> prep,
                 const QubitRoles &roles,
                 std::optional<std::vector<SwapPair>> swap_pairs = std::nullopt,
                 Metric metric = Metric::AIP);

struct ElisionResult {
    std::vector<SwapPair> pairs;
    /// False when some state was not a product state and all pairs were kept.
    bool product_form{true};
};

/**
 * (d_i, t_i) pairs whose single-qubit states differ for at least one class.
 * Pairs where the test qubit matches the class qubit in both classes
 * contribute a factor of one to every overlap and are dropped.
 */
[[nodiscard]] ElisionResult
elide_like_valued_pairs(const std::array<StateVector, 2> &classes,
                        const StateVector &test, const QubitRoles &roles);

/// CSWAP(c, a, b) = CNOT(b, a) TOFFOLI(c, a, b) CNOT(b, a).
[[nodiscard]] std::vector<Gate> decompose_cswap(const Gate &gate);

/// Exact Toffoli over {H, T, TDG, CNOT}.
[[nodiscard]] std::vector<Gate> decompose_toffoli(const Gate &gate);

/// Expands every CSWAP and Toffoli so that no gate acts on more than two qubits.
[[nodiscard]] std::vector<Gate> lower_to_two_qubit(std::span<const Gate> gates);

} // namespace qclass
