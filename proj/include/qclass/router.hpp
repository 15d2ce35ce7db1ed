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
 * Greedy SWAP insertion onto a hardware coupling graph.
 */
#pragma once

#include "qclass/simulator.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace qclass {

/**
 * @brief Physical qubit connectivity.
 *
 * Edges are undirected unless @c directed is set, in which case an edge
 * (a, b) only admits CNOT(a, b) and reversed CNOTs are emitted through
 * Hadamard conjugation. SWAP is accepted on an edge in either direction.
 */
class CouplingGraph {
  public:
    CouplingGraph(std::size_t num_qubits,
                  std::vector<std::pair<std::size_t, std::size_t>> edges,
                  bool directed = false);

    static CouplingGraph path(std::size_t n);
    /// Every leaf attached to @p center.
    static CouplingGraph star(std::size_t n, std::size_t center);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
    [[nodiscard]] bool directed() const noexcept { return directed_; }
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>> &
    edges() const noexcept {
        return edges_;
    }
    /// Adjacent in either direction.
    [[nodiscard]] bool connected(std::size_t a, std::size_t b) const;
    /// Edge a -> b exists (same as connected() when undirected).
    [[nodiscard]] bool has_arc(std::size_t a, std::size_t b) const;
    [[nodiscard]] bool is_connected() const;
    /// Shortest path from @p from to @p to, lowest physical index first on ties.
    [[nodiscard]] std::vector<std::size_t> shortest_path(std::size_t from,
                                                         std::size_t to) const;

  private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    bool directed_;
    std::vector<std::vector<std::size_t>> adj_; // sorted, undirected
};

struct RoutedCircuit {
    /// Gates on physical qubits of the graph.
    std::vector<Gate> gates;
    /// Positions in @c gates of the SWAPs the router inserted.
    std::vector<std::size_t> inserted_swaps;
    /// logical -> physical before the first gate.
    std::vector<std::size_t> initial_layout;
    /// logical -> physical after the last gate.
    std::vector<std::size_t> final_layout;
    std::size_t num_physical{0};
};

/**
 * @brief Maps a circuit of 1- and 2-qubit gates onto @p graph.
 *
 * A two-qubit gate on non-adjacent qubits moves its first operand along the
 * BFS shortest path towards the second with SWAPs until they are adjacent.
 * An empty @p initial_layout means the identity. Throws InvalidArgument for
 * 3-qubit gates (lower them first), a circuit wider than the graph, a
 * disconnected graph or a non-injective layout.
 */
[[nodiscard]] RoutedCircuit route(std::span<const Gate> circuit,
                                  std::size_t num_logical,
                                  const CouplingGraph &graph,
                                  std::vector<std::size_t> initial_layout = {});

/// SWAPs inserted by route(); SWAPs already in the input are not counted.
[[nodiscard]] std::size_t swap_count(const RoutedCircuit &routed);

/// True iff every gate with two or more operands acts on a graph edge
/// (and respects arc direction for CNOT on a directed graph).
[[nodiscard]] bool conforms(std::span<const Gate> gates, const CouplingGraph &graph);

/// Places a logical state on physical qubits per @p layout; other qubits |0>.
[[nodiscard]] StateVector embed_state(const StateVector &logical,
                                      std::span<const std::size_t> layout,
                                      std::size_t num_physical);

/**
 * Reads the logical state back out of a physical one. Throws InvalidArgument
 * if qubits outside @p layout are not |0> within @p tolerance.
 */
[[nodiscard]] StateVector extract_logical(const StateVector &physical,
                                          std::span<const std::size_t> layout,
                                          double tolerance = 1e-9);

} // namespace qclass
