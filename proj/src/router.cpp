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
#include "qclass/router.hpp"

#include "qclass/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace qclass {

CouplingGraph::CouplingGraph(std::size_t num_qubits,
                             std::vector<std::pair<std::size_t, std::size_t>> edges,
                             bool directed)
    : n_(num_qubits), edges_(std::move(edges)), directed_(directed),
      adj_(num_qubits) {
    if (n_ == 0) {
        throw InvalidArgument("coupling graph has no qubits");
    }
    for (const auto &[a, b] : edges_) {
        if (a >= n_ || b >= n_) {
            throw InvalidArgument("edge (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") out of range");
        }
        if (a == b) {
            throw InvalidArgument("self-loop on qubit " + std::to_string(a));
        }
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto &nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
}

CouplingGraph CouplingGraph::path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return {n, std::move(e)};
}

CouplingGraph CouplingGraph::star(std::size_t n, std::size_t center) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != center) {
            e.emplace_back(center, i);
        }
    }
    return {n, std::move(e)};
}

bool CouplingGraph::connected(std::size_t a, std::size_t b) const {
    return a < n_ && std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

bool CouplingGraph::has_arc(std::size_t a, std::size_t b) const {
    if (!directed_) {
        return connected(a, b);
    }
    return std::find(edges_.begin(), edges_.end(), std::pair{a, b}) != edges_.end();
}

bool CouplingGraph::is_connected() const {
    std::vector<bool> seen(n_, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                queue.push_back(w);
            }
        }
    }
    return count == n_;
}

std::vector<std::size_t> CouplingGraph::shortest_path(std::size_t from,
                                                      std::size_t to) const {
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(n_, none);
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty() && parent[to] == none) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto w : adj_[v]) {
            if (parent[w] == none) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if (parent[to] == none) {
        throw InvalidArgument("no path between physical qubits " +
                              std::to_string(from) + " and " + std::to_string(to));
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) {
        path.push_back(parent[path.back()]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

RoutedCircuit route(std::span<const Gate> circuit, std::size_t num_logical,
                    const CouplingGraph &graph,
                    std::vector<std::size_t> initial_layout) {
    const std::size_t np = graph.num_qubits();
    if (num_logical > np) {
        throw InvalidArgument("circuit needs " + std::to_string(num_logical) +
                              " qubits, graph has " + std::to_string(np));
    }
    if (!graph.is_connected()) {
        throw InvalidArgument("coupling graph is disconnected");
    }
    if (initial_layout.empty()) {
        for (std::size_t i = 0; i < num_logical; ++i) {
            initial_layout.push_back(i);
        }
    }
    if (initial_layout.size() != num_logical) {
        throw InvalidArgument("layout size does not match circuit width");
    }
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> logical_at(np, none);
    for (std::size_t l = 0; l < num_logical; ++l) {
        const auto p = initial_layout[l];
        if (p >= np || logical_at[p] != none) {
            throw InvalidArgument("layout is not injective into the graph");
        }
        logical_at[p] = l;
    }

    RoutedCircuit out;
    out.initial_layout = initial_layout;
    out.num_physical = np;
    auto phys = initial_layout;

    auto swap_physical = [&](std::size_t a, std::size_t b) {
        out.inserted_swaps.push_back(out.gates.size());
        out.gates.push_back(Gate::swap(a, b));
        std::swap(logical_at[a], logical_at[b]);
        if (logical_at[a] != none) {
            phys[logical_at[a]] = a;
        }
        if (logical_at[b] != none) {
            phys[logical_at[b]] = b;
        }
    };

    for (const auto &g : circuit) {
        validate_gate(g, num_logical);
        const auto ops = g.operands();
        if (ops.size() == 1) {
            Gate pg = g;
            pg.qubits[0] = phys[ops[0]];
            out.gates.push_back(pg);
            continue;
        }
        if (ops.size() != 2) {
            throw InvalidArgument(std::string(gate_name(g.kind)) +
                                  " acts on three qubits; lower it before routing");
        }
        std::size_t pa = phys[ops[0]];
        const std::size_t pb = phys[ops[1]];
        if (!graph.connected(pa, pb)) {
            const auto path = graph.shortest_path(pa, pb);
            for (std::size_t k = 0; k + 2 < path.size(); ++k) {
                swap_physical(path[k], path[k + 1]);
            }
            pa = path[path.size() - 2];
        }
        if (g.kind == GateKind::CNOT && !graph.has_arc(pa, pb)) {
            out.gates.push_back(Gate::h(pa));
            out.gates.push_back(Gate::h(pb));
            out.gates.push_back(Gate::cnot(pb, pa));
            out.gates.push_back(Gate::h(pa));
            out.gates.push_back(Gate::h(pb));
        } else {
            Gate pg = g;
            pg.qubits[0] = pa;
            pg.qubits[1] = pb;
            out.gates.push_back(pg);
        }
    }
    out.final_layout = phys;
    return out;
}

std::size_t swap_count(const RoutedCircuit &routed) {
    return routed.inserted_swaps.size();
}

bool conforms(std::span<const Gate> gates, const CouplingGraph &graph) {
    for (const auto &g : gates) {
        const auto ops = g.operands();
        if (ops.size() > 2) {
            return false;
        }
        if (ops.size() == 2) {
            if (g.kind == GateKind::CNOT ? !graph.has_arc(ops[0], ops[1])
                                         : !graph.connected(ops[0], ops[1])) {
                return false;
            }
        }
    }
    return true;
}

StateVector embed_state(const StateVector &logical,
                        std::span<const std::size_t> layout,
                        std::size_t num_physical) {
    const std::size_t nl = logical.num_qubits();
    if (layout.size() != nl) {
        throw InvalidArgument("layout size does not match state width");
    }
    std::vector<Complex> amps(std::size_t{1} << num_physical);
    for (std::size_t x = 0; x < logical.dimension(); ++x) {
        std::size_t y = 0;
        for (std::size_t q = 0; q < nl; ++q) {
            if (x & qubit_mask(q, nl)) {
                y |= qubit_mask(layout[q], num_physical);
            }
        }
        amps[y] = logical[x];
    }
    return StateVector::from_amplitudes(std::move(amps), 1e-9);
}

StateVector extract_logical(const StateVector &physical,
                            std::span<const std::size_t> layout,
                            double tolerance) {
    const std::size_t np = physical.num_qubits();
    const std::size_t nl = layout.size();
    std::size_t used = 0;
    for (auto p : layout) {
        used |= qubit_mask(p, np);
    }
    std::vector<Complex> amps(std::size_t{1} << nl);
    for (std::size_t y = 0; y < physical.dimension(); ++y) {
        if ((y & ~used) != 0) {
            if (std::abs(physical[y]) > tolerance) {
                throw InvalidArgument("ancilla qubits are not in |0>");
            }
            continue;
        }
        std::size_t x = 0;
        for (std::size_t q = 0; q < nl; ++q) {
            if (y & qubit_mask(layout[q], np)) {
                x |= qubit_mask(q, nl);
            }
        }
        amps[x] = physical[y];
    }
    return StateVector::from_amplitudes(std::move(amps), 1e-8);
}

} // namespace qclass
