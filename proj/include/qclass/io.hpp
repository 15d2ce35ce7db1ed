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
 * File formats used by the command-line tool.
 *
 *  - dataset CSV: header "label,r1,...,rF", one sample per row, cells 0/1;
 *  - circuit text: one gate per line ("H 0", "CNOT 0 1", "RY 0 1.5707963",
 *    "CSWAP 2 0 1"), '#' starts a comment, an optional "QUBITS n" line
 *    fixes the width;
 *  - coupling graph JSON: {"n": int, "edges": [[a, b], ...]} with an
 *    optional "directed" flag;
 *  - run report JSON carrying a "schema_version" field.
 */
#pragma once

#include "qclass/pipeline.hpp"
#include "qclass/router.hpp"
#include "qclass/simulator.hpp"

#include <istream>
#include <span>
#include <string>
#include <vector>

namespace qclass::io {

[[nodiscard]] Dataset parse_dataset(std::istream &in);
[[nodiscard]] Dataset read_dataset(const std::string &path);
[[nodiscard]] std::string format_dataset(const Dataset &dataset);

/// A dataset-format file holding exactly one row; the label is ignored.
[[nodiscard]] FeatureVector read_test_vector(const std::string &path);
[[nodiscard]] FeatureVector parse_test_vector(std::istream &in);

struct CircuitFile {
    std::vector<Gate> gates;
    std::size_t num_qubits{0};
};

[[nodiscard]] CircuitFile parse_circuit(std::istream &in);
[[nodiscard]] CircuitFile read_circuit(const std::string &path);
/// Angles are written in the shortest form that parses back to the same double.
[[nodiscard]] std::string format_circuit(std::span<const Gate> gates);

[[nodiscard]] CouplingGraph parse_graph(const std::string &json_text);
[[nodiscard]] CouplingGraph read_graph(const std::string &path);
[[nodiscard]] std::string format_graph(const CouplingGraph &graph);

[[nodiscard]] std::string report_json(const RunReport &report, int indent = 2);

/// Bars for the four (s, m) outcomes scaled to 50 columns at the largest.
[[nodiscard]] std::string ascii_histogram(const RunReport &report);

/// Per-class sigma, sigma11 and chi with the identity check per row.
[[nodiscard]] std::string oracle_table(std::span<const ClassScore> scores,
                                       const std::vector<std::string> &labels);
[[nodiscard]] std::string oracle_json(std::span<const ClassScore> scores,
                                      const std::vector<std::string> &labels,
                                      int indent = 2);

} // namespace qclass::io
