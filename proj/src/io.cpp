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
#include "qclass/io.hpp"

#include "qclass/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace qclass::io {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) {
        out.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::ifstream open(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open '" + path + "'");
    }
    return in;
}

std::string slurp(const std::string &path) {
    auto in = open(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Rows {
    std::size_t regions{0};
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
};

Rows read_rows(std::istream &in) {
    Rows out;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty()) {
            continue;
        }
        auto cells = split(t, ',');
        if (!header) {
            if (cells.empty() || cells.front() != "label") {
                throw ParseError(lineno, "header must start with 'label'");
            }
            if (cells.size() < 2) {
                throw ParseError(lineno, "header names no regions");
            }
            out.regions = cells.size() - 1;
            header = true;
            continue;
        }
        if (cells.size() != out.regions + 1) {
            throw ParseError(lineno, "expected " + std::to_string(out.regions + 1) +
                                         " cells, found " + std::to_string(cells.size()));
        }
        out.rows.emplace_back(lineno, std::move(cells));
    }
    if (!header) {
        throw ParseError(lineno == 0 ? 1 : lineno, "missing header line");
    }
    return out;
}

FeatureVector row_features(std::size_t lineno, const std::vector<std::string> &cells) {
    std::vector<std::int64_t> bits;
    bits.reserve(cells.size() - 1);
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i] == "0") {
            bits.push_back(0);
        } else if (cells[i] == "1") {
            bits.push_back(1);
        } else {
            throw ParseError(lineno, "region r" + std::to_string(i) + " has value '" +
                                         cells[i] + "', expected 0 or 1");
        }
    }
    return FeatureVector::sample(std::move(bits));
}

} // namespace

Dataset parse_dataset(std::istream &in) {
    const auto rows = read_rows(in);
    if (rows.rows.empty()) {
        throw ParseError(1, "dataset has no sample rows");
    }
    std::vector<LabeledSample> samples;
    for (const auto &[lineno, cells] : rows.rows) {
        if (cells.front().empty()) {
            throw ParseError(lineno, "empty label");
        }
        samples.push_back({cells.front(), row_features(lineno, cells)});
    }
    return Dataset(std::move(samples));
}

Dataset read_dataset(const std::string &path) {
    auto in = open(path);
    return parse_dataset(in);
}

std::string format_dataset(const Dataset &dataset) {
    std::string out = "label";
    for (std::size_t f = 0; f < dataset.regions(); ++f) {
        out += ",r" + std::to_string(f + 1);
    }
    out += '\n';
    for (const auto &s : dataset.samples()) {
        out += s.label;
        for (auto v : s.features.components()) {
            out += v ? ",1" : ",0";
        }
        out += '\n';
    }
    return out;
}

FeatureVector parse_test_vector(std::istream &in) {
    const auto rows = read_rows(in);
    if (rows.rows.size() != 1) {
        throw ParseError(rows.rows.empty() ? 1 : rows.rows[1].first,
                         "test file must hold exactly one sample row");
    }
    return row_features(rows.rows[0].first, rows.rows[0].second);
}

FeatureVector read_test_vector(const std::string &path) {
    auto in = open(path);
    return parse_test_vector(in);
}

namespace {

const std::map<std::string, GateKind> &gate_names() {
    static const std::map<std::string, GateKind> names{
        {"H", GateKind::H},         {"X", GateKind::X},
        {"RY", GateKind::Ry},       {"T", GateKind::T},
        {"TDG", GateKind::Tdg},     {"CNOT", GateKind::CNOT},
        {"CX", GateKind::CNOT},     {"SWAP", GateKind::SWAP},
        {"CSWAP", GateKind::CSWAP}, {"TOFFOLI", GateKind::Toffoli},
        {"CCX", GateKind::Toffoli}};
    return names;
}

template <typename T> bool parse_number(const std::string &s, T &out) {
    const auto *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

} // namespace

CircuitFile parse_circuit(std::istream &in) {
    CircuitFile out;
    std::optional<std::size_t> declared;
    std::size_t width = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        const auto body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty()) {
            continue;
        }
        std::istringstream ss(body);
        std::vector<std::string> tok;
        for (std::string w; ss >> w;) {
            tok.push_back(w);
        }
        std::string name = tok[0];
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        if (name == "QUBITS") {
            std::size_t n = 0;
            if (tok.size() != 2 || !parse_number(tok[1], n)) {
                throw ParseError(lineno, "expected 'QUBITS <count>'");
            }
            declared = n;
            continue;
        }
        const auto it = gate_names().find(name);
        if (it == gate_names().end()) {
            throw ParseError(lineno, "unknown gate '" + tok[0] + "'");
        }
        Gate g;
        g.kind = it->second;
        const std::size_t k = arity(g.kind);
        const std::size_t expect = k + (g.kind == GateKind::Ry ? 1 : 0);
        if (tok.size() != expect + 1) {
            throw ParseError(lineno, name + " takes " + std::to_string(expect) +
                                         " arguments");
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (!parse_number(tok[1 + i], g.qubits[i])) {
                throw ParseError(lineno, "bad qubit index '" + tok[1 + i] + "'");
            }
            width = std::max(width, g.qubits[i] + 1);
        }
        if (g.kind == GateKind::Ry) {
            if (!parse_number(tok[1 + k], g.angle)) {
                throw ParseError(lineno, "bad angle '" + tok[1 + k] + "'");
            }
        }
        try {
            validate_gate(g, std::max(width, declared.value_or(0)));
        } catch (const InvalidArgument &e) {
            throw ParseError(lineno, e.what());
        }
        out.gates.push_back(g);
    }
    if (declared && *declared < width) {
        throw ParseError(lineno, "gates use " + std::to_string(width) +
                                     " qubits but QUBITS declares " +
                                     std::to_string(*declared));
    }
    out.num_qubits = declared.value_or(width);
    return out;
}

CircuitFile read_circuit(const std::string &path) {
    auto in = open(path);
    return parse_circuit(in);
}

std::string format_circuit(std::span<const Gate> gates) {
    std::string out;
    for (const auto &g : gates) {
        out += gate_name(g.kind);
        for (auto q : g.operands()) {
            out += ' ' + std::to_string(q);
        }
        if (g.kind == GateKind::Ry) {
            char buf[40];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g.angle);
            out += ' ';
            out.append(buf, ptr);
        }
        out += '\n';
    }
    return out;
}

CouplingGraph parse_graph(const std::string &json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw InvalidArgument(std::string("graph JSON: ") + e.what());
    }
    try {
        const auto n = j.at("n").get<std::size_t>();
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw InvalidArgument("graph JSON: every edge must be [a, b]");
            }
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        const bool directed = j.value("directed", false);
        return {n, std::move(edges), directed};
    } catch (const json::exception &e) {
        throw InvalidArgument(std::string("graph JSON: ") + e.what());
    }
}

CouplingGraph read_graph(const std::string &path) { return parse_graph(slurp(path)); }

std::string format_graph(const CouplingGraph &graph) {
    json j;
    j["n"] = graph.num_qubits();
    j["edges"] = json::array();
    for (const auto &[a, b] : graph.edges()) {
        j["edges"].push_back({a, b});
    }
    if (graph.directed()) {
        j["directed"] = true;
    }
    return j.dump();
}

namespace {

json decision_json(const RunReport &r, const Decision &d) {
    json j;
    j["class"] = d.class_id ? json(*d.class_id) : json(nullptr);
    j["label"] = r.label_of(d);
    return j;
}

const char *const kOutcomes[4] = {"00", "01", "10", "11"};

json scores_json(std::span<const ClassScore> scores, const std::vector<std::string> &labels) {
    json arr = json::array();
    for (const auto &s : scores) {
        arr.push_back({{"class", s.class_id},
                       {"label", labels.at(s.class_id)},
                       {"sigma", s.sigma},
                       {"sigma11", s.sigma11},
                       {"chi", s.chi},
                       {"W", s.members},
                       {"n", s.length},
                       {"identities_hold", s.identities_hold()}});
    }
    return arr;
}

} // namespace

std::string report_json(const RunReport &r, int indent) {
    json j;
    j["schema_version"] = RunReport::schema_version;
    j["metric"] = std::string(to_string(r.metric));
    j["labels"] = r.labels;
    j["quantum"] = r.quantum;
    j["shots"] = r.shots;
    j["seed"] = r.seed;
    j["num_qubits"] = r.num_qubits;
    if (r.exact) {
        json e;
        for (std::size_t o = 0; o < 4; ++o) {
            e[kOutcomes[o]] = r.exact->rho(o >> 1, o & 1);
        }
        j["exact"] = e;
    } else {
        j["exact"] = nullptr;
    }
    if (r.histogram) {
        json counts;
        for (std::size_t o = 0; o < 4; ++o) {
            counts[kOutcomes[o]] = r.histogram->counts[o];
        }
        j["histogram"] = {{"shots", r.histogram->shots}, {"counts", counts}};
    } else {
        j["histogram"] = nullptr;
    }
    j["rho10"] = r.rho10;
    j["rho11"] = r.rho11;
    j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
    j["predicted"] = decision_json(r, r.predicted);
    j["oracle"] = decision_json(r, r.oracle);
    j["scores"] = scores_json(r.scores, r.labels);
    j["eta"] = r.eta;
    j["cswap_count"] = r.cswap_count;
    j["swap_count"] = r.swap_count;
    j["pad_count"] = r.pad_count;
    j["kept_regions"] = r.kept_regions;
    j["direct_load"] = r.direct_load;
    j["warnings"] = r.warnings;
    return j.dump(indent);
}

std::string ascii_histogram(const RunReport &r) {
    constexpr int width = 50;
    if (!r.quantum) {
        return "(no quantum run)\n";
    }
    std::array<double, 4> p{};
    for (std::size_t o = 0; o < 4; ++o) {
        p[o] = r.histogram ? r.histogram->frequency(o) : r.exact->rho(o >> 1, o & 1);
    }
    const double top = *std::max_element(p.begin(), p.end());
    std::string out = r.histogram ? "sampled (s m), " + std::to_string(r.shots) + " shots\n"
                                  : "exact (s m)\n";
    for (std::size_t o = 0; o < 4; ++o) {
        const int len = top > 0 ? static_cast<int>(std::lround(p[o] / top * width)) : 0;
        char num[32];
        std::snprintf(num, sizeof num, "%.6f", p[o]);
        out += std::string(kOutcomes[o]) + " |" + std::string(static_cast<std::size_t>(len), '#') +
               std::string(static_cast<std::size_t>(width - len), ' ') + "| " + num;
        if (r.histogram) {
            out += "  (" + std::to_string(r.histogram->counts[o]) + ")";
        }
        out += '\n';
    }
    return out;
}

std::string oracle_table(std::span<const ClassScore> scores,
                         const std::vector<std::string> &labels) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-16s %8s %8s %8s %4s %6s  %s\n", "class", "sigma",
                  "sigma11", "chi", "W", "n", "identity");
    out += line;
    for (const auto &s : scores) {
        std::snprintf(line, sizeof line, "%-16s %8lld %8lld %8lld %4zu %6zu  %s\n",
                      labels.at(s.class_id).c_str(), static_cast<long long>(s.sigma),
                      static_cast<long long>(s.sigma11), static_cast<long long>(s.chi),
                      s.members, s.length, s.identities_hold() ? "ok" : "VIOLATED");
        out += line;
    }
    return out;
}

std::string oracle_json(std::span<const ClassScore> scores,
                        const std::vector<std::string> &labels, int indent) {
    json j;
    j["schema_version"] = RunReport::schema_version;
    j["scores"] = scores_json(scores, labels);
    return j.dump(indent);
}

} // namespace qclass::io
