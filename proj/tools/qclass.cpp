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
#include "qclass/io.hpp"
#include "qclass/oracle.hpp"
#include "qclass/pipeline.hpp"
#include "qclass/router.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitAmbiguous = 2;
constexpr int kExitInput = 3;
constexpr int kExitPrecondition = 4;

struct RunFlags {
    std::string metric{"aip"};
    std::uint64_t shots{0};
    std::uint64_t seed{0};
    std::string sign;
    std::string graph;
    std::string out;
    bool pad{false};
    unsigned threads{1};
};

void add_run_flags(CLI::App *cmd, RunFlags &f, bool with_metric) {
    if (with_metric) {
        cmd->add_option("--metric", f.metric, "Inner product metric")
            ->check(CLI::IsMember({"aip", "sip"}));
        cmd->add_option("--sign", f.sign, "SIP sign assumption")
            ->check(CLI::IsMember({"matches", "mismatches"}));
        cmd->add_flag("--pad", f.pad, "Pad regions to a power of two");
    }
    cmd->add_option("--shots", f.shots, "Measurement shots (0 = exact)");
    cmd->add_option("--seed", f.seed, "Sampling seed");
    cmd->add_option("--graph", f.graph, "Coupling graph JSON");
    cmd->add_option("--out", f.out, "Write the JSON report here instead of stdout");
    cmd->add_option("--threads", f.threads, "Sampling threads")->check(CLI::Range(1U, 256U));
}

void apply_flags(const RunFlags &f, qclass::RunConfig &config, bool with_metric) {
    if (with_metric) {
        config.metric = qclass::parse_metric(f.metric);
        if (f.sign == "matches") {
            config.sign = qclass::SignPrecondition::MatchesDominate;
        } else if (f.sign == "mismatches") {
            config.sign = qclass::SignPrecondition::MismatchesDominate;
        }
        config.pad_to_pow2 = f.pad;
    }
    config.shots = f.shots;
    config.seed = f.seed;
    config.sampling.threads = f.threads;
    if (!f.graph.empty()) {
        config.graph = qclass::io::read_graph(f.graph);
    }
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw qclass::InvalidArgument("cannot write '" + path + "'");
    }
    out << text;
}

void emit(const qclass::RunReport &report, const std::string &out) {
    write_text(out, qclass::io::report_json(report) + "\n");
    std::cerr << qclass::io::ascii_histogram(report);
    for (const auto &w : report.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
}

int cmd_example(const std::string &name, const RunFlags &f, const std::string &circuit_out) {
    auto problem = qclass::reference_problem(name);
    apply_flags(f, problem.config, false);
    if (!circuit_out.empty()) {
        const auto build = qclass::build_classifier(problem.dataset, problem.test, problem.config);
        write_text(circuit_out, "QUBITS " + std::to_string(build.circuit.num_qubits()) + "\n" +
                                    qclass::io::format_circuit(build.circuit.gates));
    }
    const auto report = qclass::run(problem.dataset, problem.test, problem.config);
    emit(report, f.out);
    std::cerr << "expected class " << problem.expected_class << ", predicted "
              << report.label_of(report.predicted) << "\n";
    return report.predicted.class_id == problem.expected_class ? kExitOk : kExitFailed;
}

int cmd_classify(const std::string &dataset_path, const std::string &test_path,
                 const RunFlags &f) {
    const auto dataset = qclass::io::read_dataset(dataset_path);
    const auto test = qclass::io::read_test_vector(test_path);
    qclass::RunConfig config;
    apply_flags(f, config, true);
    const auto report = qclass::run(dataset, test, config);
    emit(report, f.out);
    return report.predicted.ambiguous() ? kExitAmbiguous : kExitOk;
}

int cmd_route(const std::string &circuit_path, const std::string &graph_path,
              const std::string &out) {
    const auto circuit = qclass::io::read_circuit(circuit_path);
    const auto graph = qclass::io::read_graph(graph_path);
    const auto lowered = qclass::lower_to_two_qubit(circuit.gates);
    const auto routed = qclass::route(lowered, circuit.num_qubits, graph);
    if (!qclass::conforms(routed.gates, graph)) {
        std::cerr << "error: routed circuit does not conform to the graph\n";
        return kExitFailed;
    }
    write_text(out, qclass::io::format_circuit(routed.gates));
    std::cerr << "swaps inserted: " << qclass::swap_count(routed) << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string &dataset_path, const std::string &test_path, bool as_json) {
    const auto dataset = qclass::io::read_dataset(dataset_path);
    const auto test = qclass::io::read_test_vector(test_path);
    if (test.size() != dataset.regions()) {
        throw qclass::InvalidArgument("test has " + std::to_string(test.size()) +
                                      " regions, dataset has " +
                                      std::to_string(dataset.regions()));
    }
    const auto members = dataset.members();
    std::vector<qclass::ClassScore> scores;
    bool ok = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
        scores.push_back(qclass::class_score(k, test, members[k]));
        ok = ok && scores.back().identities_hold();
    }
    std::cout << (as_json ? qclass::io::oracle_json(scores, dataset.labels()) + "\n"
                          : qclass::io::oracle_table(scores, dataset.labels()));
    return ok ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Swap-test inner-product classifier"};
    app.require_subcommand(1);

    RunFlags example_flags;
    std::string example_name;
    std::string circuit_out;
    auto *example = app.add_subcommand("example", "Run a built-in reference problem");
    example->add_option("name", example_name, "5q-ex1, 14q-ex1 or 14q-ex2")->required();
    example->add_option("--circuit-out", circuit_out, "Write the logical circuit here");
    add_run_flags(example, example_flags, false);

    RunFlags classify_flags;
    std::string dataset_path;
    std::string test_path;
    auto *classify = app.add_subcommand("classify", "Classify a test sample");
    classify->add_option("dataset", dataset_path, "Training CSV")->required();
    classify->add_option("test", test_path, "Test CSV with one row")->required();
    add_run_flags(classify, classify_flags, true);

    std::string circuit_path;
    std::string graph_path;
    std::string route_out;
    auto *route = app.add_subcommand("route", "Route a circuit onto a coupling graph");
    route->add_option("circuit", circuit_path, "Circuit text file")->required();
    route->add_option("graph", graph_path, "Graph JSON")->required();
    route->add_option("--out", route_out, "Write the routed circuit here");

    std::string oracle_dataset;
    std::string oracle_test;
    bool oracle_as_json = false;
    auto *oracle = app.add_subcommand("oracle", "Print classical per-class scores");
    oracle->add_option("dataset", oracle_dataset, "Training CSV")->required();
    oracle->add_option("test", oracle_test, "Test CSV with one row")->required();
    oracle->add_flag("--json", oracle_as_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*example) {
            return cmd_example(example_name, example_flags, circuit_out);
        }
        if (*classify) {
            return cmd_classify(dataset_path, test_path, classify_flags);
        }
        if (*route) {
            return cmd_route(circuit_path, graph_path, route_out);
        }
        return cmd_oracle(oracle_dataset, oracle_test, oracle_as_json);
    } catch (const qclass::PreconditionError &e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const qclass::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const qclass::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
