// Copyright 2026 The qfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfactor/analysis.h"
#include "qfactor/experiment.h"
#include "qfactor/report.h"

using namespace qfactor;

namespace {

constexpr int kExitRunFailure = 1;
constexpr int kExitConfigError = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_numbers(const std::string &text) {
    if (text == "all") {
        auto b = benchmark_numbers();
        return {b.begin(), b.end()};
    }
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            auto v = std::stoull(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
            out.push_back(v);
        } catch (const std::exception &) {
            throw ConfigError("not a number: '" + token + "'");
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

/// Writes to `path`, or stdout when the path is empty or "-".
class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) {
                throw ConfigError("cannot write " + path);
            }
        }
    }
    std::ostream &stream() {
        return file_ ? *file_ : std::cout;
    }

   private:
    std::unique_ptr<std::ofstream> file_;
};

ProblemInstance instance_or_config_error(std::uint64_t n) {
    try {
        return make_instance(n);
    } catch (const std::exception &e) {
        throw ConfigError(e.what());
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"QAOA factorization simulator: quadratic vs null-space (linear) problem Hamiltonians"};
    app.require_subcommand(1);

    std::string number = "all";
    std::vector<std::string> protocols;
    int max_depth = 40;
    std::string init_strategy = "shift_heuristic";
    int scan_resolution = 64;
    std::string out;
    int workers = 1;
    std::string kind = "lp";
    std::string terms_path;

    auto *run = app.add_subcommand("run", "Train every (N, protocol) pair and write result files");
    run->add_option("--number", number, "Semiprime, comma-separated list, or 'all'")->capture_default_str();
    run->add_option("--protocol", protocols, "standard, linear_quadratic, linear_abs (default: all three)");
    run->add_option("--max-depth", max_depth, "Deepest ansatz to train")->capture_default_str();
    run->add_option("--init-strategy", init_strategy, "shift_heuristic or interpolation")->capture_default_str();
    run->add_option("--scan-resolution", scan_resolution, "Depth-1 landscape grid points per axis")->capture_default_str();
    run->add_option("--out", out, "Output directory")->required();
    run->add_option("--workers", workers, "Parallel runs")->capture_default_str();

    auto *spectrum = app.add_subcommand("spectrum", "Normalized energy spectrum as CSV");
    spectrum->add_option("--number", number, "Semiprime")->required();
    spectrum->add_option("--kind", kind, "lp or qp")->capture_default_str();
    spectrum->add_option("--out", out, "Output file (default stdout)");

    auto *landscape = app.add_subcommand("landscape", "Depth-1 cost landscape as CSV");
    landscape->add_option("--number", number, "Semiprime")->required();
    landscape->add_option("--protocol", protocols, "Protocol")->required()->expected(1);
    landscape->add_option("--scan-resolution", scan_resolution, "Grid points per axis")->capture_default_str();
    landscape->add_option("--out", out, "Output file (default stdout)");

    auto *gates = app.add_subcommand("gates", "Two-qubit gate budget per phase layer");
    gates->add_option("--number", number, "Semiprime, comma-separated list, or 'all'")->capture_default_str();
    gates->add_option("--out", out, "Output file (default stdout)");
    gates->add_option("--terms", terms_path, "Also write the Pauli expansions of both Hamiltonians as JSON");

    auto *instances = app.add_subcommand("instances", "Print the benchmark instance table");
    instances->add_option("--out", out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (run->parsed()) {
            ExperimentConfig config;
            config.numbers = parse_numbers(number);
            if (protocols.empty()) {
                auto all = all_protocols();
                config.protocols.assign(all.begin(), all.end());
            }
            try {
                for (const auto &p : protocols) {
                    config.protocols.push_back(protocol_from_string(p));
                }
                config.schedule.max_depth = max_depth;
                config.schedule.init_strategy = init_strategy_from_string(init_strategy);
                config.schedule.scan_resolution = scan_resolution;
                config.out_dir = out;
                config.workers = workers;
                config.validate();
                std::filesystem::create_directories(config.out_dir);
            } catch (const std::exception &e) {
                throw ConfigError(e.what());
            }
            auto summary = run_experiment(config, &std::cerr);
            for (const auto &e : summary.errors) {
                std::cerr << "error: " << e << '\n';
            }
            return summary.ok() ? 0 : kExitRunFailure;
        }

        Output sink(out);
        if (spectrum->parsed()) {
            auto inst = instance_or_config_error(parse_numbers(number).at(0));
            HamiltonianKind k;
            try {
                k = hamiltonian_kind_from_string(kind);
            } catch (const std::exception &e) {
                throw ConfigError(e.what());
            }
            write_spectrum_csv(sink.stream(), spectrum_report(make_hamiltonian(inst, k), inst), inst);
        } else if (landscape->parsed()) {
            auto inst = instance_or_config_error(parse_numbers(number).at(0));
            Protocol p;
            try {
                p = protocol_from_string(protocols.at(0));
                if (scan_resolution < 8) {
                    throw std::invalid_argument("scan resolution must be at least 8");
                }
            } catch (const std::exception &e) {
                throw ConfigError(e.what());
            }
            write_landscape_csv(sink.stream(), landscape_scan(QaoaModel(inst, p), scan_resolution));
        } else if (gates->parsed()) {
            std::vector<std::pair<std::string, GateBudget>> rows;
            nlohmann::json terms = nlohmann::json::object();
            for (auto n : parse_numbers(number)) {
                auto inst = instance_or_config_error(n);
                for (auto k : {HamiltonianKind::Quadratic, HamiltonianKind::Linear}) {
                    auto expansion = pauli_expand(make_hamiltonian(inst, k));
                    auto name = std::string(to_string(k)) + "_N" + std::to_string(n);
                    rows.emplace_back(name, gate_budget(expansion));
                    terms[name] = pauli_terms_to_json(expansion);
                }
            }
            write_gate_budget_csv(sink.stream(), rows);
            if (!terms_path.empty()) {
                Output t(terms_path);
                t.stream() << terms.dump(2) << '\n';
            }
        } else if (instances->parsed()) {
            std::vector<ProblemInstance> all;
            for (auto n : benchmark_numbers()) {
                all.push_back(make_instance(n));
            }
            write_instance_table_csv(sink.stream(), all);
        }
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRunFailure;
    }
    return 0;
}
