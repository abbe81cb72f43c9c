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

#include "qfactor/report.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qfactor {

namespace {

template <typename T>
T required(const nlohmann::json &j, const char *key) {
    if (!j.contains(key)) {
        throw std::invalid_argument(std::string("run record is missing '") + key + "'");
    }
    return j.at(key).get<T>();
}

}  // namespace

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("refusing to format a non-finite value");
    }
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("to_chars failed");
    }
    return {buf, end};
}

nlohmann::json run_record_to_json(const RunRecord &r, int gates_per_layer) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["number"] = r.number;
    j["protocol"] = to_string(r.protocol);
    j["init_strategy"] = to_string(r.init_strategy);
    j["scan_resolution"] = r.scan_resolution;
    j["gamma_max"] = r.gamma_max;
    j["gamma0"] = r.gamma0;
    j["beta0"] = r.beta0;
    j["initial_cost"] = r.initial_cost;
    j["initial_fidelity"] = r.initial_fidelity;
    j["two_qubit_gates_per_layer"] = gates_per_layer;

    auto depth = nlohmann::json::array();
    auto gammas = nlohmann::json::array();
    auto betas = nlohmann::json::array();
    auto cost = nlohmann::json::array();
    auto fid = nlohmann::json::array();
    auto iters = nlohmann::json::array();
    auto evals = nlohmann::json::array();
    auto converged = nlohmann::json::array();
    for (const auto &d : r.depths) {
        depth.push_back(d.depth);
        gammas.push_back(d.params.gammas);
        betas.push_back(d.params.betas);
        cost.push_back(d.cost);
        fid.push_back(d.fidelity);
        iters.push_back(d.iterations);
        evals.push_back(d.evaluations);
        converged.push_back(d.converged);
    }
    j["depth"] = std::move(depth);
    j["gammas"] = std::move(gammas);
    j["betas"] = std::move(betas);
    j["cost"] = std::move(cost);
    j["fidelity"] = std::move(fid);
    j["n_iters"] = std::move(iters);
    j["n_evals"] = std::move(evals);
    j["converged"] = std::move(converged);
    return j;
}

RunRecord run_record_from_json(const nlohmann::json &j) {
    auto version = required<int>(j, "schema_version");
    if (version != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema_version " + std::to_string(version));
    }
    RunRecord r;
    r.number = required<std::uint64_t>(j, "number");
    r.protocol = protocol_from_string(required<std::string>(j, "protocol"));
    r.init_strategy = init_strategy_from_string(required<std::string>(j, "init_strategy"));
    r.scan_resolution = required<int>(j, "scan_resolution");
    r.gamma_max = required<double>(j, "gamma_max");
    r.gamma0 = required<double>(j, "gamma0");
    r.beta0 = required<double>(j, "beta0");
    r.initial_cost = required<double>(j, "initial_cost");
    r.initial_fidelity = required<double>(j, "initial_fidelity");

    auto depth = required<std::vector<int>>(j, "depth");
    auto gammas = required<std::vector<std::vector<double>>>(j, "gammas");
    auto betas = required<std::vector<std::vector<double>>>(j, "betas");
    auto cost = required<std::vector<double>>(j, "cost");
    auto fid = required<std::vector<double>>(j, "fidelity");
    auto iters = required<std::vector<int>>(j, "n_iters");
    auto evals = required<std::vector<int>>(j, "n_evals");
    auto converged = required<std::vector<bool>>(j, "converged");
    auto n = depth.size();
    if (gammas.size() != n || betas.size() != n || cost.size() != n || fid.size() != n || iters.size() != n ||
        evals.size() != n || converged.size() != n) {
        throw std::invalid_argument("per-depth arrays have inconsistent lengths");
    }
    for (std::size_t k = 0; k < n; k++) {
        if (gammas[k].size() != betas[k].size() || gammas[k].size() != static_cast<std::size_t>(depth[k])) {
            throw std::invalid_argument("angle arrays do not match depth " + std::to_string(depth[k]));
        }
        r.depths.push_back({depth[k], {gammas[k], betas[k]}, cost[k], fid[k], iters[k], evals[k], converged[k]});
    }
    return r;
}

void write_spectrum_csv(std::ostream &out, const SpectrumReport &report, const ProblemInstance &inst) {
    out << "basis_index,display_string,energy,normalized_energy,is_solution\n";
    for (std::size_t b = 0; b < report.energies.size(); b++) {
        out << b << ',' << state_to_string(b, inst) << ',' << report.energies[b] << ',' << format_double(report.normalized[b])
            << ',' << (inst.is_solution(b) ? 1 : 0) << '\n';
    }
}

void write_landscape_csv(std::ostream &out, const LandscapeScan &scan) {
    out << "# gamma_max=" << format_double(scan.gamma_max) << ",gamma0=" << format_double(scan.gamma0)
        << ",beta0=" << format_double(scan.beta0) << ",cost0=" << format_double(scan.cost0)
        << ",resolution=" << scan.resolution << '\n';
    out << "gamma,beta,cost\n";
    auto r = static_cast<std::size_t>(scan.resolution);
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t j = 0; j < r; j++) {
            out << format_double(scan.gammas[i]) << ',' << format_double(scan.betas[j]) << ','
                << format_double(scan.costs[i * r + j]) << '\n';
        }
    }
}

void write_gate_budget_csv(std::ostream &out, const std::vector<std::pair<std::string, GateBudget>> &rows) {
    int max_weight = 0;
    for (const auto &[name, budget] : rows) {
        if (!budget.by_weight.empty()) {
            max_weight = std::max(max_weight, budget.by_weight.rbegin()->first);
        }
    }
    out << "hamiltonian";
    for (int w = 0; w <= max_weight; w++) {
        out << ",weight_" << w;
    }
    out << ",two_qubit_per_layer\n";
    for (const auto &[name, budget] : rows) {
        out << name;
        for (int w = 0; w <= max_weight; w++) {
            auto it = budget.by_weight.find(w);
            out << ',' << (it == budget.by_weight.end() ? 0 : it->second);
        }
        out << ',' << budget.two_qubit_per_layer << '\n';
    }
}

void write_instance_table_csv(std::ostream &out, const std::vector<ProblemInstance> &instances) {
    out << "number,n,p,q,p_prime,q_prime,n_p,n_q,p_bitstring,q_bitstring,solutions\n";
    for (const auto &inst : instances) {
        // Report the pair with p <= q.
        FactorPair f{0, 0};
        for (auto b : inst.solutions) {
            auto cand = decode_state(b, inst);
            if (f.p == 0 || cand.p < f.p) {
                f = cand;
            }
        }
        out << inst.number << ',' << inst.num_qubits() << ',' << f.p << ',' << f.q << ',' << (f.p - 1) / 2 << ','
            << (f.q - 1) / 2 << ',' << inst.p_bits << ',' << inst.q_bits << ',' << msb_first_bits((f.p - 1) / 2, inst.p_bits)
            << ',' << msb_first_bits((f.q - 1) / 2, inst.q_bits) << ',';
        for (std::size_t k = 0; k < inst.solutions.size(); k++) {
            out << (k ? " " : "") << state_to_string(inst.solutions[k], inst);
        }
        out << '\n';
    }
}

}  // namespace qfactor
