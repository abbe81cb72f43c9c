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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails. `--criterion N` runs only N.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfactor/analysis.h"
#include "qfactor/training.h"
#include "test_util.h"

using namespace qfactor;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<ProblemInstance> all_instances() {
    std::vector<ProblemInstance> out;
    for (auto n : benchmark_numbers()) {
        out.push_back(make_instance(n));
    }
    return out;
}

struct TableRow {
    std::uint64_t number;
    int n, n_p, n_q;
    std::set<std::string> solutions;
};

// Benchmark overview table, copied by hand.
const std::vector<TableRow> kTable{
    {15, 3, 1, 2, {"101"}},
    {21, 3, 1, 2, {"111"}},
    {25, 4, 2, 2, {"0101"}},
    {35, 5, 2, 3, {"01110", "11010"}},
    {39, 5, 2, 3, {"10011"}},
    {51, 6, 2, 4, {"100001"}},
    {77, 6, 2, 4, {"111010"}},
    {87, 7, 3, 4, {"1000111"}},
    {95, 7, 3, 4, {"0101001"}},
    {115, 8, 3, 5, {"01011010"}},
    {119, 8, 3, 5, {"11000010"}},
    {143, 8, 3, 5, {"10101100", "01110100"}},
};

Outcome instance_table() {
    auto t0 = Clock::now();
    int mismatches = 0;
    std::ostringstream why;
    for (const auto &row : kTable) {
        auto sizes = qubit_counts(row.number);
        auto inst = make_instance(row.number);
        std::set<std::string> got;
        for (auto b : inst.solutions) {
            got.insert(state_to_string(b, inst));
        }
        if (sizes.p_bits != row.n_p || sizes.q_bits != row.n_q || inst.num_qubits() != row.n || got != row.solutions) {
            mismatches++;
            why << " N=" << row.number;
        }
    }
    double t = seconds_since(t0);
    std::ostringstream d;
    d << "12 rows, " << mismatches << " mismatched" << why.str() << ", " << t << " s";
    return {mismatches == 0 && t < 1.0 && benchmark_numbers().size() == kTable.size(), d.str()};
}

Outcome operator_identity() {
    long checked = 0;
    long bad = 0;
    for (const auto &inst : all_instances()) {
        auto lp = linear_hamiltonian(inst);
        auto qp = quadratic_hamiltonian(inst);
        for (std::size_t b = 0; b < lp.diag.size(); b++) {
            checked++;
            bad += qp.diag[b] != lp.diag[b] * lp.diag[b];
        }
    }
    return {bad == 0, std::to_string(checked) + " entries, " + std::to_string(bad) + " unequal"};
}

Outcome pauli_weights() {
    bool ok = true;
    double worst = 0;
    std::ostringstream d;
    for (const auto &inst : all_instances()) {
        auto lp_terms = pauli_expand(linear_hamiltonian(inst));
        auto qp_terms = pauli_expand(quadratic_hamiltonian(inst));
        int wl = max_pauli_weight(lp_terms);
        int wq = max_pauli_weight(qp_terms);
        bool multi = false;
        for (const auto &t : qp_terms) {
            multi |= t.weight() == 3 || t.weight() == 4;
        }
        if (wl != 2 || (wq != 3 && wq != 4) || (inst.num_qubits() >= 5 && !multi)) {
            ok = false;
            d << "N=" << inst.number << " lp=" << wl << " qp=" << wq << "; ";
        }
        for (auto kind : {HamiltonianKind::Linear, HamiltonianKind::Quadratic}) {
            auto h = make_hamiltonian(inst, kind);
            auto back = reconstruct_diagonal(kind == HamiltonianKind::Linear ? lp_terms : qp_terms, inst.num_qubits());
            for (std::size_t b = 0; b < back.size(); b++) {
                worst = std::max(worst, std::abs(back[b] - static_cast<double>(h.diag[b])));
            }
        }
    }
    d << "max reconstruction error " << worst;
    return {ok && worst < 1e-9, d.str()};
}

Outcome rms_table() {
    auto t0 = Clock::now();
    const std::map<int, double> standard{{3, 0.59}, {4, 0.58}, {5, 0.26}, {6, 0.24}, {7, 0.20}, {8, 0.21}};
    const std::map<int, double> linear{{3, 0.70}, {4, 0.68}, {5, 0.41}, {6, 0.37}, {7, 0.32}, {8, 0.32}};
    auto insts = all_instances();
    auto qp = rms_by_qubit_count(insts, HamiltonianKind::Quadratic);
    auto lp = rms_by_qubit_count(insts, HamiltonianKind::Linear);

    bool ok = qp.size() == 6 && lp.size() == 6;
    std::ostringstream d;
    d.precision(4);
    auto check = [&](const char *name, const std::map<int, double> &want, const std::map<int, double> &got) {
        d << name << ":";
        for (const auto &[n, v] : want) {
            double rounded = std::round(got.at(n) * 100) / 100;
            ok &= std::abs(rounded - v) <= 0.01 + 1e-12;
            d << " " << got.at(n);
        }
        d << "; ";
    };
    check("standard", standard, qp);
    check("linear", linear, lp);

    auto n15 = make_instance(15);
    auto n21 = make_instance(21);
    ok &= std::abs(spectrum_report(linear_hamiltonian(n21), n21).rms - 0.7246) <= 5e-4;
    ok &= std::abs(spectrum_report(linear_hamiltonian(n15), n15).rms - 0.6776) <= 5e-4;
    ok &= std::abs(spectrum_report(quadratic_hamiltonian(n21), n21).rms - 0.6225) <= 5e-4;
    ok &= std::abs(spectrum_report(quadratic_hamiltonian(n15), n15).rms - 0.5606) <= 5e-4;
    double t = seconds_since(t0);
    d << t << " s";
    return {ok && t < 1.0, d.str()};
}

Outcome spread() {
    int wider = 0;
    std::ostringstream d;
    for (const auto &inst : all_instances()) {
        double lp = spectrum_report(linear_hamiltonian(inst), inst).rms;
        double qp = spectrum_report(quadratic_hamiltonian(inst), inst).rms;
        if (lp > qp) {
            wider++;
        } else {
            d << " N=" << inst.number;
        }
    }
    return {wider == 12, std::to_string(wider) + "/12 instances with rms(lp) > rms(qp)" + d.str()};
}

Outcome landscape() {
    QaoaModel model(make_instance(21), Protocol::Standard);
    auto scan = landscape_scan(model, 64);
    double gamma_cell = scan.gamma_max / 64;
    double beta_cell = std::numbers::pi / 63;
    bool gmax_ok = std::abs(scan.gamma_max - 2 * std::numbers::pi / 400) <= 1e-9;
    double dg = std::abs(scan.gamma0 - 0.0075) / gamma_cell;
    double db = std::abs(scan.beta0 - 1.57) / beta_cell;
    std::ostringstream d;
    d.precision(6);
    d << "gamma_max=" << scan.gamma_max << (gmax_ok ? " ok" : " WRONG") << "; minimum at (" << scan.gamma0 << ", " << scan.beta0
      << "), off by " << dg << " gamma cells and " << db << " beta cells";
    return {gmax_ok && dg <= 1.0 && db <= 1.0, d.str()};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(2026);
    double worst = 0;
    int cases = 0;
    for (const auto &inst : all_instances()) {
        if (inst.num_qubits() > 4) {
            continue;
        }
        for (auto protocol : all_protocols()) {
            QaoaModel model(inst, protocol);
            double scale = 1.0 / static_cast<double>(make_hamiltonian(inst, model.config().evolution).max_abs());
            for (std::size_t depth = 1; depth <= 5; depth++) {
                auto params = testing::random_params(depth, rng, 2 * std::numbers::pi * scale, std::numbers::pi);
                auto got = model.state(params);
                auto want = testing::dense_ansatz(model, params);
                for (std::size_t b = 0; b < want.size(); b++) {
                    worst = std::max(worst, std::abs(got[b] - want[b]));
                }
                cases++;
            }
        }
    }
    std::ostringstream d;
    d << cases << " cases, max amplitude error " << worst;
    return {cases > 0 && worst < 1e-10, d.str()};
}

struct SweepRun {
    RunRecord record;
    double seconds;
};

/// The full sweep to depth 40, computed once per process.
const std::vector<SweepRun> &full_sweep() {
    static const std::vector<SweepRun> runs = [] {
        std::vector<SweepRun> out;
        TrainSchedule schedule;
        schedule.max_depth = 40;
        for (const auto &inst : all_instances()) {
            for (auto protocol : all_protocols()) {
                auto t0 = Clock::now();
                QaoaModel model(inst, protocol);
                auto record = incremental_train(model, schedule);
                out.push_back({std::move(record), seconds_since(t0)});
            }
        }
        return out;
    }();
    return runs;
}

Outcome monotonicity() {
    int violations = 0;
    int unconverged = 0;
    std::ostringstream d;
    for (const auto &run : full_sweep()) {
        const auto &r = run.record;
        for (std::size_t k = 1; k < r.depths.size(); k++) {
            if (r.depths[k].cost > r.depths[k - 1].cost + 1e-9) {
                violations++;
                d << " N=" << r.number << "/" << to_string(r.protocol) << "@" << r.depths[k].depth;
            }
        }
        for (const auto &dr : r.depths) {
            unconverged += !dr.converged;
        }
    }
    std::ostringstream out;
    out << full_sweep().size() << " runs, " << violations << " increases" << d.str() << " (" << unconverged
        << " depth fits stopped before convergence)";
    return {violations == 0 && full_sweep().size() == 36, out.str()};
}

Outcome fidelity_attainment() {
    bool ok = true;
    std::ostringstream d;
    d.precision(3);
    std::map<std::uint64_t, double> best_at_40;
    std::map<std::uint64_t, std::optional<int>> first_08;
    for (const auto &run : full_sweep()) {
        const auto &r = run.record;
        best_at_40[r.number] = std::max(best_at_40[r.number], r.depths.back().fidelity);
        for (const auto &dr : r.depths) {
            if (dr.fidelity >= 0.8) {
                auto &f = first_08[r.number];
                if (!f || dr.depth < *f) {
                    f = dr.depth;
                }
                break;
            }
        }
    }
    for (std::uint64_t n : {15u, 21u, 25u}) {
        auto f = first_08[n];
        ok &= f.has_value();
        d << "N=" << n << " reaches 0.8 at " << (f ? std::to_string(*f) : std::string("never")) << "; ";
    }
    double worst_ratio = 1e300;
    std::uint64_t worst_n = 0;
    for (const auto &inst : all_instances()) {
        double baseline = static_cast<double>(inst.solutions.size()) / static_cast<double>(inst.dimension());
        double ratio = best_at_40[inst.number] / baseline;
        if (ratio < worst_ratio) {
            worst_ratio = ratio;
            worst_n = inst.number;
        }
        ok &= ratio >= 5.0;
    }
    d << "smallest best-protocol/baseline ratio " << worst_ratio << " (N=" << worst_n << ")";
    return {ok, d.str()};
}

Outcome gate_direction() {
    bool ok = true;
    std::ostringstream d;
    for (const auto &inst : all_instances()) {
        int standard = protocol_gate_budget(inst, Protocol::Standard).two_qubit_per_layer;
        int lq = protocol_gate_budget(inst, Protocol::LinearQuadratic).two_qubit_per_layer;
        int la = protocol_gate_budget(inst, Protocol::LinearAbs).two_qubit_per_layer;
        if (!(lq < standard && la < standard)) {
            ok = false;
            d << "N=" << inst.number << " not smaller; ";
        }
    }
    auto n35 = make_instance(35);
    int lin = protocol_gate_budget(n35, Protocol::LinearAbs).two_qubit_per_layer;
    int std35 = protocol_gate_budget(n35, Protocol::Standard).two_qubit_per_layer;
    ok &= lin == 12 && std35 > 12;
    d << "N=35 linear " << lin << ", standard " << std35 << " per layer";
    return {ok, d.str()};
}

Outcome runtime() {
    double total = 0;
    double slowest = 0;
    for (const auto &run : full_sweep()) {
        total += run.seconds;
        slowest = std::max(slowest, run.seconds);
    }
    std::ostringstream d;
    d.precision(4);
    d << "36 runs to depth 40 in " << total << " s single-threaded (slowest run " << slowest << " s)";
    return {total < 1800.0, d.str()};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qfactor acceptance checks"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"instance table", instance_table},
        {"operator identity", operator_identity},
        {"pauli weights", pauli_weights},
        {"rms table", rms_table},
        {"linear spread", spread},
        {"landscape constants", landscape},
        {"simulator oracle", oracle_equivalence},
        {"training monotonicity", monotonicity},
        {"fidelity attainment", fidelity_attainment},
        {"gate budget direction", gate_direction},
        {"sweep runtime", runtime},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); k++) {
        int id = static_cast<int>(k) + 1;
        if (only && only != id) {
            continue;
        }
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("criterion %2d %-22s %s  %s\n", id, criteria[k].first.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
