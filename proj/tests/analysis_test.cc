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

#include "qfactor/analysis.h"

#include <bit>
#include <cmath>

#include "gtest/gtest.h"

using namespace qfactor;

namespace {

/// Two-qubit gate count from a brute-force correlation sum over every Z monomial.
int brute_force_gates(const DiagonalHamiltonian &h) {
    auto diag = h.to_real();
    int gates = 0;
    for (std::uint64_t mask = 0; mask < diag.size(); mask++) {
        double acc = 0;
        for (std::size_t b = 0; b < diag.size(); b++) {
            acc += (std::popcount(b & mask) % 2 == 0) ? diag[b] : -diag[b];
        }
        int w = std::popcount(mask);
        if (std::abs(acc / static_cast<double>(diag.size())) > 1e-9 && w >= 2) {
            gates += 2 * (w - 1);
        }
    }
    return gates;
}

}  // namespace

TEST(analysis, spectrum_rms_values) {
    auto n21 = make_instance(21);
    auto n15 = make_instance(15);
    EXPECT_NEAR(spectrum_report(linear_hamiltonian(n21), n21).rms, 0.724568837309472, 1e-12);
    EXPECT_NEAR(spectrum_report(linear_hamiltonian(n15), n15).rms, 0.6776309271789384, 1e-12);
    EXPECT_NEAR(spectrum_report(quadratic_hamiltonian(n15), n15).rms, 0.5605747630538926, 1e-12);
    EXPECT_NEAR(spectrum_report(quadratic_hamiltonian(n21), n21).rms, 0.622454817637393, 1e-12);
}

TEST(analysis, spectrum_report_contents) {
    auto inst = make_instance(21);
    auto rep = spectrum_report(linear_hamiltonian(inst), inst);
    EXPECT_EQ(rep.kind, HamiltonianKind::Linear);
    EXPECT_EQ(rep.energies, (std::vector<std::int64_t>{20, 18, 18, 12, 16, 6, 14, 0}));
    EXPECT_DOUBLE_EQ(rep.normalized[0], 1.0);
    EXPECT_DOUBLE_EQ(rep.normalized[3], 0.6);
    EXPECT_EQ(rep.solutions, inst.solutions);

    DiagonalHamiltonian zero{HamiltonianKind::Linear, 1, {0, 0}};
    EXPECT_THROW(spectrum_report(zero, inst), std::invalid_argument);
}

TEST(analysis, linear_spectrum_is_wider_for_every_benchmark) {
    for (auto number : benchmark_numbers()) {
        auto inst = make_instance(number);
        double lp = spectrum_report(linear_hamiltonian(inst), inst).rms;
        double qp = spectrum_report(quadratic_hamiltonian(inst), inst).rms;
        EXPECT_GT(lp, qp) << "N=" << number;
    }
}

TEST(analysis, rms_by_qubit_count_averages_instances) {
    std::vector<ProblemInstance> insts{make_instance(15), make_instance(21)};
    auto lp = rms_by_qubit_count(insts, HamiltonianKind::Linear);
    ASSERT_EQ(lp.size(), 1u);
    EXPECT_NEAR(lp.at(3), (0.724568837309472 + 0.6776309271789384) / 2, 1e-12);

    std::vector<ProblemInstance> all;
    for (auto n : benchmark_numbers()) {
        all.push_back(make_instance(n));
    }
    auto table = rms_by_qubit_count(all, HamiltonianKind::Linear);
    EXPECT_EQ(table.size(), 6u);
    EXPECT_EQ(table.begin()->first, 3);
    EXPECT_EQ(table.rbegin()->first, 8);
}

TEST(analysis, gate_budget_of_explicit_terms) {
    std::vector<PauliTerm> terms{{0b0, 1.0}, {0b1, 1.0}, {0b11, 1.0}, {0b111, 1.0}, {0b1111, 1.0}};
    auto g = gate_budget(terms);
    EXPECT_EQ(g.two_qubit_per_layer, 2 + 4 + 6);
    EXPECT_EQ(g.by_weight.at(0), 1);
    EXPECT_EQ(g.by_weight.at(4), 1);
    EXPECT_EQ(g.cumulative(5), 60);

    GateBudget sum;
    sum += g;
    sum += g;
    EXPECT_EQ(sum.two_qubit_per_layer, 24);
    EXPECT_EQ(sum.by_weight.at(2), 2);
}

TEST(analysis, gate_budgets_match_brute_force) {
    for (auto number : benchmark_numbers()) {
        auto inst = make_instance(number);
        auto lp = protocol_gate_budget(inst, Protocol::LinearAbs);
        auto qp = protocol_gate_budget(inst, Protocol::Standard);
        EXPECT_EQ(lp.two_qubit_per_layer, brute_force_gates(linear_hamiltonian(inst))) << "N=" << number;
        EXPECT_EQ(qp.two_qubit_per_layer, brute_force_gates(quadratic_hamiltonian(inst))) << "N=" << number;
        EXPECT_EQ(lp.two_qubit_per_layer, 2 * inst.p_bits * inst.q_bits);
        EXPECT_LT(lp.two_qubit_per_layer, qp.two_qubit_per_layer);
        EXPECT_EQ(protocol_gate_budget(inst, Protocol::LinearQuadratic).two_qubit_per_layer, lp.two_qubit_per_layer);
    }
    auto n35 = make_instance(35);
    EXPECT_EQ(protocol_gate_budget(n35, Protocol::LinearAbs).two_qubit_per_layer, 12);
    EXPECT_EQ(protocol_gate_budget(n35, Protocol::Standard).two_qubit_per_layer, 74);
}

TEST(analysis, fidelity_vs_gates_curve) {
    RunRecord rec;
    rec.initial_fidelity = 0.1;
    rec.depths.push_back({1, {}, 0, 0.2, 0, 0, true});
    rec.depths.push_back({2, {}, 0, 0.4, 0, 0, true});
    GateBudget budget;
    budget.two_qubit_per_layer = 12;
    auto curve = fidelity_vs_gates(rec, budget);
    ASSERT_EQ(curve.size(), 3u);
    EXPECT_EQ(curve[0], (std::pair<int, double>{0, 0.1}));
    EXPECT_EQ(curve[1], (std::pair<int, double>{12, 0.2}));
    EXPECT_EQ(curve[2], (std::pair<int, double>{24, 0.4}));
}
