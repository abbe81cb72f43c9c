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

#include <cmath>
#include <stdexcept>

namespace qfactor {

SpectrumReport spectrum_report(const DiagonalHamiltonian &h, const ProblemInstance &inst) {
    auto scale = h.max_abs();
    if (scale == 0) {
        throw std::invalid_argument("spectrum is identically zero");
    }
    SpectrumReport rep{h.kind, h.diag, {}, inst.solutions, 0.0};
    rep.normalized.reserve(h.diag.size());
    double acc = 0;
    for (auto e : h.diag) {
        double v = static_cast<double>(e) / static_cast<double>(scale);
        rep.normalized.push_back(v);
        acc += v * v;
    }
    rep.rms = std::sqrt(acc / static_cast<double>(h.diag.size()));
    return rep;
}

std::map<int, double> rms_by_qubit_count(std::span<const ProblemInstance> instances, HamiltonianKind kind) {
    std::map<int, std::pair<double, int>> sums;
    for (const auto &inst : instances) {
        auto rep = spectrum_report(make_hamiltonian(inst, kind), inst);
        auto &[total, count] = sums[inst.num_qubits()];
        total += rep.rms;
        count++;
    }
    std::map<int, double> out;
    for (const auto &[n, s] : sums) {
        out[n] = s.first / s.second;
    }
    return out;
}

GateBudget &GateBudget::operator+=(const GateBudget &other) {
    for (const auto &[w, c] : other.by_weight) {
        by_weight[w] += c;
    }
    two_qubit_per_layer += other.two_qubit_per_layer;
    return *this;
}

GateBudget gate_budget(std::span<const PauliTerm> terms) {
    GateBudget out;
    for (const auto &t : terms) {
        int w = t.weight();
        out.by_weight[w]++;
        if (w >= 2) {
            out.two_qubit_per_layer += 2 * (w - 1);
        }
    }
    return out;
}

GateBudget protocol_gate_budget(const ProblemInstance &inst, Protocol protocol) {
    return gate_budget(pauli_expand(make_hamiltonian(inst, ProtocolConfig::of(protocol).evolution)));
}

std::vector<std::pair<int, double>> fidelity_vs_gates(const RunRecord &record, const GateBudget &budget) {
    std::vector<std::pair<int, double>> out;
    out.emplace_back(0, record.initial_fidelity);
    for (const auto &d : record.depths) {
        out.emplace_back(budget.cumulative(d.depth), d.fidelity);
    }
    return out;
}

}  // namespace qfactor
