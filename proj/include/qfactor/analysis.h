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

#ifndef QFACTOR_ANALYSIS_H
#define QFACTOR_ANALYSIS_H

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qfactor/hamiltonian.h"
#include "qfactor/instance.h"
#include "qfactor/training.h"

namespace qfactor {

/// Spectrum of a diagonal Hamiltonian divided by its largest magnitude.
struct SpectrumReport {
    HamiltonianKind kind;
    std::vector<std::int64_t> energies;
    std::vector<double> normalized;
    std::vector<BasisIndex> solutions;
    /// sqrt(mean of squared normalized energies): spread around the target energy 0.
    double rms = 0;
};

/// Throws std::invalid_argument on an identically zero spectrum.
SpectrumReport spectrum_report(const DiagonalHamiltonian &h, const ProblemInstance &inst);

/// Mean per-instance rms over instances sharing a qubit count.
std::map<int, double> rms_by_qubit_count(std::span<const ProblemInstance> instances, HamiltonianKind kind);

/// CNOT count of one phase layer. A weight-k Z rotation costs a CNOT ladder
/// down and back up, 2 (k - 1) gates. Single-qubit gates are not counted.
struct GateBudget {
    /// term count per Pauli weight
    std::map<int, int> by_weight;
    int two_qubit_per_layer = 0;

    int cumulative(int depth) const {
        return depth * two_qubit_per_layer;
    }
    GateBudget &operator+=(const GateBudget &other);
};

GateBudget gate_budget(std::span<const PauliTerm> terms);

/// Budget of the phase layer of `protocol` on `inst`.
GateBudget protocol_gate_budget(const ProblemInstance &inst, Protocol protocol);

/// (cumulative two-qubit gates, fidelity), starting with depth 0.
std::vector<std::pair<int, double>> fidelity_vs_gates(const RunRecord &record, const GateBudget &budget);

}  // namespace qfactor

#endif
