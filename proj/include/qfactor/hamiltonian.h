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

#ifndef QFACTOR_HAMILTONIAN_H
#define QFACTOR_HAMILTONIAN_H

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qfactor/instance.h"

namespace qfactor {

enum class HamiltonianKind {
    /// (N - p q)^2, solution in the ground state.
    Quadratic,
    /// N - p q, solution in the null space.
    Linear,
    /// |N - p q|, used only as a cost observable.
    AbsLinear,
};

std::string_view to_string(HamiltonianKind kind);
HamiltonianKind hamiltonian_kind_from_string(std::string_view name);

/// Diagonal of an operator in the computational basis. Entries are exact
/// integers; conversion to floating point happens at the simulator boundary.
struct DiagonalHamiltonian {
    HamiltonianKind kind;
    int num_qubits;
    std::vector<std::int64_t> diag;

    std::int64_t max_abs() const;
    std::vector<double> to_real() const;
};

DiagonalHamiltonian linear_hamiltonian(const ProblemInstance &inst);
DiagonalHamiltonian quadratic_hamiltonian(const ProblemInstance &inst);
DiagonalHamiltonian abs_linear_hamiltonian(const ProblemInstance &inst);
DiagonalHamiltonian make_hamiltonian(const ProblemInstance &inst, HamiltonianKind kind);

/// coefficient * prod_{j in support} Z_j. Qubit j contributes (-1)^{b_j} on basis state b.
struct PauliTerm {
    std::uint64_t mask;
    double coefficient;

    int weight() const;
    std::vector<int> support() const;
};

/// Coefficients below this magnitude are dropped from expansions.
constexpr double kPauliDropThreshold = 1e-12;

/// Z-monomial expansion of a diagonal via a fast Walsh-Hadamard transform.
/// Terms are sorted by (weight, support).
std::vector<PauliTerm> pauli_expand(std::span<const double> diag);
std::vector<PauliTerm> pauli_expand(const DiagonalHamiltonian &h);

/// Evaluates sum_S c_S (-1)^{popcount(b & S)} at every basis state.
std::vector<double> reconstruct_diagonal(std::span<const PauliTerm> terms, int num_qubits);

int max_pauli_weight(std::span<const PauliTerm> terms);

/// [{"support":[i,...],"coeff":c},...]
nlohmann::json pauli_terms_to_json(std::span<const PauliTerm> terms);

}  // namespace qfactor

#endif
