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

#ifndef QFACTOR_SIMULATOR_H
#define QFACTOR_SIMULATOR_H

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "qfactor/hamiltonian.h"
#include "qfactor/instance.h"

namespace qfactor {

using Amplitude = std::complex<double>;

/// Dense state over 2^n amplitudes, qubit j at bit j of the index.
class StateVector {
   public:
    StateVector() = default;
    StateVector(int num_qubits, std::vector<Amplitude> amps);

    static StateVector basis(int num_qubits, BasisIndex b);

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t size() const {
        return amps_.size();
    }
    Amplitude &operator[](std::size_t i) {
        return amps_[i];
    }
    const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }
    std::span<Amplitude> amplitudes() {
        return amps_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    double norm_squared() const;

   private:
    int num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// Per-layer angles. gammas[i] drives the cost phase of layer i, betas[i] its mixer.
struct ParameterSet {
    std::vector<double> gammas;
    std::vector<double> betas;

    std::size_t depth() const {
        return gammas.size();
    }
    /// gammas followed by betas.
    std::vector<double> flatten() const;
    static ParameterSet unflatten(std::span<const double> x);

    bool operator==(const ParameterSet &) const = default;
};

enum class Protocol { Standard, LinearQuadratic, LinearAbs };

enum class InitialState {
    /// |+>^n, ground state of the mixer.
    Uniform,
    /// |+ - + - ...>, qubit 0 in |+>.
    Alternating,
};

std::string_view to_string(Protocol protocol);
Protocol protocol_from_string(std::string_view name);
std::span<const Protocol> all_protocols();

/// Which diagonal drives the phase layers and which one is measured.
struct ProtocolConfig {
    Protocol protocol;
    HamiltonianKind evolution;
    HamiltonianKind cost;
    InitialState initial;

    static ProtocolConfig of(Protocol protocol);
};

StateVector initial_state(InitialState kind, int num_qubits);

/// amps[b] *= exp(-i gamma diag[b])
void apply_cost_layer(StateVector &state, std::span<const double> diag, double gamma);

/// exp(-i beta H_M) with H_M = -(1/2) sum_j X_j, i.e. per qubit
/// (a0, a1) -> (cos(beta/2) a0 + i sin(beta/2) a1, i sin(beta/2) a0 + cos(beta/2) a1).
void apply_mixer_layer(StateVector &state, double beta);

double expectation(const StateVector &state, std::span<const double> diag);
double fidelity(const StateVector &state, const ProblemInstance &inst);
std::vector<double> populations(const StateVector &state);

/// A protocol bound to one problem instance, with the evolution and cost
/// diagonals materialized in floating point.
class QaoaModel {
   public:
    QaoaModel(ProblemInstance inst, Protocol protocol);

    const ProblemInstance &instance() const {
        return inst_;
    }
    const ProtocolConfig &config() const {
        return config_;
    }
    std::span<const double> evolution_diagonal() const {
        return evolution_;
    }
    std::span<const double> cost_diagonal() const {
        return cost_;
    }
    int num_qubits() const {
        return inst_.num_qubits();
    }

    StateVector initial() const;
    StateVector state(const ParameterSet &params) const;
    double cost(const ParameterSet &params) const;

    /// Exact gradient by reverse-mode propagation through the layers. `grad`
    /// is resized to the depth of `params`. Returns the cost.
    double cost_and_gradient(const ParameterSet &params, ParameterSet &grad) const;

   private:
    ProblemInstance inst_;
    ProtocolConfig config_;
    std::vector<double> evolution_;
    std::vector<double> cost_;
};

}  // namespace qfactor

#endif
