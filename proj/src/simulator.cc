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

#include "qfactor/simulator.h"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qfactor {

namespace {

void check_size(const StateVector &state, std::span<const double> diag) {
    if (state.size() != diag.size()) {
        throw std::invalid_argument(
            "diagonal has " + std::to_string(diag.size()) + " entries but the state has " +
            std::to_string(state.size()));
    }
}

/// Sum over qubits of X_j applied to `in`.
void apply_total_x(std::span<const Amplitude> in, std::span<Amplitude> out, int num_qubits) {
    std::fill(out.begin(), out.end(), Amplitude{});
    for (int j = 0; j < num_qubits; j++) {
        std::size_t bit = std::size_t{1} << j;
        for (std::size_t b = 0; b < in.size(); b++) {
            out[b] += in[b ^ bit];
        }
    }
}

Amplitude inner(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    Amplitude acc{};
    for (std::size_t i = 0; i < a.size(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

constexpr std::array<Protocol, 3> kProtocols{Protocol::Standard, Protocol::LinearQuadratic, Protocol::LinearAbs};

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amps) : num_qubits_(num_qubits), amps_(std::move(amps)) {
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count must be 2^num_qubits");
    }
}

StateVector StateVector::basis(int num_qubits, BasisIndex b) {
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    amps.at(b) = 1.0;
    return {num_qubits, std::move(amps)};
}

double StateVector::norm_squared() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

std::vector<double> ParameterSet::flatten() const {
    std::vector<double> x(gammas);
    x.insert(x.end(), betas.begin(), betas.end());
    return x;
}

ParameterSet ParameterSet::unflatten(std::span<const double> x) {
    if (x.size() % 2 != 0) {
        throw std::invalid_argument("flattened parameter vector must have even length");
    }
    auto d = x.size() / 2;
    return {{x.begin(), x.begin() + d}, {x.begin() + d, x.end()}};
}

std::string_view to_string(Protocol protocol) {
    switch (protocol) {
        case Protocol::Standard:
            return "standard";
        case Protocol::LinearQuadratic:
            return "linear_quadratic";
        case Protocol::LinearAbs:
            return "linear_abs";
    }
    throw std::logic_error("unknown Protocol");
}

Protocol protocol_from_string(std::string_view name) {
    for (auto p : kProtocols) {
        if (to_string(p) == name) {
            return p;
        }
    }
    throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

std::span<const Protocol> all_protocols() {
    return kProtocols;
}

ProtocolConfig ProtocolConfig::of(Protocol protocol) {
    switch (protocol) {
        case Protocol::Standard:
            return {protocol, HamiltonianKind::Quadratic, HamiltonianKind::Quadratic, InitialState::Uniform};
        case Protocol::LinearQuadratic:
            return {protocol, HamiltonianKind::Linear, HamiltonianKind::Quadratic, InitialState::Alternating};
        case Protocol::LinearAbs:
            return {protocol, HamiltonianKind::Linear, HamiltonianKind::AbsLinear, InitialState::Alternating};
    }
    throw std::logic_error("unknown Protocol");
}

StateVector initial_state(InitialState kind, int num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("need at least one qubit");
    }
    std::size_t dim = std::size_t{1} << num_qubits;
    double amp = std::pow(2.0, -0.5 * num_qubits);
    std::uint64_t odd_mask = 0;
    if (kind == InitialState::Alternating) {
        for (int j = 1; j < num_qubits; j += 2) {
            odd_mask |= std::uint64_t{1} << j;
        }
    }
    std::vector<Amplitude> amps(dim);
    for (std::size_t b = 0; b < dim; b++) {
        amps[b] = (std::popcount(b & odd_mask) % 2 == 0) ? amp : -amp;
    }
    return {num_qubits, std::move(amps)};
}

void apply_cost_layer(StateVector &state, std::span<const double> diag, double gamma) {
    check_size(state, diag);
    for (std::size_t b = 0; b < state.size(); b++) {
        double phase = -gamma * diag[b];
        state[b] *= Amplitude(std::cos(phase), std::sin(phase));
    }
}

void apply_mixer_layer(StateVector &state, double beta) {
    double c = std::cos(0.5 * beta);
    Amplitude is(0.0, std::sin(0.5 * beta));
    auto amps = state.amplitudes();
    for (int j = 0; j < state.num_qubits(); j++) {
        std::size_t bit = std::size_t{1} << j;
        for (std::size_t b = 0; b < amps.size(); b++) {
            if (b & bit) {
                continue;
            }
            Amplitude a0 = amps[b];
            Amplitude a1 = amps[b | bit];
            amps[b] = c * a0 + is * a1;
            amps[b | bit] = is * a0 + c * a1;
        }
    }
}

double expectation(const StateVector &state, std::span<const double> diag) {
    check_size(state, diag);
    double acc = 0;
    for (std::size_t b = 0; b < state.size(); b++) {
        acc += std::norm(state[b]) * diag[b];
    }
    return acc;
}

double fidelity(const StateVector &state, const ProblemInstance &inst) {
    double acc = 0;
    for (auto b : inst.solutions) {
        acc += std::norm(state[b]);
    }
    return acc;
}

std::vector<double> populations(const StateVector &state) {
    std::vector<double> out(state.size());
    for (std::size_t b = 0; b < state.size(); b++) {
        out[b] = std::norm(state[b]);
    }
    return out;
}

QaoaModel::QaoaModel(ProblemInstance inst, Protocol protocol)
    : inst_(std::move(inst)),
      config_(ProtocolConfig::of(protocol)),
      evolution_(make_hamiltonian(inst_, config_.evolution).to_real()),
      cost_(make_hamiltonian(inst_, config_.cost).to_real()) {
}

StateVector QaoaModel::initial() const {
    return initial_state(config_.initial, num_qubits());
}

StateVector QaoaModel::state(const ParameterSet &params) const {
    if (params.gammas.size() != params.betas.size()) {
        throw std::invalid_argument("gammas and betas must have equal length");
    }
    auto psi = initial();
    for (std::size_t i = 0; i < params.depth(); i++) {
        apply_cost_layer(psi, evolution_, params.gammas[i]);
        apply_mixer_layer(psi, params.betas[i]);
    }
    return psi;
}

double QaoaModel::cost(const ParameterSet &params) const {
    return expectation(state(params), cost_);
}

double QaoaModel::cost_and_gradient(const ParameterSet &params, ParameterSet &grad) const {
    auto psi = state(params);
    double value = expectation(psi, cost_);

    // lambda carries O|psi> pulled back through the layers already undone.
    std::vector<Amplitude> lambda(psi.size());
    for (std::size_t b = 0; b < psi.size(); b++) {
        lambda[b] = cost_[b] * psi[b];
    }
    StateVector back(num_qubits(), std::move(lambda));
    std::vector<Amplitude> scratch(psi.size());

    auto d = params.depth();
    grad.gammas.assign(d, 0.0);
    grad.betas.assign(d, 0.0);
    for (std::size_t k = d; k-- > 0;) {
        // d/dbeta exp(i beta/2 X_tot) = (i/2) X_tot exp(i beta/2 X_tot)
        apply_total_x(psi.amplitudes(), scratch, num_qubits());
        grad.betas[k] = -inner(back.amplitudes(), scratch).imag();
        apply_mixer_layer(psi, -params.betas[k]);
        apply_mixer_layer(back, -params.betas[k]);

        // d/dgamma exp(-i gamma E) = -i E exp(-i gamma E)
        Amplitude w{};
        for (std::size_t b = 0; b < psi.size(); b++) {
            w += std::conj(back[b]) * evolution_[b] * psi[b];
        }
        grad.gammas[k] = 2.0 * w.imag();
        apply_cost_layer(psi, evolution_, -params.gammas[k]);
        apply_cost_layer(back, evolution_, -params.gammas[k]);
    }
    return value;
}

}  // namespace qfactor
