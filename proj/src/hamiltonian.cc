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

#include "qfactor/hamiltonian.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qfactor {

std::string_view to_string(HamiltonianKind kind) {
    switch (kind) {
        case HamiltonianKind::Quadratic:
            return "qp";
        case HamiltonianKind::Linear:
            return "lp";
        case HamiltonianKind::AbsLinear:
            return "abs_lp";
    }
    throw std::logic_error("unknown HamiltonianKind");
}

HamiltonianKind hamiltonian_kind_from_string(std::string_view name) {
    if (name == "qp") {
        return HamiltonianKind::Quadratic;
    }
    if (name == "lp") {
        return HamiltonianKind::Linear;
    }
    if (name == "abs_lp") {
        return HamiltonianKind::AbsLinear;
    }
    throw std::invalid_argument("unknown hamiltonian kind '" + std::string(name) + "'");
}

std::int64_t DiagonalHamiltonian::max_abs() const {
    std::int64_t m = 0;
    for (auto v : diag) {
        m = std::max(m, v < 0 ? -v : v);
    }
    return m;
}

std::vector<double> DiagonalHamiltonian::to_real() const {
    return {diag.begin(), diag.end()};
}

DiagonalHamiltonian linear_hamiltonian(const ProblemInstance &inst) {
    DiagonalHamiltonian h{HamiltonianKind::Linear, inst.num_qubits(), {}};
    h.diag.resize(inst.dimension());
    for (BasisIndex b = 0; b < inst.dimension(); b++) {
        auto [p, q] = decode_state(b, inst);
        h.diag[b] = static_cast<std::int64_t>(inst.number) - static_cast<std::int64_t>(p * q);
    }
    return h;
}

DiagonalHamiltonian quadratic_hamiltonian(const ProblemInstance &inst) {
    auto h = linear_hamiltonian(inst);
    h.kind = HamiltonianKind::Quadratic;
    for (auto &v : h.diag) {
        v *= v;
    }
    return h;
}

DiagonalHamiltonian abs_linear_hamiltonian(const ProblemInstance &inst) {
    auto h = linear_hamiltonian(inst);
    h.kind = HamiltonianKind::AbsLinear;
    for (auto &v : h.diag) {
        v = v < 0 ? -v : v;
    }
    return h;
}

DiagonalHamiltonian make_hamiltonian(const ProblemInstance &inst, HamiltonianKind kind) {
    switch (kind) {
        case HamiltonianKind::Quadratic:
            return quadratic_hamiltonian(inst);
        case HamiltonianKind::Linear:
            return linear_hamiltonian(inst);
        case HamiltonianKind::AbsLinear:
            return abs_linear_hamiltonian(inst);
    }
    throw std::logic_error("unknown HamiltonianKind");
}

int PauliTerm::weight() const {
    return std::popcount(mask);
}

std::vector<int> PauliTerm::support() const {
    std::vector<int> out;
    for (int j = 0; j < 64; j++) {
        if ((mask >> j) & 1) {
            out.push_back(j);
        }
    }
    return out;
}

std::vector<PauliTerm> pauli_expand(std::span<const double> diag) {
    auto dim = diag.size();
    if (dim == 0 || !std::has_single_bit(dim) || dim > (std::size_t{1} << kMaxQubits)) {
        throw std::invalid_argument("diagonal length must be a power of two up to 2^16");
    }
    std::vector<double> c(diag.begin(), diag.end());
    for (std::size_t h = 1; h < dim; h <<= 1) {
        for (std::size_t i = 0; i < dim; i += 2 * h) {
            for (std::size_t j = i; j < i + h; j++) {
                double a = c[j];
                double b = c[j + h];
                c[j] = a + b;
                c[j + h] = a - b;
            }
        }
    }
    std::vector<PauliTerm> terms;
    double scale = 1.0 / static_cast<double>(dim);
    for (std::size_t s = 0; s < dim; s++) {
        double coeff = c[s] * scale;
        if (std::abs(coeff) >= kPauliDropThreshold) {
            terms.push_back({s, coeff});
        }
    }
    std::stable_sort(terms.begin(), terms.end(), [](const PauliTerm &a, const PauliTerm &b) {
        if (a.weight() != b.weight()) {
            return a.weight() < b.weight();
        }
        return a.support() < b.support();
    });
    return terms;
}

std::vector<PauliTerm> pauli_expand(const DiagonalHamiltonian &h) {
    auto real = h.to_real();
    return pauli_expand(real);
}

std::vector<double> reconstruct_diagonal(std::span<const PauliTerm> terms, int num_qubits) {
    std::vector<double> out(std::size_t{1} << num_qubits, 0.0);
    for (std::size_t b = 0; b < out.size(); b++) {
        double acc = 0;
        for (const auto &t : terms) {
            acc += (std::popcount(b & t.mask) % 2 == 0) ? t.coefficient : -t.coefficient;
        }
        out[b] = acc;
    }
    return out;
}

int max_pauli_weight(std::span<const PauliTerm> terms) {
    int w = 0;
    for (const auto &t : terms) {
        if (t.coefficient != 0) {
            w = std::max(w, t.weight());
        }
    }
    return w;
}

nlohmann::json pauli_terms_to_json(std::span<const PauliTerm> terms) {
    auto out = nlohmann::json::array();
    for (const auto &t : terms) {
        out.push_back({{"support", t.support()}, {"coeff", t.coefficient}});
    }
    return out;
}

}  // namespace qfactor
