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

#include "qfactor/instance.h"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace qfactor {

namespace {

std::uint64_t odd_floor(std::uint64_t x) {
    return (x % 2 == 1) ? x : x - 1;
}

int bit_length(std::uint64_t x) {
    return static_cast<int>(std::bit_width(x));
}

bool is_prime(std::uint64_t x) {
    if (x < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= x; d++) {
        if (x % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t isqrt(std::uint64_t x) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= x) {
        r++;
    }
    return r;
}

constexpr std::array<std::uint64_t, 12> kBenchmark{15, 21, 25, 35, 39, 51, 77, 87, 95, 115, 119, 143};

}  // namespace

bool ProblemInstance::is_solution(BasisIndex b) const {
    return std::binary_search(solutions.begin(), solutions.end(), b);
}

RegisterSizes qubit_counts(std::uint64_t number) {
    if (number < 9) {
        throw std::invalid_argument("number must be at least 9, got " + std::to_string(number));
    }
    if (number % 2 == 0) {
        throw std::invalid_argument("number must be odd, got " + std::to_string(number));
    }
    if (is_prime(number)) {
        throw std::invalid_argument("number must be composite, got prime " + std::to_string(number));
    }
    RegisterSizes sizes{
        bit_length(odd_floor(isqrt(number))) - 1,
        bit_length(odd_floor(number / 3)) - 1,
    };
    if (sizes.p_bits + sizes.q_bits > kMaxQubits) {
        throw std::invalid_argument(
            "number " + std::to_string(number) + " needs " + std::to_string(sizes.p_bits + sizes.q_bits) +
            " qubits; at most " + std::to_string(kMaxQubits) + " are supported");
    }
    return sizes;
}

FactorPair decode_state(BasisIndex b, const ProblemInstance &inst) {
    std::uint64_t p_reg = b & ((std::uint64_t{1} << inst.p_bits) - 1);
    std::uint64_t q_reg = (b >> inst.p_bits) & ((std::uint64_t{1} << inst.q_bits) - 1);
    return {2 * p_reg + 1, 2 * q_reg + 1};
}

std::vector<BasisIndex> enumerate_solutions(const ProblemInstance &inst) {
    std::vector<BasisIndex> out;
    for (BasisIndex b = 0; b < inst.dimension(); b++) {
        auto [p, q] = decode_state(b, inst);
        if (p * q == inst.number) {
            out.push_back(b);
        }
    }
    if (out.empty()) {
        throw std::domain_error("no basis state factors " + std::to_string(inst.number));
    }
    return out;
}

std::string state_to_string(BasisIndex b, const ProblemInstance &inst) {
    std::string s(inst.num_qubits(), '0');
    for (int j = 0; j < inst.num_qubits(); j++) {
        if ((b >> j) & 1) {
            s[j] = '1';
        }
    }
    return s;
}

ProblemInstance make_instance(std::uint64_t number) {
    auto sizes = qubit_counts(number);
    ProblemInstance inst{number, sizes.p_bits, sizes.q_bits, {}};
    inst.solutions = enumerate_solutions(inst);
    return inst;
}

std::span<const std::uint64_t> benchmark_numbers() {
    return kBenchmark;
}

std::string msb_first_bits(std::uint64_t value, int width) {
    std::string s(width, '0');
    for (int j = 0; j < width; j++) {
        if ((value >> j) & 1) {
            s[width - 1 - j] = '1';
        }
    }
    return s;
}

}  // namespace qfactor
