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

#ifndef QFACTOR_INSTANCE_H
#define QFACTOR_INSTANCE_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qfactor {

/// Largest register size accepted. Solutions are found by exhaustive scan.
constexpr int kMaxQubits = 16;

/// Basis-state index into a 2^n dimensional register.
using BasisIndex = std::uint64_t;

struct RegisterSizes {
    int p_bits;
    int q_bits;

    bool operator==(const RegisterSizes &) const = default;
};

struct FactorPair {
    std::uint64_t p;
    std::uint64_t q;

    bool operator==(const FactorPair &) const = default;
};

/// A factorization problem N = p * q over odd p, q.
///
/// Qubit j < p_bits holds bit j of p' = (p - 1) / 2, qubit p_bits + k holds
/// bit k of q' = (q - 1) / 2. Bit j of a basis index is (b >> j) & 1.
struct ProblemInstance {
    std::uint64_t number;
    int p_bits;
    int q_bits;
    /// Sorted basis indices b with number == p(b) * q(b).
    std::vector<BasisIndex> solutions;

    int num_qubits() const {
        return p_bits + q_bits;
    }
    std::uint64_t dimension() const {
        return std::uint64_t{1} << num_qubits();
    }
    bool is_solution(BasisIndex b) const;
};

/// Register widths for p' and q'. Both bounds use the largest odd integer not
/// exceeding floor(sqrt(N)) and floor(N / 3) respectively.
///
/// Throws std::invalid_argument for even N, N < 9, or prime N.
RegisterSizes qubit_counts(std::uint64_t number);

FactorPair decode_state(BasisIndex b, const ProblemInstance &inst);

/// Exhaustive scan of all 2^n basis states. Throws std::domain_error if no
/// state factors the number.
std::vector<BasisIndex> enumerate_solutions(const ProblemInstance &inst);

/// x_0 x_1 ... x_{p_bits-1} y_0 ... y_{q_bits-1}, least significant bit of each
/// register first.
std::string state_to_string(BasisIndex b, const ProblemInstance &inst);

/// Validates the number, sizes the registers, and enumerates solutions.
ProblemInstance make_instance(std::uint64_t number);

/// The twelve semiprimes of the benchmark set, ascending.
std::span<const std::uint64_t> benchmark_numbers();

/// Binary string of `value` in `width` bits, most significant bit first.
std::string msb_first_bits(std::uint64_t value, int width);

}  // namespace qfactor

#endif
