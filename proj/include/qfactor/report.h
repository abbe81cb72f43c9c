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

#ifndef QFACTOR_REPORT_H
#define QFACTOR_REPORT_H

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfactor/analysis.h"
#include "qfactor/training.h"

namespace qfactor {

constexpr int kSchemaVersion = 1;

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// Per-depth arrays "gammas", "betas", "cost", "fidelity", "n_iters", "n_evals"
/// plus run metadata. `gates_per_layer` is written alongside for plotting.
nlohmann::json run_record_to_json(const RunRecord &record, int gates_per_layer);

/// Throws std::invalid_argument on a schema mismatch or malformed payload.
RunRecord run_record_from_json(const nlohmann::json &j);

/// basis_index,display_string,energy,normalized_energy,is_solution
void write_spectrum_csv(std::ostream &out, const SpectrumReport &report, const ProblemInstance &inst);

/// A '#' metadata line with gamma_max, gamma0, beta0, cost0, then gamma,beta,cost rows.
void write_landscape_csv(std::ostream &out, const LandscapeScan &scan);

/// hamiltonian,weight_0,...,weight_4,two_qubit_per_layer
void write_gate_budget_csv(std::ostream &out, const std::vector<std::pair<std::string, GateBudget>> &rows);

/// number,n,p,q,p_prime,q_prime,n_p,n_q,p_bitstring,q_bitstring,solutions
void write_instance_table_csv(std::ostream &out, const std::vector<ProblemInstance> &instances);

}  // namespace qfactor

#endif
