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

#ifndef QFACTOR_TRAINING_H
#define QFACTOR_TRAINING_H

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "qfactor/optimizer.h"
#include "qfactor/simulator.h"

namespace qfactor {

enum class InitStrategy {
    /// gamma_{d+1} <- gamma_d, beta_{d+1} <- 0.
    ShiftHeuristic,
    /// Linear interpolation of the index-rescaled angle trajectories.
    Interpolation,
};

enum class GradientMethod { Adjoint, CentralDifference };

std::string_view to_string(InitStrategy strategy);
InitStrategy init_strategy_from_string(std::string_view name);
std::string_view to_string(GradientMethod method);

struct TrainSchedule {
    int max_depth = 40;
    InitStrategy init_strategy = InitStrategy::ShiftHeuristic;
    int scan_resolution = 64;
    GradientMethod gradient = GradientMethod::Adjoint;
    /// Absolute step of the central-difference gradient, in optimizer coordinates.
    double finite_difference_step = 1e-6;
    MinimizeOptions minimize;

    /// Throws std::invalid_argument unless 1 <= max_depth <= 200 and scan_resolution >= 8.
    void validate() const;
};

/// Depth-1 cost over gamma in (0, gamma_max] x beta in [0, pi].
struct LandscapeScan {
    int resolution = 0;
    double gamma_max = 0;
    double gamma0 = 0;
    double beta0 = 0;
    double cost0 = 0;
    /// gamma_i = gamma_max (i + 1) / resolution
    std::vector<double> gammas;
    /// beta_j = pi j / (resolution - 1)
    std::vector<double> betas;
    /// costs[i * resolution + j] at (gammas[i], betas[j]).
    std::vector<double> costs;
};

/// 2 pi / max_b |diag[b]|: the phase of the largest-magnitude eigenvalue folds
/// once over (0, gamma_max]. Throws std::invalid_argument on an all-zero diagonal.
double folding_gamma(std::span<const double> diag);

/// Exact cost ties keep the lowest gamma index, then the lowest beta index.
LandscapeScan landscape_scan(const QaoaModel &model, int resolution);

ParameterSet grow_parameters(const ParameterSet &prev, InitStrategy strategy);

struct ParameterFit {
    ParameterSet params;
    double cost = 0;
    int iterations = 0;
    int evaluations = 0;
    StopReason reason = StopReason::MaxIterations;

    bool converged() const {
        return reason == StopReason::Gradient || reason == StopReason::Improvement;
    }
};

/// BFGS over all 2d angles. The optimizer sees gamma * max|E| so that both
/// angle families have comparable scale; the result is in physical units.
ParameterFit minimize_parameters(const QaoaModel &model, const ParameterSet &start, const TrainSchedule &schedule);

struct DepthRecord {
    int depth = 0;
    ParameterSet params;
    double cost = 0;
    double fidelity = 0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

struct RunRecord {
    std::uint64_t number = 0;
    Protocol protocol = Protocol::Standard;
    InitStrategy init_strategy = InitStrategy::ShiftHeuristic;
    int scan_resolution = 0;
    double gamma_max = 0;
    double gamma0 = 0;
    double beta0 = 0;
    double initial_cost = 0;
    double initial_fidelity = 0;
    /// depths[k] holds depth k + 1.
    std::vector<DepthRecord> depths;

    bool operator==(const RunRecord &) const;
};

using DepthCallback = std::function<void(const DepthRecord &)>;

/// Scan, optimize at depth 1, then grow and jointly re-optimize up to max_depth.
RunRecord incremental_train(const QaoaModel &model, const TrainSchedule &schedule, const DepthCallback &on_depth = {});

}  // namespace qfactor

#endif
