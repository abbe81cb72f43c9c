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

#ifndef QFACTOR_OPTIMIZER_H
#define QFACTOR_OPTIMIZER_H

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace qfactor {

/// Returns f(x) and writes the gradient into `grad` (same length as x).
using Objective = std::function<double(std::span<const double> x, std::span<double> grad)>;
using ScalarFunction = std::function<double(std::span<const double> x)>;

struct MinimizeOptions {
    /// Stop once max_i |grad_i| falls below this.
    double gradient_tolerance = 1e-6;
    /// Stop once an accepted step lowers f by less than this.
    double improvement_tolerance = 1e-10;
    int max_iterations = 500;
    /// Sufficient-decrease and curvature constants of the strong Wolfe conditions.
    double armijo = 1e-4;
    double curvature = 0.9;
};

enum class StopReason { Gradient, Improvement, MaxIterations, LineSearchFailed };

std::string_view to_string(StopReason reason);

struct MinimizeResult {
    std::vector<double> x;
    double value = 0;
    int iterations = 0;
    /// Objective calls, each one returning a value and a gradient.
    int evaluations = 0;
    StopReason reason = StopReason::MaxIterations;

    bool converged() const {
        return reason == StopReason::Gradient || reason == StopReason::Improvement;
    }
};

/// Unconstrained BFGS with a strong-Wolfe line search. The returned value never
/// exceeds f(start).
MinimizeResult minimize_bfgs(const Objective &objective, std::vector<double> start, const MinimizeOptions &options = {});

/// Wraps a scalar function with a central-difference gradient of absolute step `step`.
/// Each call costs 2 * x.size() + 1 evaluations of `f`.
Objective central_difference_objective(ScalarFunction f, double step = 1e-6);

}  // namespace qfactor

#endif
