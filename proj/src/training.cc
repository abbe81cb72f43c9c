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

#include "qfactor/training.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qfactor {

namespace {

double gamma_scale(const QaoaModel &model) {
    double m = 0;
    for (double e : model.evolution_diagonal()) {
        m = std::max(m, std::abs(e));
    }
    return m > 0 ? m : 1.0;
}

std::vector<double> interpolate(const std::vector<double> &v) {
    auto d = v.size();
    std::vector<double> out(d + 1);
    if (d == 1) {
        out[0] = out[1] = v[0];
        return out;
    }
    for (std::size_t k = 0; k <= d; k++) {
        double pos = static_cast<double>(k) * static_cast<double>(d - 1) / static_cast<double>(d);
        auto lo = std::min(static_cast<std::size_t>(pos), d - 2);
        double t = pos - static_cast<double>(lo);
        out[k] = (1 - t) * v[lo] + t * v[lo + 1];
    }
    out.front() = v.front();
    out.back() = v.back();
    return out;
}

bool same_params(const ParameterSet &a, const ParameterSet &b) {
    return a.gammas == b.gammas && a.betas == b.betas;
}

}  // namespace

std::string_view to_string(InitStrategy strategy) {
    switch (strategy) {
        case InitStrategy::ShiftHeuristic:
            return "shift_heuristic";
        case InitStrategy::Interpolation:
            return "interpolation";
    }
    throw std::logic_error("unknown InitStrategy");
}

InitStrategy init_strategy_from_string(std::string_view name) {
    if (name == "shift_heuristic" || name == "shift") {
        return InitStrategy::ShiftHeuristic;
    }
    if (name == "interpolation" || name == "interp") {
        return InitStrategy::Interpolation;
    }
    throw std::invalid_argument("unknown init strategy '" + std::string(name) + "'");
}

std::string_view to_string(GradientMethod method) {
    switch (method) {
        case GradientMethod::Adjoint:
            return "adjoint";
        case GradientMethod::CentralDifference:
            return "central_difference";
    }
    throw std::logic_error("unknown GradientMethod");
}

void TrainSchedule::validate() const {
    if (max_depth < 1 || max_depth > 200) {
        throw std::invalid_argument("max_depth must be in [1, 200], got " + std::to_string(max_depth));
    }
    if (scan_resolution < 8) {
        throw std::invalid_argument("scan_resolution must be at least 8, got " + std::to_string(scan_resolution));
    }
    if (!(finite_difference_step > 0)) {
        throw std::invalid_argument("finite_difference_step must be positive");
    }
}

double folding_gamma(std::span<const double> diag) {
    double m = 0;
    for (double e : diag) {
        m = std::max(m, std::abs(e));
    }
    if (m == 0) {
        throw std::invalid_argument("evolution diagonal is identically zero");
    }
    return 2 * std::numbers::pi / m;
}

LandscapeScan landscape_scan(const QaoaModel &model, int resolution) {
    if (resolution < 8) {
        throw std::invalid_argument("scan resolution must be at least 8, got " + std::to_string(resolution));
    }
    LandscapeScan scan;
    scan.resolution = resolution;
    scan.gamma_max = folding_gamma(model.evolution_diagonal());
    auto r = static_cast<std::size_t>(resolution);
    scan.gammas.resize(r);
    scan.betas.resize(r);
    for (std::size_t i = 0; i < r; i++) {
        scan.gammas[i] = scan.gamma_max * static_cast<double>(i + 1) / static_cast<double>(r);
        scan.betas[i] = std::numbers::pi * static_cast<double>(i) / static_cast<double>(r - 1);
    }
    scan.costs.resize(r * r);
    std::size_t best = 0;
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t j = 0; j < r; j++) {
            double c = model.cost({{scan.gammas[i]}, {scan.betas[j]}});
            scan.costs[i * r + j] = c;
            if (c < scan.costs[best]) {
                best = i * r + j;
            }
        }
    }
    scan.gamma0 = scan.gammas[best / r];
    scan.beta0 = scan.betas[best % r];
    scan.cost0 = scan.costs[best];
    return scan;
}

ParameterSet grow_parameters(const ParameterSet &prev, InitStrategy strategy) {
    if (prev.depth() == 0 || prev.gammas.size() != prev.betas.size()) {
        throw std::invalid_argument("grow_parameters needs a well-formed set of depth >= 1");
    }
    if (strategy == InitStrategy::ShiftHeuristic) {
        ParameterSet next = prev;
        next.gammas.push_back(prev.gammas.back());
        next.betas.push_back(0.0);
        return next;
    }
    return {interpolate(prev.gammas), interpolate(prev.betas)};
}

ParameterFit minimize_parameters(const QaoaModel &model, const ParameterSet &start, const TrainSchedule &schedule) {
    const double scale = gamma_scale(model);
    const std::size_t d = start.depth();
    auto to_physical = [&](std::span<const double> x) {
        ParameterSet p = ParameterSet::unflatten(x);
        for (auto &g : p.gammas) {
            g /= scale;
        }
        return p;
    };

    Objective objective;
    if (schedule.gradient == GradientMethod::Adjoint) {
        objective = [&](std::span<const double> x, std::span<double> grad) {
            ParameterSet g;
            double value = model.cost_and_gradient(to_physical(x), g);
            for (std::size_t i = 0; i < d; i++) {
                grad[i] = g.gammas[i] / scale;
                grad[d + i] = g.betas[i];
            }
            return value;
        };
    } else {
        objective = central_difference_objective(
            [&](std::span<const double> x) { return model.cost(to_physical(x)); }, schedule.finite_difference_step);
    }

    std::vector<double> x0 = start.flatten();
    for (std::size_t i = 0; i < d; i++) {
        x0[i] *= scale;
    }
    auto res = minimize_bfgs(objective, std::move(x0), schedule.minimize);
    return {to_physical(res.x), res.value, res.iterations, res.evaluations, res.reason};
}

bool RunRecord::operator==(const RunRecord &o) const {
    if (number != o.number || protocol != o.protocol || init_strategy != o.init_strategy || scan_resolution != o.scan_resolution ||
        gamma_max != o.gamma_max || gamma0 != o.gamma0 || beta0 != o.beta0 || initial_cost != o.initial_cost ||
        initial_fidelity != o.initial_fidelity || depths.size() != o.depths.size()) {
        return false;
    }
    for (std::size_t k = 0; k < depths.size(); k++) {
        const auto &a = depths[k];
        const auto &b = o.depths[k];
        if (a.depth != b.depth || !same_params(a.params, b.params) || a.cost != b.cost || a.fidelity != b.fidelity ||
            a.iterations != b.iterations || a.evaluations != b.evaluations || a.converged != b.converged) {
            return false;
        }
    }
    return true;
}

RunRecord incremental_train(const QaoaModel &model, const TrainSchedule &schedule, const DepthCallback &on_depth) {
    schedule.validate();
    RunRecord record;
    record.number = model.instance().number;
    record.protocol = model.config().protocol;
    record.init_strategy = schedule.init_strategy;
    record.scan_resolution = schedule.scan_resolution;

    auto psi0 = model.initial();
    record.initial_cost = expectation(psi0, model.cost_diagonal());
    record.initial_fidelity = fidelity(psi0, model.instance());

    auto scan = landscape_scan(model, schedule.scan_resolution);
    record.gamma_max = scan.gamma_max;
    record.gamma0 = scan.gamma0;
    record.beta0 = scan.beta0;

    ParameterSet start{{scan.gamma0}, {scan.beta0}};
    for (int depth = 1; depth <= schedule.max_depth; depth++) {
        if (depth > 1) {
            start = grow_parameters(record.depths.back().params, schedule.init_strategy);
        }
        auto fit = minimize_parameters(model, start, schedule);
        DepthRecord rec;
        rec.depth = depth;
        rec.params = std::move(fit.params);
        rec.cost = fit.cost;
        rec.fidelity = fidelity(model.state(rec.params), model.instance());
        rec.iterations = fit.iterations;
        rec.evaluations = fit.evaluations;
        rec.converged = fit.converged();
        record.depths.push_back(std::move(rec));
        if (on_depth) {
            on_depth(record.depths.back());
        }
    }
    return record;
}

}  // namespace qfactor
