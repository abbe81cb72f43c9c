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

#include "qfactor/optimizer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qfactor {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        acc += a[i] * b[i];
    }
    return acc;
}

double max_abs(std::span<const double> v) {
    double m = 0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

struct Point {
    double alpha = 0;
    std::vector<double> x;
    double f = 0;
    std::vector<double> g;
    double slope = 0;
};

class LineSearch {
   public:
    LineSearch(const Objective &objective, const MinimizeOptions &options, const Point &origin, std::span<const double> dir, int &evaluations)
        : objective_(objective), options_(options), origin_(origin), dir_(dir), evaluations_(evaluations) {
    }

    /// Returns a point satisfying the strong Wolfe conditions, or the best
    /// sufficient-decrease point seen, or nothing.
    bool run(double alpha, Point &out) {
        Point prev = origin_;
        prev.alpha = 0;
        for (int i = 0; i < kMaxSteps; i++) {
            Point cur = eval(alpha);
            if (!std::isfinite(cur.f) || cur.f > origin_.f + options_.armijo * alpha * origin_.slope || (i > 0 && cur.f >= prev.f)) {
                return zoom(prev, cur, out);
            }
            if (std::abs(cur.slope) <= -options_.curvature * origin_.slope) {
                out = std::move(cur);
                return true;
            }
            if (cur.slope >= 0) {
                return zoom(cur, prev, out);
            }
            prev = std::move(cur);
            alpha *= 2;
        }
        return fallback(prev, out);
    }

   private:
    static constexpr int kMaxSteps = 40;

    Point eval(double alpha) {
        Point p;
        p.alpha = alpha;
        p.x.resize(origin_.x.size());
        for (std::size_t i = 0; i < p.x.size(); i++) {
            p.x[i] = origin_.x[i] + alpha * dir_[i];
        }
        p.g.assign(p.x.size(), 0.0);
        p.f = objective_(p.x, p.g);
        p.slope = dot(p.g, dir_);
        evaluations_++;
        return p;
    }

    bool fallback(Point &best, Point &out) {
        if (best.alpha > 0 && best.f < origin_.f) {
            out = std::move(best);
            return true;
        }
        return false;
    }

    static double cubic_minimizer(const Point &a, const Point &b) {
        double d1 = a.slope + b.slope - 3 * (a.f - b.f) / (a.alpha - b.alpha);
        double disc = d1 * d1 - a.slope * b.slope;
        if (disc < 0) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        double d2 = std::copysign(std::sqrt(disc), b.alpha - a.alpha);
        return b.alpha - (b.alpha - a.alpha) * (b.slope + d2 - d1) / (b.slope - a.slope + 2 * d2);
    }

    bool zoom(Point lo, Point hi, Point &out) {
        for (int i = 0; i < kMaxSteps; i++) {
            double width = hi.alpha - lo.alpha;
            if (std::abs(width) <= 1e-14 * std::max(1.0, std::abs(lo.alpha))) {
                break;
            }
            double a = std::min(lo.alpha, hi.alpha);
            double b = std::max(lo.alpha, hi.alpha);
            double margin = 0.1 * (b - a);
            double alpha = std::isfinite(hi.f) ? cubic_minimizer(lo, hi) : std::numeric_limits<double>::quiet_NaN();
            if (!std::isfinite(alpha) || alpha < a + margin || alpha > b - margin) {
                alpha = 0.5 * (a + b);
            }
            Point cur = eval(alpha);
            if (!std::isfinite(cur.f) || cur.f > origin_.f + options_.armijo * alpha * origin_.slope || cur.f >= lo.f) {
                hi = std::move(cur);
                continue;
            }
            if (std::abs(cur.slope) <= -options_.curvature * origin_.slope) {
                out = std::move(cur);
                return true;
            }
            if (cur.slope * (hi.alpha - lo.alpha) >= 0) {
                hi = std::move(lo);
            }
            lo = std::move(cur);
        }
        return fallback(lo, out);
    }

    const Objective &objective_;
    const MinimizeOptions &options_;
    const Point &origin_;
    std::span<const double> dir_;
    int &evaluations_;
};

}  // namespace

std::string_view to_string(StopReason reason) {
    switch (reason) {
        case StopReason::Gradient:
            return "gradient";
        case StopReason::Improvement:
            return "improvement";
        case StopReason::MaxIterations:
            return "max_iterations";
        case StopReason::LineSearchFailed:
            return "line_search_failed";
    }
    throw std::logic_error("unknown StopReason");
}

MinimizeResult minimize_bfgs(const Objective &objective, std::vector<double> start, const MinimizeOptions &options) {
    const std::size_t dim = start.size();
    MinimizeResult result;
    Point cur;
    cur.x = std::move(start);
    cur.g.assign(dim, 0.0);
    cur.f = objective(cur.x, cur.g);
    result.evaluations = 1;

    // Inverse Hessian approximation, row-major.
    std::vector<double> inv_h(dim * dim, 0.0);
    auto reset_identity = [&](double scale) {
        std::fill(inv_h.begin(), inv_h.end(), 0.0);
        for (std::size_t i = 0; i < dim; i++) {
            inv_h[i * dim + i] = scale;
        }
    };
    reset_identity(1.0);
    bool identity = true;

    std::vector<double> dir(dim), s(dim), y(dim), hy(dim);
    while (true) {
        if (dim == 0 || max_abs(cur.g) < options.gradient_tolerance) {
            result.reason = StopReason::Gradient;
            break;
        }
        if (result.iterations >= options.max_iterations) {
            result.reason = StopReason::MaxIterations;
            break;
        }
        for (std::size_t i = 0; i < dim; i++) {
            double acc = 0;
            for (std::size_t j = 0; j < dim; j++) {
                acc -= inv_h[i * dim + j] * cur.g[j];
            }
            dir[i] = acc;
        }
        cur.slope = dot(cur.g, dir);
        if (!(cur.slope < 0)) {
            reset_identity(1.0);
            identity = true;
            for (std::size_t i = 0; i < dim; i++) {
                dir[i] = -cur.g[i];
            }
            cur.slope = dot(cur.g, dir);
        }

        double alpha = 1.0;
        if (identity) {
            alpha = std::min(1.0, 1.0 / std::sqrt(dot(cur.g, cur.g)));
        }
        Point next;
        LineSearch search(objective, options, cur, dir, result.evaluations);
        if (!search.run(alpha, next)) {
            if (!identity) {
                reset_identity(1.0);
                identity = true;
                continue;
            }
            result.reason = StopReason::LineSearchFailed;
            break;
        }
        result.iterations++;

        for (std::size_t i = 0; i < dim; i++) {
            s[i] = next.x[i] - cur.x[i];
            y[i] = next.g[i] - cur.g[i];
        }
        double improvement = cur.f - next.f;
        cur = std::move(next);

        double sy = dot(s, y);
        double yy = dot(y, y);
        if (sy > 1e-12 * std::sqrt(dot(s, s) * yy)) {
            if (identity) {
                reset_identity(sy / yy);
            }
            identity = false;
            // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
            double rho = 1.0 / sy;
            for (std::size_t i = 0; i < dim; i++) {
                double acc = 0;
                for (std::size_t j = 0; j < dim; j++) {
                    acc += inv_h[i * dim + j] * y[j];
                }
                hy[i] = acc;
            }
            double yhy = dot(y, hy);
            for (std::size_t i = 0; i < dim; i++) {
                for (std::size_t j = 0; j < dim; j++) {
                    inv_h[i * dim + j] += rho * ((1 + rho * yhy) * s[i] * s[j] - hy[i] * s[j] - s[i] * hy[j]);
                }
            }
        }

        if (improvement < options.improvement_tolerance) {
            result.reason = StopReason::Improvement;
            break;
        }
    }
    result.x = std::move(cur.x);
    result.value = cur.f;
    return result;
}

Objective central_difference_objective(ScalarFunction f, double step) {
    if (!(step > 0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    return [f = std::move(f), step](std::span<const double> x, std::span<double> grad) {
        std::vector<double> probe(x.begin(), x.end());
        for (std::size_t i = 0; i < probe.size(); i++) {
            double orig = probe[i];
            probe[i] = orig + step;
            double up = f(probe);
            probe[i] = orig - step;
            double down = f(probe);
            probe[i] = orig;
            grad[i] = (up - down) / (2 * step);
        }
        return f(x);
    };
}

}  // namespace qfactor
