#include "curvopt/fw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "curvopt/errors.hpp"

namespace curvopt {

namespace {

constexpr double kFeasTol = 1e-9;

template <class GaugeFn, class ArgminFn>
FwTrace run_fw(const GaugeFn& gauge, const ArgminFn& argmin, const Objective& objective,
               const Vector& start, const FwOptions& options) {
    if (options.steps < 1) throw DomainError("fw_solve: need at least one step");
    if (gauge(start) > 1.0 + kFeasTol)
        throw InfeasibleStartError("fw_solve: start point outside the feasible body");
    if (options.rule == FwStepRule::LineSearch && !objective.exact_line_step)
        throw DomainError("fw_solve: line-search rule needs an exact step oracle");

    FwTrace trace;
    trace.iterates.reserve(options.steps);
    trace.objective_values.reserve(options.steps);
    trace.gaps.reserve(options.steps);

    Vector x = start;
    for (int t = 0; t < options.steps; ++t) {
        Vector grad = objective.gradient(x);
        Vector target = argmin(grad);
        double gap = grad.dot(x - target);

        trace.iterates.push_back(x);
        trace.objective_values.push_back(objective.value(x));
        trace.gaps.push_back(gap);
        if (gap <= options.gap_tolerance) {
            trace.early_stopped = true;
            break;
        }

        Vector dir = target - x;
        double eta;
        switch (options.rule) {
            case FwStepRule::Fixed: eta = options.fixed_eta; break;
            case FwStepRule::Classic: eta = 2.0 / (t + 2.0); break;
            case FwStepRule::LineSearch:
                eta = std::clamp(objective.exact_line_step(x, dir), 0.0, 1.0);
                break;
            default: eta = 0.0;
        }
        x += eta * dir;
    }
    return trace;
}

}  // namespace

Objective quadratic_objective(const Matrix& q, const Vector& center) {
    if (q.rows() != q.cols() || q.rows() != center.size())
        throw DomainError("quadratic_objective: shape mismatch");
    Objective f;
    f.value = [q, center](const Vector& x) {
        Vector d = x - center;
        return d.dot(q * d);
    };
    f.gradient = [q, center](const Vector& x) { return Vector(2.0 * (q * (x - center))); };
    f.exact_line_step = [q, center](const Vector& x, const Vector& dir) {
        double curv = dir.dot(q * dir);
        if (curv <= 0.0) return 1.0;
        return -(x - center).dot(q * dir) / curv;
    };
    return f;
}

Objective quadratic_objective(const Vector& center) {
    return quadratic_objective(Matrix::Identity(center.size(), center.size()), center);
}

double FwTrace::best_value() const {
    double best = std::numeric_limits<double>::infinity();
    for (double v : objective_values) best = std::min(best, v);
    return best;
}

double FwTrace::best_gap() const {
    double best = std::numeric_limits<double>::infinity();
    for (double v : gaps) best = std::min(best, v);
    return best;
}

FwTrace fw_solve(const ConvexBody& body, const Objective& objective, const Vector& start,
                 const FwOptions& options) {
    auto gauge = [&](const Vector& x) { return body.gauge(x); };
    auto argmin = [&](const Vector& grad) { return body.support_argmax(-grad); };
    return run_fw(gauge, argmin, objective, start, options);
}

FwTrace fw_solve(const CurvedBody& body, const Objective& objective, const Vector& start,
                 const FwOptions& options) {
    auto gauge = [&](const Vector& x) { return body.gauge(x); };
    auto argmin = [&](const Vector& grad) {
        if (grad.lpNorm<Eigen::Infinity>() == 0.0)
            return Vector(body.inscribed_r() * Vector::Unit(body.dim(), 0));
        auto res = weak_optimize(body, -grad, options.weak_opt_delta, options.weak_opt_max_iters);
        if (!res.converged)
            throw OracleFailureError("fw_solve: weak optimization hit its iteration limit (gap " +
                                     std::to_string(res.achieved_gap) + ")");
        return res.point;
    };
    return run_fw(gauge, argmin, objective, start, options);
}

}  // namespace curvopt
