#pragma once

#include <functional>
#include <vector>

#include "curvopt/body.hpp"
#include "curvopt/curved.hpp"

namespace curvopt {

// Convex objective with first-order access. exact_line_step, when present,
// returns the unclipped minimizer of eta -> f(x + eta d); the built-in
// quadratics provide it in closed form.
struct Objective {
    std::function<double(const Vector&)> value;
    std::function<Vector(const Vector&)> gradient;
    std::function<double(const Vector& x, const Vector& dir)> exact_line_step;
};

// f(x) = (x - center)' Q (x - center) with Q positive definite.
Objective quadratic_objective(const Matrix& q, const Vector& center);
// Squared Euclidean distance to center.
Objective quadratic_objective(const Vector& center);

enum class FwStepRule { Fixed, Classic, LineSearch };

struct FwOptions {
    int steps = 200;
    FwStepRule rule = FwStepRule::Classic;
    double fixed_eta = 0.1;         // Fixed rule only
    double gap_tolerance = 0.0;     // stop early once gap <= this
    double weak_opt_delta = 1e-6;   // curved-body oracle precision
    int weak_opt_max_iters = 600;
};

struct FwTrace {
    std::vector<Vector> iterates;
    std::vector<double> objective_values;
    std::vector<double> gaps;  // <grad f(x_t), x_t - x_tilde_t>, an upper
                               // bound on f(x_t) - f*
    bool early_stopped = false;

    double best_value() const;
    double best_gap() const;
};

// Frank-Wolfe over a base body: the linear subproblem is solved exactly by
// support_argmax on the negated gradient.
FwTrace fw_solve(const ConvexBody& body, const Objective& objective, const Vector& start,
                 const FwOptions& options);

// Frank-Wolfe over a curved body: the linear subproblem goes through
// weak_optimize; an oracle that fails to certify its gap aborts the solve.
FwTrace fw_solve(const CurvedBody& body, const Objective& objective, const Vector& start,
                 const FwOptions& options);

}  // namespace curvopt
