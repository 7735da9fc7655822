#pragma once

#include <Eigen/Core>

namespace curvopt::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Eigen::VectorXd x;    // maximizer when Optimal
    double value = 0.0;   // objective value when Optimal
    Eigen::VectorXd ray;  // recession direction with c'ray > 0 when Unbounded
};

// Solves  max c'x  s.t.  A x <= b  with x free (unrestricted sign).
//
// Dense two-phase tableau simplex with Bland's rule, so the pivot sequence
// is deterministic and finite. Intended for the small systems that appear
// here (d <= ~10 variables, up to a few hundred rows).
Result maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c);

}  // namespace curvopt::lp
