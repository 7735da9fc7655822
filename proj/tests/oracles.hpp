#pragma once

// Independent brute-force oracles used by the test suites. These stay
// deliberately dumb: dense enumeration and direct formula evaluation, no
// shared code with the implementation paths they check.

#include <cmath>
#include <functional>

#include <Eigen/Core>

namespace oracles {

using Eigen::Vector2d;
using Eigen::VectorXd;

// Support value of a 2-d body given only its gauge: enumerate boundary
// points x(theta) = dir(theta) / gauge(dir(theta)) on a dense angular grid.
inline double brute_support_2d(const std::function<double(const VectorXd&)>& gauge,
                               const VectorXd& c, int grid = 200000) {
    double best = -1e300;
    for (int k = 0; k < grid; ++k) {
        const double th = 2.0 * M_PI * k / grid;
        VectorXd dir(2);
        dir << std::cos(th), std::sin(th);
        best = std::max(best, c.dot(dir) / gauge(dir));
    }
    return best;
}

}  // namespace oracles
