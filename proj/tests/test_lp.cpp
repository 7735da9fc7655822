#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Core>

#include "curvopt/lp.hpp"

using curvopt::lp::maximize;
using curvopt::lp::Status;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd cube_rows(int d) {
    MatrixXd rows = MatrixXd::Zero(2 * d, d);
    for (int i = 0; i < d; ++i) {
        rows(2 * i, i) = 1.0;
        rows(2 * i + 1, i) = -1.0;
    }
    return rows;
}

}  // namespace

TEST_CASE("cube support values") {
    MatrixXd A = cube_rows(2);
    VectorXd b = VectorXd::Ones(4);

    VectorXd c(2);
    c << 1.0, -2.0;
    auto res = maximize(A, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK(res.value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(res.x[0] == doctest::Approx(1.0));
    CHECK(res.x[1] == doctest::Approx(-1.0));

    c << 1.0, -0.1;
    res = maximize(A, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK(res.x[0] == doctest::Approx(1.0));
    CHECK(res.x[1] == doctest::Approx(-1.0));
}

TEST_CASE("degenerate right-hand side") {
    MatrixXd A(3, 2);
    A << 1, 0, 0, 1, 1, 1;
    VectorXd b(3);
    b << 1, 1, 0;
    VectorXd c(2);
    c << 1, 1;
    auto res = maximize(A, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK(res.value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("unbounded direction is reported with a ray") {
    MatrixXd A(1, 2);
    A << 1, 0;
    VectorXd b(1);
    b << 1;
    VectorXd c(2);
    c << 0, 1;
    auto res = maximize(A, b, c);
    REQUIRE(res.status == Status::Unbounded);
    CHECK(c.dot(res.ray) > 0.0);
    CHECK((A * res.ray).maxCoeff() <= 1e-9);
}

TEST_CASE("infeasible system goes through phase one") {
    MatrixXd A(2, 1);
    A << 1, -1;
    VectorXd b(2);
    b << -1, 0;  // x <= -1 and x >= 0
    VectorXd c(1);
    c << 1;
    auto res = maximize(A, b, c);
    CHECK(res.status == Status::Infeasible);
}

TEST_CASE("negative offsets that remain feasible") {
    // x >= 2 (as -x <= -2), x <= 5
    MatrixXd A(2, 1);
    A << -1, 1;
    VectorXd b(2);
    b << -2, 5;
    VectorXd c(1);
    c << -1;  // minimize x
    auto res = maximize(A, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK(res.x[0] == doctest::Approx(2.0));
}

TEST_CASE("optimum dominates sampled feasible points") {
    // Fixed irregular polytope in R^3.
    MatrixXd A(7, 3);
    A << 1, 2, 0.5,
        -1, 0.3, 0,
        0, -1, 1,
        0.2, 0, -1,
        -0.5, -0.5, -0.5,
        2, -1, 1,
        0, 1, 0;
    VectorXd b(7);
    b << 2, 1, 1.5, 1, 1, 3, 2;
    VectorXd c(3);
    c << 0.3, -1.2, 0.7;
    auto res = maximize(A, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK((A * res.x - b).maxCoeff() <= 1e-8);
    // Scaled feasible probes never beat the reported optimum.
    for (double s : {0.0, 0.1, 0.5, 0.9}) {
        VectorXd probe = s * res.x;
        CHECK(c.dot(probe) <= res.value + 1e-9);
    }
}
