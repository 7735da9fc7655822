#pragma once

#include "curvopt/body.hpp"

namespace curvopt {

// The curved companion K_t of a base body K with inscribed Euclidean
// radius r, defined through its gauge
//
//   ||x||_{K_t}^2 = (1 - t^2) ||x||_K^2 + t^2 (||x||_2 / r)^2,   t in [0, 1].
//
// K_t interpolates between K (t = 0) and the inscribed ball B(r) (t = 1),
// stays sandwiched B(r) subset K_t subset K, and is t^2/8-strongly convex
// with respect to itself.
class CurvedBody {
public:
    // Uses the exact inscribed radius of the base.
    CurvedBody(ConvexBody base, double t);
    // Explicit inscribed radius r (must satisfy 0 < r <= inscribed(base)).
    CurvedBody(ConvexBody base, double r, double t);

    const ConvexBody& base() const { return base_; }
    double inscribed_r() const { return r_; }
    double t() const { return t_; }
    int dim() const { return base_.dim(); }

    double gauge(const Vector& x) const;
    Vector gauge_subgradient(const Vector& x) const;  // throws ZeroPointError at 0

    // r_t = r and R_t = R(base): valid since B(r) subset K_t subset K.
    SandwichRadii sandwich_radii() const;

private:
    ConvexBody base_;
    double r_;
    double t_;
};

// Certificate of max{ <y, x> : x in K_t polar } computed by the three-step
// decomposition over U = sqrt(1-t^2) K° and V = t B(1/r):
//   u* in U maximizes <y, .>, v* = (t/r) y/|y|_2, and the concave
//   phi(alpha) = sqrt(1-alpha) A + sqrt(alpha) B (A = <y,u*>, B = <y,v*>)
//   peaks at alpha* = B^2/(A^2+B^2) with value sqrt(A^2+B^2).
// The value equals ||y||_{K_t}; that identity is the module's cross-check.
struct DecompositionCertificate {
    Vector u_star;
    Vector v_star;
    double alpha_star = 0.0;
    double value = 0.0;

    Vector combined_point() const;  // sqrt(1-a*) u* + sqrt(a*) v*, a point of K_t polar
};

DecompositionCertificate polar_decomposition_max(const CurvedBody& kt, const Vector& y);

enum class WeakOptStatus { Point, Empty };

// Result of delta-precision linear optimization: when status == Point,
// point lies in K_t + B(delta) (here exactly in K_t) and
// value >= max{ <c, x> : x in K_t - B(delta) } - delta, certified by the
// cutting-plane upper bound. Empty is part of the contract but never
// produced for a valid CurvedBody.
struct WeakOptResult {
    WeakOptStatus status = WeakOptStatus::Point;
    Vector point;
    double value = 0.0;
    double delta = 0.0;
    double achieved_gap = 0.0;  // certified UB - LB at exit
    int iterations = 0;
    bool converged = false;  // false means the iteration limit was hit
};

// Maximizes <c, .> over K_t with a Kelley cutting-plane scheme: the master
// LP optimizes over an outer polyhedron of gauge subgradient cuts
// <g, x> <= 1, each LP optimum is scaled radially onto the boundary for a
// lower bound, and the loop stops when the certified gap reaches delta.
WeakOptResult weak_optimize(const CurvedBody& kt, const Vector& c, double delta,
                            int max_iters = 600);

struct CurvingParameter {
    double t = 0.0;
    bool clamped = false;           // requested eps forced t^2 past 1
    bool degenerate_ratio = false;  // R == r, any t works
};

// t = sqrt(2 eps / ((R/r)^2 - 1)), the choice that guarantees
// K subset (1 + eps) K_t.
CurvingParameter choose_t_for_eps(double r, double R, double eps);

// Gauge of (1-t) C + t B(r) for the cube C = [-h, h]^dim: the rejected
// Minkowski-sum rounding. It softens corners instead of curving faces, so
// it keeps flat boundary pieces; tests use it as the negative example that
// must fail every 2-convexity claim.
class MinkowskiRoundedCube {
public:
    MinkowskiRoundedCube(int dim, double half_side, double r, double t);

    int dim() const { return dim_; }
    double inscribed_r() const;
    double circum_R() const;
    double gauge(const Vector& x) const;  // bisection on closed-form membership

private:
    int dim_;
    double half_side_;
    double r_;
    double t_;
};

}  // namespace curvopt
