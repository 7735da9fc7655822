#include "curvopt/curved.hpp"

#include <cmath>
#include <vector>

#include "curvopt/errors.hpp"
#include "curvopt/lp.hpp"

namespace curvopt {

namespace {

void validate_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("curved body: t must lie in [0, 1]");
}

}  // namespace

CurvedBody::CurvedBody(ConvexBody base, double t)
    : base_(std::move(base)), r_(base_.sandwich_radii().r), t_(t) {
    validate_t(t);
}

CurvedBody::CurvedBody(ConvexBody base, double r, double t)
    : base_(std::move(base)), r_(r), t_(t) {
    validate_t(t);
    if (!(r > 0.0)) throw DomainError("curved body: r must be positive");
    if (r > base_.sandwich_radii().r + 1e-9)
        throw DomainError("curved body: r exceeds the inscribed radius of the base");
}

double CurvedBody::gauge(const Vector& x) const {
    if (t_ == 0.0) return base_.gauge(x);
    const double euclid = x.norm() / r_;
    if (t_ == 1.0) return euclid;
    const double g = base_.gauge(x);
    return std::sqrt((1.0 - t_ * t_) * g * g + t_ * t_ * euclid * euclid);
}

Vector CurvedBody::gauge_subgradient(const Vector& x) const {
    if (x.size() != dim()) throw DomainError("curved gauge_subgradient: dimension mismatch");
    if (x.norm() == 0.0) throw ZeroPointError("curved gauge_subgradient undefined at x = 0");
    if (t_ == 0.0) return base_.gauge_subgradient(x);
    if (t_ == 1.0) return x / (r_ * x.norm());
    const double g = base_.gauge(x);
    const double total = gauge(x);
    Vector num = (1.0 - t_ * t_) * g * base_.gauge_subgradient(x) + (t_ * t_ / (r_ * r_)) * x;
    return num / total;
}

SandwichRadii CurvedBody::sandwich_radii() const { return {r_, base_.sandwich_radii().R}; }

Vector DecompositionCertificate::combined_point() const {
    return std::sqrt(1.0 - alpha_star) * u_star + std::sqrt(alpha_star) * v_star;
}

DecompositionCertificate polar_decomposition_max(const CurvedBody& kt, const Vector& y) {
    if (y.size() != kt.dim()) throw DomainError("polar_decomposition_max: dimension mismatch");
    if (y.norm() == 0.0) throw ZeroPointError("polar_decomposition_max undefined at y = 0");
    const double t = kt.t();
    const double scale_u = std::sqrt(std::max(0.0, 1.0 - t * t));

    DecompositionCertificate cert;
    // Step 1: the maximizer of <y, .> over K° is a gauge subgradient at y.
    cert.u_star = scale_u * kt.base().gauge_subgradient(y);
    // Step 2: V = t B(1/r) has the explicit maximizer along y.
    cert.v_star = (t / kt.inscribed_r()) * y / y.norm();

    const double a = y.dot(cert.u_star);
    const double b = y.dot(cert.v_star);
    const double sq = a * a + b * b;
    cert.alpha_star = sq > 0.0 ? b * b / sq : 0.0;
    cert.value = std::sqrt(sq);
    return cert;
}

WeakOptResult weak_optimize(const CurvedBody& kt, const Vector& c, double delta, int max_iters) {
    if (!(delta > 0.0)) throw DomainError("weak_optimize: delta must be positive");
    if (c.size() != kt.dim()) throw DomainError("weak_optimize: dimension mismatch");
    const int d = kt.dim();

    WeakOptResult res;
    res.delta = delta;

    if (c.lpNorm<Eigen::Infinity>() == 0.0) {
        // Degenerate objective: any feasible point is optimal.
        res.point = kt.inscribed_r() * Vector::Unit(d, 0);
        res.value = 0.0;
        res.converged = true;
        return res;
    }

    // Outer approximation by subgradient cuts <g, x> <= 1. Each g satisfies
    // <g, x> <= ||x||_{K_t}, so every cut is valid for K_t.
    std::vector<Vector> cuts;
    cuts.reserve(2 * d + 2);
    for (int i = 0; i < d; ++i) {
        cuts.push_back(kt.gauge_subgradient(Vector::Unit(d, i)));
        cuts.push_back(kt.gauge_subgradient(-Vector::Unit(d, i)));
    }
    cuts.push_back(kt.gauge_subgradient(c));

    // Feasible warm start on the boundary along c.
    res.point = c / kt.gauge(c);
    double lower = c.dot(res.point);
    double upper = std::numeric_limits<double>::infinity();
    res.achieved_gap = std::numeric_limits<double>::infinity();

    auto solve_master = [&]() {
        Matrix a(static_cast<int>(cuts.size()), d);
        for (size_t i = 0; i < cuts.size(); ++i) a.row(static_cast<int>(i)) = cuts[i];
        return lp::maximize(a, Vector::Ones(a.rows()), c);
    };

    for (int iter = 1; iter <= max_iters; ++iter) {
        res.iterations = iter;
        auto master = solve_master();
        if (master.status == lp::Status::Unbounded) {
            // Kill the recession direction with a cut at its boundary point.
            cuts.push_back(kt.gauge_subgradient(master.ray));
            continue;
        }
        upper = master.value;

        const double g = kt.gauge(master.x);
        if (!(g > 0.0)) break;  // only possible if c ~ 0, handled above
        const double scaled_value = c.dot(master.x) / g;
        if (scaled_value > lower) {
            lower = scaled_value;
            res.point = master.x / g;
        }
        res.achieved_gap = upper - lower;
        if (res.achieved_gap <= delta) {
            res.converged = true;
            break;
        }
        cuts.push_back(kt.gauge_subgradient(master.x));
    }

    res.value = lower;
    return res;
}

CurvingParameter choose_t_for_eps(double r, double R, double eps) {
    if (!(r > 0.0) || !(R >= r)) throw DomainError("choose_t_for_eps: need R >= r > 0");
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("choose_t_for_eps: eps must lie in (0, 1)");
    CurvingParameter out;
    const double ratio2 = (R / r) * (R / r) - 1.0;
    if (ratio2 <= 0.0) {
        out.degenerate_ratio = true;  // K is already a ball, any t works
        return out;
    }
    const double t2 = 2.0 * eps / ratio2;
    if (t2 > 1.0) {
        out.t = 1.0;
        out.clamped = true;
    } else {
        out.t = std::sqrt(t2);
    }
    return out;
}

MinkowskiRoundedCube::MinkowskiRoundedCube(int dim, double half_side, double r, double t)
    : dim_(dim), half_side_(half_side), r_(r), t_(t) {
    if (dim < 1) throw DomainError("minkowski rounded cube: dimension must be >= 1");
    if (!(half_side > 0.0) || !(r > 0.0)) throw DomainError("minkowski rounded cube: bad size");
    if (r > half_side + 1e-12)
        throw DomainError("minkowski rounded cube: r exceeds the cube inscribed radius");
    validate_t(t);
}

double MinkowskiRoundedCube::inscribed_r() const { return (1.0 - t_) * half_side_ + t_ * r_; }

double MinkowskiRoundedCube::circum_R() const {
    return (1.0 - t_) * half_side_ * std::sqrt(static_cast<double>(dim_)) + t_ * r_;
}

double MinkowskiRoundedCube::gauge(const Vector& x) const {
    if (x.size() != dim_) throw DomainError("minkowski rounded cube gauge: dimension mismatch");
    const double nx = x.norm();
    if (nx == 0.0) return 0.0;
    // x in lam K' iff dist_2(x, lam (1-t) cube) <= lam t r; the distance to
    // a centered cube is the norm of the positive parts of |x_i| - side.
    auto inside = [&](double lam) {
        double side = lam * (1.0 - t_) * half_side_;
        double sq = 0.0;
        for (int i = 0; i < dim_; ++i) {
            double over = std::abs(x[i]) - side;
            if (over > 0.0) sq += over * over;
        }
        return std::sqrt(sq) <= lam * t_ * r_ + 1e-15;
    };
    double lo = nx / circum_R();
    double hi = nx / inscribed_r();
    if (inside(lo)) return lo;
    for (int it = 0; it < 100 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (inside(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace curvopt
