#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "curvopt/body.hpp"
#include "curvopt/curved.hpp"
#include "curvopt/errors.hpp"
#include "curvopt/rng.hpp"
#include "oracles.hpp"

using namespace curvopt;

namespace {

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

std::vector<CurvedBody> curved_zoo() {
    std::vector<CurvedBody> zoo;
    zoo.emplace_back(ConvexBody::cube(2), 0.5);
    zoo.emplace_back(ConvexBody::cube(3), 0.9);
    zoo.emplace_back(ConvexBody::ball(2, 1.0), 0.3);
    Matrix a(2, 2);
    a << 4, 0, 0, 1;
    zoo.emplace_back(ConvexBody::ellipsoid(a), 0.6);
    zoo.emplace_back(ConvexBody::lp_ball(3, 1.0, 1.0), 0.4);
    zoo.emplace_back(ConvexBody::cross_polytope(2), 0.7);
    zoo.emplace_back(ConvexBody::vertex_polytope({vec2(1, 0), vec2(0, 1), vec2(-1, -1)}), 0.5);
    return zoo;
}

}  // namespace

TEST_CASE("curved gauge closed form and endpoints") {
    CurvedBody kt(ConvexBody::cube(2), 1.0, 0.5);
    CHECK(kt.gauge(vec2(1, 1)) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-12));

    RngStream rng(3, 0);
    for (const auto& body : curved_zoo()) {
        CurvedBody k0(body.base(), body.inscribed_r(), 0.0);
        CurvedBody k1(body.base(), body.inscribed_r(), 1.0);
        for (int i = 0; i < 60; ++i) {
            Vector x = rng.normal_vector(body.dim());
            CHECK(k0.gauge(x) == doctest::Approx(body.base().gauge(x)).epsilon(1e-12));
            CHECK(k1.gauge(x) ==
                  doctest::Approx(x.norm() / body.inscribed_r()).epsilon(1e-12));
            // pointwise identity against the defining combination
            double g = body.base().gauge(x);
            double e = x.norm() / body.inscribed_r();
            double t = body.t();
            double expected = std::sqrt((1 - t * t) * g * g + t * t * e * e);
            CHECK(body.gauge(x) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("curved gauge subgradient") {
    Vector x(2);
    x << 3, 4;
    CurvedBody pure_ball(ConvexBody::cube(2), 1.0, 1.0);
    Vector g = pure_ball.gauge_subgradient(x);
    CHECK(g[0] == doctest::Approx(0.6));
    CHECK(g[1] == doctest::Approx(0.8));

    CurvedBody half(ConvexBody::cube(2), 1.0, 0.5);
    g = half.gauge_subgradient(vec2(1, 0));
    CHECK(g[0] == doctest::Approx(1.0));
    CHECK(g[1] == doctest::Approx(0.0));

    CHECK_THROWS_AS(half.gauge_subgradient(Vector::Zero(2)), ZeroPointError);

    RngStream rng(5, 0);
    for (const auto& body : curved_zoo()) {
        for (int i = 0; i < 80; ++i) {
            Vector u = rng.normal_vector(body.dim());
            if (u.norm() < 1e-9) continue;
            Vector v = rng.normal_vector(body.dim());
            Vector sub = body.gauge_subgradient(u);
            CHECK(std::abs(sub.dot(u) - body.gauge(u)) <= 1e-9 * (1.0 + body.gauge(u)));
            CHECK(body.gauge(v) >= body.gauge(u) + sub.dot(v - u) - 1e-8);
        }
    }
}

TEST_CASE("sandwich inequalities of the curving theorem") {
    RngStream rng(7, 0);
    for (const auto& body : curved_zoo()) {
        auto sw = body.base().sandwich_radii();
        const double multiplier =
            std::sqrt(1.0 + ((sw.R / body.inscribed_r()) * (sw.R / body.inscribed_r()) - 1.0) *
                                body.t() * body.t());
        for (int i = 0; i < 200; ++i) {
            Vector x = rng.normal_vector(body.dim()) * std::exp(rng.uniform(-1.0, 1.0));
            double base_g = body.base().gauge(x);
            double curved_g = body.gauge(x);
            double ball_g = x.norm() / body.inscribed_r();
            CHECK(base_g <= curved_g + 1e-9 * (1.0 + curved_g));
            CHECK(curved_g <= ball_g + 1e-9 * (1.0 + ball_g));
            CHECK(curved_g <= multiplier * base_g + 1e-9 * (1.0 + multiplier * base_g));
        }
    }
}

TEST_CASE("decomposition certificate matches the curved gauge") {
    // Ball base: K_t is the ball itself for every t.
    for (double t : {0.0, 0.3, 0.8, 1.0}) {
        CurvedBody kt(ConvexBody::ball(2, 1.0), 1.0, t);
        auto cert = polar_decomposition_max(kt, vec2(1, 0));
        CHECK(cert.value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cert.value == doctest::Approx(kt.gauge(vec2(1, 0))).epsilon(1e-12));
    }

    // Worked cube example: A = sqrt(0.75), B = 0.5 sqrt(2).
    CurvedBody half(ConvexBody::cube(2), 1.0, 0.5);
    auto cert = polar_decomposition_max(half, vec2(1, 1));
    CHECK(vec2(1, 1).dot(cert.u_star) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
    CHECK(vec2(1, 1).dot(cert.v_star) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(cert.value == doctest::Approx(std::sqrt(1.25)).epsilon(1e-12));

    // Endpoint t = 0 reduces to step 1 alone.
    CurvedBody flat(ConvexBody::cube(2), 1.0, 0.0);
    cert = polar_decomposition_max(flat, Vector::Unit(2, 0));
    CHECK(cert.alpha_star == doctest::Approx(0.0));
    CHECK(cert.value == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(polar_decomposition_max(flat, Vector::Zero(2)), ZeroPointError);

    RngStream rng(13, 0);
    for (const auto& body : curved_zoo()) {
        const double t = body.t();
        for (int i = 0; i < 300; ++i) {
            Vector y = rng.normal_vector(body.dim()) * std::exp(rng.uniform(-1.5, 1.5));
            if (y.norm() < 1e-9) continue;
            auto c = polar_decomposition_max(body, y);
            CHECK(std::abs(c.value - body.gauge(y)) <= 1e-9 * (1.0 + c.value));
            CHECK(c.alpha_star >= 0.0);
            CHECK(c.alpha_star <= 1.0);
            // u*/sqrt(1-t^2) lies in the polar of the base.
            if (t < 1.0) {
                Vector u = c.u_star / std::sqrt(1.0 - t * t);
                CHECK(body.base().support(u) <= 1.0 + 1e-8);
            }
            CHECK(c.v_star.norm() == doctest::Approx(t / body.inscribed_r()).epsilon(1e-12));
        }
    }
}

TEST_CASE("decomposition combined point lies in the polar of K_t (2d oracle)") {
    RngStream rng(17, 0);
    for (double t : {0.25, 0.5, 0.9}) {
        CurvedBody kt(ConvexBody::cube(2), 1.0, t);
        auto gauge_fn = [&](const Vector& v) { return kt.gauge(v); };
        for (int i = 0; i < 12; ++i) {
            Vector y = rng.normal_vector(2);
            if (y.norm() < 1e-9) continue;
            Vector z = polar_decomposition_max(kt, y).combined_point();
            // gauge of the polar at z = sigma_{K_t}(z)
            CHECK(oracles::brute_support_2d(gauge_fn, z) <= 1.0 + 1e-8);
        }
    }
}

TEST_CASE("weak optimization over curved bodies") {
    // Ball base: optimum is the north pole for any t.
    CurvedBody ball(ConvexBody::ball(2, 1.0), 1.0, 0.4);
    auto res = weak_optimize(ball, vec2(0, 1), 1e-4);
    REQUIRE(res.status == WeakOptStatus::Point);
    CHECK(res.converged);
    CHECK(res.value == doctest::Approx(1.0).epsilon(2e-4));
    CHECK(res.point[1] == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(ball.gauge(res.point) <= 1.0 + 1e-9);

    // t = 0: the value reduces to the base support function.
    CurvedBody flat(ConvexBody::cube(2), 1.0, 0.0);
    res = weak_optimize(flat, vec2(1, -2), 1e-6);
    CHECK(res.converged);
    CHECK(res.value == doctest::Approx(3.0).epsilon(1e-5));

    // Brute-force agreement on the curved square.
    CurvedBody half(ConvexBody::cube(2), 1.0, 0.5);
    auto gauge_fn = [&](const Vector& v) { return half.gauge(v); };
    RngStream rng(19, 0);
    for (int i = 0; i < 25; ++i) {
        Vector c = rng.unit_vector(2) * std::exp(rng.uniform(-0.5, 1.0));
        auto r = weak_optimize(half, c, 1e-4);
        REQUIRE(r.converged);
        double ref = oracles::brute_support_2d(gauge_fn, c);
        CHECK(std::abs(r.value - ref) <= 2e-4);
        CHECK(half.gauge(r.point) <= 1.0 + 1e-9);
    }

    // Iteration starvation reports the achieved gap instead of lying.
    auto starved = weak_optimize(half, vec2(1, 0.7), 1e-12, 1);
    CHECK_FALSE(starved.converged);
    CHECK(starved.achieved_gap > 1e-12);
    CHECK(half.gauge(starved.point) <= 1.0 + 1e-9);

    CHECK_THROWS_AS(weak_optimize(half, vec2(1, 0), 0.0), DomainError);
}

TEST_CASE("t selection for a target approximation factor") {
    auto sel = choose_t_for_eps(1.0, std::sqrt(2.0), 0.1);
    CHECK(sel.t == doctest::Approx(std::sqrt(0.2)).epsilon(1e-12));
    CHECK_FALSE(sel.clamped);
    CHECK_FALSE(sel.degenerate_ratio);

    CHECK(choose_t_for_eps(1.0, std::sqrt(2.0), 1e-9).t == doctest::Approx(0.0).epsilon(1e-4));

    sel = choose_t_for_eps(1.0, 1.0, 0.5);
    CHECK(sel.degenerate_ratio);
    CHECK(sel.t == 0.0);

    // eps large relative to the sandwich ratio clamps t at 1.
    sel = choose_t_for_eps(1.0, 1.05, 0.9);
    CHECK(sel.clamped);
    CHECK(sel.t == 1.0);

    CHECK_THROWS_AS(choose_t_for_eps(1.0, 2.0, 0.0), DomainError);
    CHECK_THROWS_AS(choose_t_for_eps(0.0, 2.0, 0.5), DomainError);

    // The chosen t actually delivers K subset (1+eps) K_t on the square.
    RngStream rng(23, 0);
    for (double eps : {0.05, 0.1, 0.3}) {
        auto body = ConvexBody::cube(2);
        auto sw = body.sandwich_radii();
        auto pick = choose_t_for_eps(sw.r, sw.R, eps);
        CurvedBody kt(body, sw.r, pick.t);
        for (int i = 0; i < 200; ++i) {
            Vector x = rng.normal_vector(2);
            CHECK(kt.gauge(x) <= (1.0 + eps) * body.gauge(x) + 1e-9);
        }
    }
}

TEST_CASE("minkowski rounding keeps flat faces") {
    MinkowskiRoundedCube rounded(2, 1.0, 1.0, 0.5);
    CHECK(rounded.inscribed_r() == doctest::Approx(1.0));
    // Face points stay on the boundary: the face is still flat.
    CHECK(rounded.gauge(vec2(1, 0.4)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rounded.gauge(vec2(1, -0.4)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rounded.gauge(vec2(1, 0)) == doctest::Approx(1.0).epsilon(1e-10));
    // Corners are shaved off.
    CHECK(rounded.gauge(vec2(1, 1)) ==
          doctest::Approx(2.0 * std::sqrt(2.0) / (1.0 + std::sqrt(2.0))).epsilon(1e-9));
}
