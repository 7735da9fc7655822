#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "curvopt/body.hpp"
#include "curvopt/certify.hpp"
#include "curvopt/curved.hpp"
#include "curvopt/errors.hpp"

using namespace curvopt;

namespace {
constexpr long kSamples = 30000;

}  // namespace

TEST_CASE("two-convexity of the euclidean ball at the sharp modulus") {
    auto ball = gauge_oracle(ConvexBody::ball(2, 1.0));
    auto rep = check_two_convex(ball, 0.125, kSamples, 7);
    CHECK(rep.pass);
    CHECK(rep.empirical_modulus >= 0.125 - 1e-7);

    // The modulus 1/8 is best possible: 5% above it must fail, with a witness.
    rep = check_two_convex(ball, 0.13125, kSamples, 7);
    CHECK_FALSE(rep.pass);
    CHECK(rep.empirical_modulus < 0.13125 - 1e-7);
    CHECK(rep.witness.x.size() == 2);
    CHECK(ball.gauge(rep.witness.x) <= 1.0 + 1e-9);
    CHECK(ball.gauge(rep.witness.y) <= 1.0 + 1e-9);
}

TEST_CASE("the cube is not 2-convex at any positive modulus") {
    auto cube = gauge_oracle(ConvexBody::cube(2));
    auto rep = check_two_convex(cube, 1e-6, kSamples, 11);
    CHECK_FALSE(rep.pass);
    CHECK(rep.empirical_modulus <= 1e-7);  // flat-face pairs give ratio ~ 0
}

TEST_CASE("two-smoothness of the euclidean ball at the sharp modulus") {
    auto ball = gauge_oracle(ConvexBody::ball(2, 1.0));
    auto rep = check_two_smooth(ball, 0.5, kSamples, 13);
    CHECK(rep.pass);
    CHECK(rep.empirical_modulus <= 0.5 + 1e-7);
    CHECK(rep.empirical_modulus >= 0.49);  // small-y enrichment approaches 1/2

    rep = check_two_smooth(ball, 0.4, kSamples, 13);
    CHECK_FALSE(rep.pass);
    rep = check_two_smooth(ball, 0.475, kSamples, 13);  // 5% tighter than 1/2
    CHECK_FALSE(rep.pass);
}

TEST_CASE("cube small-perturbation smoothness ratios stay bounded on face interiors") {
    // Deterministic grid oracle: x on the face x1 = 1 away from the corner
    // neighborhoods (the modulus degenerates at corners), y with
    // ||y||_inf <= 0.1. The flat faces keep every ratio at or below 10.
    auto cube = ConvexBody::cube(2);
    double worst = -1e300;
    for (double a = -0.9; a <= 0.9 + 1e-12; a += 0.05) {
        Vector x(2);
        x << 1.0, a;
        for (double y1 = -0.1; y1 <= 0.1 + 1e-12; y1 += 0.02) {
            for (double y2 = -0.1; y2 <= 0.1 + 1e-12; y2 += 0.02) {
                Vector y(2);
                y << y1, y2;
                double gy = cube.gauge(y);
                if (gy < 1e-9) continue;
                double ratio = (0.5 * (cube.gauge(x + y) + cube.gauge(x - y)) - 1.0) / (gy * gy);
                worst = std::max(worst, ratio);
            }
        }
    }
    CHECK(worst <= 10.0);
    CHECK(worst >= 0.0);
}

TEST_CASE("set strong convexity: ball passes, cube fails") {
    auto ball = gauge_oracle(ConvexBody::ball(2, 1.0));
    auto rep = check_set_strong_convexity(ball, ball, 0.125, kSamples, 17);
    CHECK(rep.pass);
    rep = check_set_strong_convexity(ball, ball, 0.13, kSamples, 17);
    CHECK_FALSE(rep.pass);
    rep = check_set_strong_convexity(ball, ball, 0.0, kSamples, 17);
    CHECK(rep.pass);  // lambda = 0 is plain midpoint convexity

    auto cube = gauge_oracle(ConvexBody::cube(2));
    rep = check_set_strong_convexity(cube, cube, 1e-4, kSamples, 19);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("stated equivalence: set strong convexity w.r.t. itself matches 2-convexity") {
    struct Pair {
        GaugeOracle oracle;
        const char* name;
    };
    std::vector<Pair> bodies;
    bodies.push_back({gauge_oracle(ConvexBody::ball(2, 1.0)), "ball"});
    bodies.push_back({gauge_oracle(ConvexBody::cube(2)), "cube"});
    bodies.push_back({gauge_oracle(CurvedBody(ConvexBody::cube(2), 1.0, 0.5)), "curved cube"});

    for (const auto& entry : bodies) {
        CAPTURE(entry.name);
        auto conv = check_two_convex(entry.oracle, 0.0, kSamples, 23);
        auto set = check_set_strong_convexity(entry.oracle, entry.oracle, 0.0, kSamples, 23);
        CHECK(std::abs(conv.empirical_modulus - set.empirical_modulus) <= 2e-3);
        // Verdicts agree when the claim sits clearly on either side.
        double mid = 0.5 * (conv.empirical_modulus + set.empirical_modulus);
        for (double claim : {mid - 5e-3, mid + 5e-3}) {
            if (claim < 0.0) continue;
            auto a = check_two_convex(entry.oracle, claim, kSamples, 29);
            auto b = check_set_strong_convexity(entry.oracle, entry.oracle, claim, kSamples, 29);
            CHECK(a.pass == b.pass);
        }
    }
}

TEST_CASE("squared gauge strong convexity") {
    auto ball = gauge_oracle(ConvexBody::ball(2, 1.0));
    auto rep = check_fn_strong_convexity(ball, 0.25, kSamples, 31);
    CHECK(rep.pass);
    // Squared euclidean norm satisfies the defining inequality with equality.
    CHECK(rep.empirical_modulus == doctest::Approx(1.0).epsilon(1e-9));

    auto cube = gauge_oracle(ConvexBody::cube(2));
    rep = check_fn_strong_convexity(cube, 1e-3, kSamples, 37);
    CHECK_FALSE(rep.pass);

    Matrix a(2, 2);
    a << 4, 0, 0, 1;
    rep = check_fn_strong_convexity(gauge_oracle(ConvexBody::ellipsoid(a)), 0.0, kSamples, 41);
    CHECK(rep.pass);  // G = 0 is plain convexity of the squared gauge
}

TEST_CASE("gauge-set moduli are consistent with set strong convexity both ways") {
    struct Entry {
        GaugeOracle oracle;
        const char* name;
    };
    std::vector<Entry> bodies;
    bodies.push_back({gauge_oracle(ConvexBody::ball(2, 1.0)), "ball"});
    bodies.push_back({gauge_oracle(CurvedBody(ConvexBody::cube(2), 1.0, 0.5)), "curved cube t=0.5"});
    bodies.push_back({gauge_oracle(CurvedBody(ConvexBody::cube(2), 1.0, 1.0)), "curved cube t=1"});

    for (const auto& entry : bodies) {
        CAPTURE(entry.name);
        double g = check_fn_strong_convexity(entry.oracle, 0.0, kSamples, 43).empirical_modulus;
        double lam =
            check_set_strong_convexity(entry.oracle, entry.oracle, 0.0, kSamples, 43)
                .empirical_modulus;
        CHECK(g >= 2.0 * lam - 1e-3);
        CHECK(lam >= g / 8.0 - 1e-3);
    }
}

TEST_CASE("sphere-lipschitz gradients of the support function") {
    auto ball = ConvexBody::ball(2, 1.0);
    auto rep = check_sphere_lipschitz(ball, 0.125, kSamples, 47);
    CHECK(rep.pass);
    // argmax distance for the unit ball equals the direction distance, so
    // the empirical modulus sits at 1/4.
    CHECK(rep.empirical_modulus == doctest::Approx(0.25).epsilon(1e-9));
    rep = check_sphere_lipschitz(ball, 1.0, kSamples, 47);
    CHECK_FALSE(rep.pass);

    // Polytopes have discontinuous argmaxes: nearby directions across a
    // vertex normal fan give order-one jumps, failing every modulus.
    rep = check_sphere_lipschitz(ConvexBody::cube(2), 0.05, kSamples, 53);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("non-midpoint strong convexity") {
    auto ball = gauge_oracle(ConvexBody::ball(2, 1.0));
    // Strong convexity at 1/8 guarantees non-midpoint at 1/16.
    auto rep = check_nonmidpoint(ball, ball, 0.0625, kSamples, 59);
    CHECK(rep.pass);
    // For the ball the non-midpoint modulus is in fact 1/8 at every mu.
    CHECK(rep.empirical_modulus == doctest::Approx(0.125).epsilon(2e-2));
    rep = check_nonmidpoint(ball, ball, 0.13, kSamples, 59);
    CHECK_FALSE(rep.pass);

    auto cube = gauge_oracle(ConvexBody::cube(2));
    rep = check_nonmidpoint(cube, cube, 1e-4, kSamples, 61);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("minkowski rounding fails 2-convexity while the curved body passes") {
    for (double t : {0.3, 0.7}) {
        MinkowskiRoundedCube rounded(2, 1.0, 1.0, t);
        auto rep = check_two_convex(gauge_oracle(rounded), 1e-4, kSamples, 67);
        CHECK_FALSE(rep.pass);

        CurvedBody kt(ConvexBody::cube(2), 1.0, t);
        rep = check_two_convex(gauge_oracle(kt), t * t / 8.0, kSamples, 67);
        CHECK(rep.pass);
    }
}

TEST_CASE("reports are deterministic given (seed, n)") {
    auto ball = gauge_oracle(ConvexBody::ball(3, 1.0));
    auto a = check_two_convex(ball, 0.125, 5000, 71);
    auto b = check_two_convex(ball, 0.125, 5000, 71);
    CHECK(a.empirical_modulus == b.empirical_modulus);
    CHECK(a.evaluated == b.evaluated);
    CHECK((a.witness.x - b.witness.x).norm() == 0.0);

    auto c = check_two_convex(ball, 0.125, 5000, 72);
    CHECK(c.empirical_modulus != a.empirical_modulus);
}

TEST_CASE("degenerate sampling is detected") {
    GaugeOracle never;
    never.dim = 2;
    never.circum_R = 1.0;
    never.gauge = [](const Vector&) { return 2.0; };  // rejects everything
    CHECK_THROWS_AS(check_two_convex(never, 0.1, 10, 3), DegenerateBodyError);
}

TEST_CASE("report json carries the one-sided disclaimer") {
    auto ball = gauge_oracle(ConvexBody::ball(2, 1.0));
    auto rep = check_two_convex(ball, 0.125, 2000, 73);
    auto j = report_to_json(rep);
    CHECK(j["notion"] == "two_convex");
    CHECK(j["pass"] == rep.pass);
    CHECK(std::string(j["certificate"]).find("not a proof") == std::string::npos);
    CHECK(std::string(j["certificate"]).find("no violation found") != std::string::npos);
}
