#include "curvopt/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "curvopt/errors.hpp"
#include "curvopt/rng.hpp"

namespace curvopt {

namespace {

constexpr double kVerdictTol = 1e-7;
constexpr double kContainTol = 1e-9;
// Pairs closer than this (in the relevant gauge) are excluded from ratios.
// The ratio numerators cancel to O(dist^2), so below this floor rounding
// noise (~1e-16/dist^2) would swamp the 1e-7 verdict tolerance and turn
// sharp moduli such as 1/8 into coin flips.
constexpr double kDegenerate = 1e-4;
constexpr double kEnrichMin = 1e-3;
constexpr double kLambdaCap = 1e9;

double inf() { return std::numeric_limits<double>::infinity(); }

// Uniform point of {gauge <= 1} by rejection from the circumscribed box.
Vector sample_in_body(const GaugeOracle& body, RngStream& rng, long& attempts, long& accepts) {
    while (true) {
        ++attempts;
        Vector x = rng.uniform_box(body.dim, -body.circum_R, body.circum_R);
        if (body.gauge(x) <= 1.0) {
            ++accepts;
            return x;
        }
        if (attempts >= 1000000 && accepts < attempts / 1000000)
            throw DegenerateBodyError("rejection sampling acceptance below 1e-6");
    }
}

Vector boundary_point(const GaugeOracle& body, RngStream& rng) {
    Vector u = rng.unit_vector(body.dim);
    return u / body.gauge(u);
}

// Nearby or antipodal boundary companion of x, at gauge scale >= kEnrichMin.
Vector enriched_companion(const GaugeOracle& body, RngStream& rng, const Vector& x,
                          bool antipodal) {
    double s = std::exp(rng.uniform(std::log(kEnrichMin), std::log(0.5)));
    Vector z = (antipodal ? -x : x) + s * rng.unit_vector(body.dim);
    return z / body.gauge(z);
}

// Largest lam >= 0 with gauge(base + lam * step) <= 1 + tol, by doubling
// plus bisection; the feasible set in lam is an interval containing 0.
double largest_feasible_scale(const GaugeOracle& K, const Vector& base, const Vector& step) {
    auto ok = [&](double lam) { return K.gauge(base + lam * step) <= 1.0 + kContainTol; };
    if (!ok(0.0)) return 0.0;
    double hi = 1.0;
    while (ok(hi)) {
        hi *= 2.0;
        if (hi > kLambdaCap) return inf();
    }
    double lo = hi * 0.5 >= 1.0 ? hi * 0.5 : 0.0;
    if (!ok(lo)) lo = 0.0;
    for (int it = 0; it < 80 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

void require_evaluated(long evaluated) {
    if (evaluated == 0)
        throw DegenerateBodyError("no admissible sample pairs after degeneracy exclusions");
}

}  // namespace

GaugeOracle gauge_oracle(const ConvexBody& body) {
    return {body.dim(), body.sandwich_radii().R, [body](const Vector& x) { return body.gauge(x); }};
}

GaugeOracle gauge_oracle(const CurvedBody& body) {
    // K_t is inside both K and B(r/t), whichever box is tighter.
    double R = body.sandwich_radii().R;
    if (body.t() > 0.0) R = std::min(R, body.inscribed_r() / body.t());
    return {body.dim(), R, [body](const Vector& x) { return body.gauge(x); }};
}

GaugeOracle gauge_oracle(const MinkowskiRoundedCube& body) {
    return {body.dim(), body.circum_R(), [body](const Vector& x) { return body.gauge(x); }};
}

const char* notion_name(CurvatureNotion notion) {
    switch (notion) {
        case CurvatureNotion::TwoConvex: return "two_convex";
        case CurvatureNotion::TwoSmooth: return "two_smooth";
        case CurvatureNotion::SetStrongConvex: return "set_strong_convex";
        case CurvatureNotion::FnStrongConvex: return "fn_strong_convex";
        case CurvatureNotion::SphereLipschitz: return "sphere_lipschitz";
        case CurvatureNotion::NonMidpoint: return "non_midpoint";
    }
    return "unknown";
}

ModulusReport check_two_convex(const GaugeOracle& body, double claimed, long n,
                               std::uint64_t seed) {
    if (n < 1) throw DomainError("check_two_convex: need n >= 1");
    RngStream rng(seed, 0);
    ModulusReport rep;
    rep.notion = CurvatureNotion::TwoConvex;
    rep.claimed_modulus = claimed;
    rep.samples = n;
    rep.seed = seed;
    rep.empirical_modulus = inf();

    long attempts = 0, accepts = 0;
    for (long i = 0; i < n; ++i) {
        Vector x, y;
        if (i % 5 == 4) {  // boundary enrichment
            x = boundary_point(body, rng);
            y = enriched_companion(body, rng, x, /*antipodal=*/(i % 10 == 9));
        } else {
            x = sample_in_body(body, rng, attempts, accepts);
            y = sample_in_body(body, rng, attempts, accepts);
        }
        double dist = body.gauge(x - y);
        if (dist <= kDegenerate) continue;
        double ratio = (1.0 - body.gauge(0.5 * (x + y))) / (dist * dist);
        ++rep.evaluated;
        if (ratio < rep.empirical_modulus) {
            rep.empirical_modulus = ratio;
            rep.witness = {x, y, Vector(), -1.0, ratio};
        }
    }
    require_evaluated(rep.evaluated);
    rep.pass = rep.empirical_modulus >= claimed - kVerdictTol;
    return rep;
}

ModulusReport check_two_smooth(const GaugeOracle& body, double claimed, long n,
                               std::uint64_t seed, double y_gauge_cap) {
    if (n < 1) throw DomainError("check_two_smooth: need n >= 1");
    if (!(y_gauge_cap > 0.0)) throw DomainError("check_two_smooth: cap must be positive");
    RngStream rng(seed, 1);
    ModulusReport rep;
    rep.notion = CurvatureNotion::TwoSmooth;
    rep.claimed_modulus = claimed;
    rep.samples = n;
    rep.seed = seed;
    rep.empirical_modulus = -inf();

    for (long i = 0; i < n; ++i) {
        Vector x = boundary_point(body, rng);
        Vector w = rng.unit_vector(body.dim);
        Vector dir = w / body.gauge(w);
        double scale;
        if (i % 5 == 4) {  // small-perturbation enrichment probes the local modulus
            scale = std::exp(rng.uniform(std::log(kEnrichMin),
                                         std::log(std::min(0.3, y_gauge_cap))));
        } else {
            scale = y_gauge_cap *
                    std::pow(rng.uniform(), 1.0 / static_cast<double>(body.dim));
        }
        Vector y = scale * dir;
        double gy = body.gauge(y);
        if (gy <= kEnrichMin) continue;  // cancellation noise floor
        double ratio =
            (0.5 * (body.gauge(x + y) + body.gauge(x - y)) - 1.0) / (gy * gy);
        ++rep.evaluated;
        if (ratio > rep.empirical_modulus) {
            rep.empirical_modulus = ratio;
            rep.witness = {x, y, Vector(), -1.0, ratio};
        }
    }
    require_evaluated(rep.evaluated);
    rep.pass = rep.empirical_modulus <= claimed + kVerdictTol;
    return rep;
}

ModulusReport check_set_strong_convexity(const GaugeOracle& K, const GaugeOracle& C,
                                         double claimed, long n, std::uint64_t seed) {
    if (n < 1) throw DomainError("check_set_strong_convexity: need n >= 1");
    if (K.dim != C.dim) throw DomainError("check_set_strong_convexity: dimension mismatch");
    RngStream rng(seed, 2);
    ModulusReport rep;
    rep.notion = CurvatureNotion::SetStrongConvex;
    rep.claimed_modulus = claimed;
    rep.samples = n;
    rep.seed = seed;
    rep.empirical_modulus = inf();

    long attempts = 0, accepts = 0;
    for (long i = 0; i < n; ++i) {
        Vector x, y;
        if (i % 5 == 4) {
            x = boundary_point(K, rng);
            y = enriched_companion(K, rng, x, (i % 10 == 9));
        } else {
            x = sample_in_body(K, rng, attempts, accepts);
            y = sample_in_body(K, rng, attempts, accepts);
        }
        double dist = C.gauge(x - y);
        if (dist <= kDegenerate) continue;
        Vector w = boundary_point(C, rng);
        Vector mid = 0.5 * (x + y);
        double lam = largest_feasible_scale(K, mid, dist * dist * w);
        ++rep.evaluated;
        if (lam < rep.empirical_modulus) {
            rep.empirical_modulus = lam;
            rep.witness = {x, y, w, -1.0, lam};
        }
    }
    require_evaluated(rep.evaluated);
    rep.pass = rep.empirical_modulus >= claimed - kVerdictTol;
    return rep;
}

ModulusReport check_fn_strong_convexity(const GaugeOracle& body, double claimed, long n,
                                        std::uint64_t seed) {
    if (n < 1) throw DomainError("check_fn_strong_convexity: need n >= 1");
    RngStream rng(seed, 3);
    ModulusReport rep;
    rep.notion = CurvatureNotion::FnStrongConvex;
    rep.claimed_modulus = claimed;
    rep.samples = n;
    rep.seed = seed;
    rep.empirical_modulus = inf();

    auto f = [&](const Vector& v) {
        double g = body.gauge(v);
        return g * g;
    };
    const double box = 2.0 * body.circum_R;
    for (long i = 0; i < n; ++i) {
        Vector x = rng.uniform_box(body.dim, -box, box);
        Vector y;
        if (i % 5 == 4) {
            double s = std::exp(rng.uniform(std::log(3e-3), std::log(1.0)));
            y = x + s * rng.unit_vector(body.dim);
        } else {
            y = rng.uniform_box(body.dim, -box, box);
        }
        // alpha(1-alpha) bounded away from zero: the limit ratios are
        // attained in the nearby-pair limit, not at extreme alpha, and tiny
        // alpha(1-alpha) denominators only amplify rounding noise.
        double alpha = (i % 3 == 0) ? 0.5 : rng.uniform(0.06, 0.94);
        double dist = body.gauge(x - y);
        if (dist <= 3e-3) continue;
        double num = alpha * f(x) + (1.0 - alpha) * f(y) - f(alpha * x + (1.0 - alpha) * y);
        double ratio = num / (alpha * (1.0 - alpha) * dist * dist);
        ++rep.evaluated;
        if (ratio < rep.empirical_modulus) {
            rep.empirical_modulus = ratio;
            rep.witness = {x, y, Vector(), alpha, ratio};
        }
    }
    require_evaluated(rep.evaluated);
    rep.pass = rep.empirical_modulus >= claimed - kVerdictTol;
    return rep;
}

ModulusReport check_sphere_lipschitz(const ConvexBody& body, double claimed, long n,
                                     std::uint64_t seed) {
    if (n < 1) throw DomainError("check_sphere_lipschitz: need n >= 1");
    RngStream rng(seed, 4);
    ModulusReport rep;
    rep.notion = CurvatureNotion::SphereLipschitz;
    rep.claimed_modulus = claimed;
    rep.samples = n;
    rep.seed = seed;
    rep.empirical_modulus = inf();

    for (long i = 0; i < n; ++i) {
        Vector u = rng.unit_vector(body.dim());
        Vector v;
        if (i % 2 == 0) {
            v = rng.unit_vector(body.dim());
        } else {  // nearby directions probe the local Lipschitz constant
            double s = std::exp(rng.uniform(std::log(1e-3), std::log(0.3)));
            v = (u + s * rng.unit_vector(body.dim())).normalized();
        }
        // Euclidean norm throughout; its dual (support of the polar of the
        // unit ball) is again the Euclidean norm.
        double grad_dist = (body.support_argmax(u) - body.support_argmax(v)).norm();
        double dir_dist = (u - v).norm();
        if (grad_dist <= 1e-12 || dir_dist <= 1e-12) continue;  // unconstraining
        double lam = dir_dist / (4.0 * grad_dist);
        ++rep.evaluated;
        if (lam < rep.empirical_modulus) {
            rep.empirical_modulus = lam;
            rep.witness = {u, v, Vector(), -1.0, lam};
        }
    }
    require_evaluated(rep.evaluated);
    rep.pass = rep.empirical_modulus >= claimed - kVerdictTol;
    return rep;
}

ModulusReport check_nonmidpoint(const GaugeOracle& K, const GaugeOracle& C, double claimed,
                                long n, std::uint64_t seed) {
    if (n < 1) throw DomainError("check_nonmidpoint: need n >= 1");
    if (K.dim != C.dim) throw DomainError("check_nonmidpoint: dimension mismatch");
    RngStream rng(seed, 5);
    ModulusReport rep;
    rep.notion = CurvatureNotion::NonMidpoint;
    rep.claimed_modulus = claimed;
    rep.samples = n;
    rep.seed = seed;
    rep.empirical_modulus = inf();

    long attempts = 0, accepts = 0;
    for (long i = 0; i < n; ++i) {
        Vector x, y;
        if (i % 5 == 4) {
            x = boundary_point(K, rng);
            y = enriched_companion(K, rng, x, (i % 10 == 9));
        } else {
            x = sample_in_body(K, rng, attempts, accepts);
            y = sample_in_body(K, rng, attempts, accepts);
        }
        double dist = C.gauge(x - y);
        if (dist <= kDegenerate) continue;
        double mu = (i % 3 == 0) ? 0.5 : rng.uniform(0.0, 1.0);
        double weight = 4.0 * mu * (1.0 - mu) * dist * dist;
        Vector z = mu * x + (1.0 - mu) * y;
        if (weight <= 1e-12) {
            // mu at the endpoints: the containment degenerates to z itself
            // and constrains no lambda.
            continue;
        }
        Vector w = boundary_point(C, rng);
        double lam = largest_feasible_scale(K, z, weight * w);
        ++rep.evaluated;
        if (lam < rep.empirical_modulus) {
            rep.empirical_modulus = lam;
            rep.witness = {x, y, w, mu, lam};
        }
    }
    require_evaluated(rep.evaluated);
    rep.pass = rep.empirical_modulus >= claimed - kVerdictTol;
    return rep;
}

nlohmann::json report_to_json(const ModulusReport& rep) {
    nlohmann::json j;
    j["notion"] = notion_name(rep.notion);
    j["claimed_modulus"] = rep.claimed_modulus;
    j["empirical_modulus"] = rep.empirical_modulus;
    j["samples"] = rep.samples;
    j["evaluated"] = rep.evaluated;
    j["seed"] = rep.seed;
    j["pass"] = rep.pass;
    j["certificate"] = kCertificateDisclaimer;
    auto vec = [](const Vector& v) {
        nlohmann::json a = nlohmann::json::array();
        for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
        return a;
    };
    j["witness"]["x"] = vec(rep.witness.x);
    j["witness"]["y"] = vec(rep.witness.y);
    if (rep.witness.w.size() > 0) j["witness"]["w"] = vec(rep.witness.w);
    if (rep.witness.mix >= 0.0) j["witness"]["mix"] = rep.witness.mix;
    j["witness"]["ratio"] = rep.witness.ratio;
    return j;
}

}  // namespace curvopt
