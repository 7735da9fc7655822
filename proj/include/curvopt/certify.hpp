#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "curvopt/body.hpp"
#include "curvopt/curved.hpp"

namespace curvopt {

// What the samplers need from a body: dimension, a gauge callable, and a
// circumscribed Euclidean radius bounding the rejection box.
struct GaugeOracle {
    int dim = 0;
    double circum_R = 0.0;
    std::function<double(const Vector&)> gauge;
};

GaugeOracle gauge_oracle(const ConvexBody& body);
GaugeOracle gauge_oracle(const CurvedBody& body);
GaugeOracle gauge_oracle(const MinkowskiRoundedCube& body);

enum class CurvatureNotion {
    TwoConvex,
    TwoSmooth,
    SetStrongConvex,
    FnStrongConvex,
    SphereLipschitz,
    NonMidpoint,
};

const char* notion_name(CurvatureNotion notion);

struct ModulusWitness {
    Vector x;
    Vector y;
    Vector w;            // reference-body boundary point, when the notion uses one
    double mix = -1.0;   // alpha (function strong convexity) or mu (non-midpoint)
    double ratio = 0.0;  // value of the defining ratio at the witness
};

// Outcome of one sampled certification run. The empirical modulus is the
// extreme of the defining ratio over the admissible samples (an infimum for
// the convexity-type notions, a supremum for smoothness). PASS is a
// one-sided statement: no violation was found among the samples; it is
// never a proof.
struct ModulusReport {
    CurvatureNotion notion = CurvatureNotion::TwoConvex;
    double claimed_modulus = 0.0;
    double empirical_modulus = 0.0;
    ModulusWitness witness;
    long samples = 0;    // requested
    long evaluated = 0;  // admitted into the ratio after degeneracy exclusions
    std::uint64_t seed = 0;
    bool pass = false;
};

inline constexpr const char* kCertificateDisclaimer =
    "empirical one-sided certificate: PASS means no violation found among the samples";

// ||(x+y)/2||_K <= 1 - D ||x-y||_K^2 over pairs in K. Pairs are drawn
// uniformly by rejection, with 20% boundary enrichment (nearby and
// antipodal boundary pairs) since the extremal ratios live there.
// PASS iff empirical >= claimed - 1e-7.
ModulusReport check_two_convex(const GaugeOracle& body, double claimed, long n,
                               std::uint64_t seed);

// (||x+y||_K + ||x-y||_K)/2 <= 1 + D ||y||_K^2 over boundary x and
// ||y||_K <= y_gauge_cap. PASS iff empirical <= claimed + 1e-7.
ModulusReport check_two_smooth(const GaugeOracle& body, double claimed, long n,
                               std::uint64_t seed, double y_gauge_cap = 2.0);

// (x+y)/2 + lambda ||x-y||_C^2 C inside K over pairs in K and boundary
// points w of C; the per-sample largest feasible lambda is found by
// bisection and the empirical modulus is their minimum.
ModulusReport check_set_strong_convexity(const GaugeOracle& K, const GaugeOracle& C,
                                         double claimed, long n, std::uint64_t seed);

// G-strong convexity of f = ||.||_K^2 with respect to ||.||_K itself.
ModulusReport check_fn_strong_convexity(const GaugeOracle& body, double claimed, long n,
                                        std::uint64_t seed);

// || argmax(u) - argmax(v) ||_2 <= (1/4 lambda) ||u - v||_2 over Euclidean
// unit u, v. Restricted to the Euclidean norm (the dual of the unit ball is
// itself, so the dual distance is again Euclidean).
ModulusReport check_sphere_lipschitz(const ConvexBody& body, double claimed, long n,
                                     std::uint64_t seed);

// z + 4 lambda mu(1-mu) ||x-y||_C^2 C inside K for z = mu x + (1-mu) y.
ModulusReport check_nonmidpoint(const GaugeOracle& K, const GaugeOracle& C, double claimed,
                                long n, std::uint64_t seed);

nlohmann::json report_to_json(const ModulusReport& report);

}  // namespace curvopt
