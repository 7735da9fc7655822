#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "curvopt/body.hpp"
#include "curvopt/curved.hpp"

namespace curvopt {

// Online linear optimization protocol: at round t the learner plays
// x_t in K knowing s_{t-1} = g_1 + ... + g_{t-1}, then the adversary's
// gain g_t is revealed and <g_t, x_t> is collected.

struct GameTrace {
    int horizon = 0;
    std::vector<Vector> gains;        // g_t
    std::vector<Vector> actions;      // x_t
    std::vector<Vector> prefix_sums;  // s_t = s_{t-1} + g_t
    std::vector<double> round_gains;  // <g_t, x_t>
    double cumulative_gain = 0.0;
};

enum class AdversaryKind { GrowthCondition, NonNegative, AlternatingBad, Hinted };

// Oblivious adversaries: gain (and hint) streams are generated up front
// from the seed, then re-validated against their own invariant after play.
class Adversary {
public:
    // g_t = G e1 + eta_t e2 with |eta_t| <= sqrt(M^2 - G^2) ("perp-noise"),
    // or g_t = G e1 exactly ("constant"); either way |s_t|_2 >= tG and
    // |g_t|_2 <= M.
    static Adversary growth_condition(int dim, double growth_G, double max_norm_M, int horizon,
                                      std::uint64_t seed,
                                      const std::string& pattern = "perp-noise");
    // i.i.d. componentwise-uniform gains in R^d_+, scaled so |g_t|_2 <= M.
    static Adversary non_negative(int dim, double max_norm_M, int horizon, std::uint64_t seed);
    // The published 2-d instability stream: g_1 = (1, 0.01), then gains
    // alternate (1, -0.1), (1, 0.1).
    static Adversary alternating_bad(int horizon);
    // Random gains with unit hints satisfying <h_t, g_t> >= alpha |g_t|_2.
    static Adversary hinted(int dim, double alpha, double max_norm_M, int horizon,
                            std::uint64_t seed);

    AdversaryKind kind() const { return kind_; }
    int horizon() const { return static_cast<int>(gains_.size()); }
    const Vector& gain(int t) const { return gains_.at(t - 1); }   // 1-based round
    const Vector& hint(int t) const { return hints_.at(t - 1); }
    bool has_hints() const { return !hints_.empty(); }

    // Re-checks the kind's invariant over the emitted stream; throws
    // AdversaryViolationError on the first broken round.
    void verify() const;

private:
    AdversaryKind kind_;
    double growth_G_ = 0.0;
    double max_norm_M_ = 0.0;
    double alpha_ = 0.0;
    std::vector<Vector> gains_;
    std::vector<Vector> hints_;
};

using Learner = std::function<Vector(int round, const Vector& s_prev)>;

// One FTL step: the support argmax at s_prev, or the fallback when
// s_prev = 0 (the first round's arbitrary point).
Vector ftl_step(const ConvexBody& body, const Vector& s_prev, const Vector& fallback);

// FTL over a base body; fallback defaults to the body's anchor point.
Learner ftl_learner(const ConvexBody& body);
// FTL over a curved body through the weak optimizer at precision delta.
// Actions are boundary points of K_t, hence feasible in the base body.
Learner ftl_learner(const CurvedBody& body, double delta = 1e-6);

// Plays the full game and checks the trace invariants (action feasibility
// within gauge tolerance 1e-9, adversary invariant post hoc).
GameTrace play_game(const ConvexBody& body, const Learner& learner, const Adversary& adversary,
                    int horizon);

struct Certificate {
    std::string name;
    double bound = 0.0;
    bool holds = false;
    bool applicable = false;
};

struct RegretReport {
    double regret = 0.0;
    double opt_value = 0.0;
    double realized_gain = 0.0;
    std::vector<Certificate> certificates;

    const Certificate* find(const std::string& name) const;
};

struct RegretParams {
    std::optional<double> lambda;    // strong convexity modulus of K (Euclidean)
    std::optional<double> max_norm;  // M = max |g_t|_2
    std::optional<double> growth;    // G of the growth condition
    std::optional<double> linearization_C;  // C from nonneg_linearization
};

// Regret plus every runtime certificate that applies to an FTL trace:
//   "ftl_stability":       regret <= sum <g_t, x_{t+1} - x_t>   (always)
//   "sphere_lipschitz":    regret <= (1/2 lambda) sum |g_t|^2/|s_t|
//                          (needs lambda; skipped if some s_t = 0)
//   "growth_log_t":        regret <= M^2/(2 lambda G) (1 + ln T)
//   "nonneg_log_t":        regret <= (5 C^2 M / 2 lambda) ln T
//                          (needs non-negative gains and T >= 2)
RegretReport regret_report(const ConvexBody& body, const GameTrace& trace,
                           const RegretParams& params);

struct NonnegLinearization {
    Vector u;        // u_i = ||e_i||
    double C = 0.0;  // max{ <u, x> : x >= 0, ||x|| = 1 }
};

// The linear over-approximation of a norm on the non-negative orthant used
// by the non-negative-gains regret bound: ||x|| <= <u, x> <= C ||x||.
NonnegLinearization nonneg_linearization(const ConvexBody& norm_body, std::uint64_t seed = 0);

struct LogEstimate {
    double lhs = 0.0;    // sum a_t^2 / b_t over rounds with b_t > 0
    double bound = 0.0;  // 5 A ln T
    bool holds = false;
};

// For a_t in [0, A] and prefix sums b_t: sum a_t^2/b_t <= 5 A ln T, T >= 2.
LogEstimate log_estimate_check(const std::vector<double>& a, double A);

struct HintsReduction {
    CurvedBody curved;
    CurvingParameter parameter;
    Learner learner;
};

using InnerLearnerFactory = std::function<Learner(const CurvedBody&)>;

// The curving reduction: build K_t with t^2 = 2 eps/((R/r)^2 - 1) and run
// the inner learner over K_t. Every action is feasible in K since
// K_t is contained in K, and the best fixed action degrades by at most a
// (1 - eps) factor.
HintsReduction hints_reduction(const ConvexBody& body, double eps,
                               const InnerLearnerFactory& factory = {});

// Realized OPT_{K_t} / OPT_K for the gain sum of a finished game, the
// post-hoc reduction guarantee (>= 1 - eps).
double reduction_opt_ratio(const ConvexBody& body, const CurvedBody& curved, const Vector& s_total,
                           double delta = 1e-6);

}  // namespace curvopt
