#include "curvopt/online.hpp"

#include <algorithm>
#include <cmath>

#include "curvopt/errors.hpp"
#include "curvopt/rng.hpp"

namespace curvopt {

namespace {

constexpr double kFeasTol = 1e-9;

void require_horizon(int horizon) {
    if (horizon < 1) throw DomainError("online game: horizon must be >= 1");
}

}  // namespace

Adversary Adversary::growth_condition(int dim, double growth_G, double max_norm_M, int horizon,
                                      std::uint64_t seed, const std::string& pattern) {
    require_horizon(horizon);
    if (!(growth_G > 0.0) || !(max_norm_M >= growth_G))
        throw DomainError("growth adversary: need 0 < G <= M");
    Adversary adv;
    adv.kind_ = AdversaryKind::GrowthCondition;
    adv.growth_G_ = growth_G;
    adv.max_norm_M_ = max_norm_M;
    adv.gains_.reserve(horizon);
    if (pattern == "constant") {
        Vector g = Vector::Zero(dim);
        g[0] = growth_G;
        adv.gains_.assign(horizon, g);
    } else if (pattern == "perp-noise") {
        if (dim < 2) throw DomainError("growth adversary: perp-noise needs dim >= 2");
        RngStream rng(seed, 10);
        const double amp = std::sqrt(max_norm_M * max_norm_M - growth_G * growth_G);
        for (int t = 0; t < horizon; ++t) {
            Vector g = Vector::Zero(dim);
            g[0] = growth_G;
            g[1] = amp * rng.uniform(-1.0, 1.0);
            adv.gains_.push_back(g);
        }
    } else {
        throw DomainError("growth adversary: unknown pattern \"" + pattern + "\"");
    }
    adv.verify();
    return adv;
}

Adversary Adversary::non_negative(int dim, double max_norm_M, int horizon, std::uint64_t seed) {
    require_horizon(horizon);
    if (!(max_norm_M > 0.0)) throw DomainError("non-negative adversary: need M > 0");
    Adversary adv;
    adv.kind_ = AdversaryKind::NonNegative;
    adv.max_norm_M_ = max_norm_M;
    RngStream rng(seed, 11);
    const double scale = max_norm_M / std::sqrt(static_cast<double>(dim));
    adv.gains_.reserve(horizon);
    for (int t = 0; t < horizon; ++t) {
        Vector g(dim);
        for (int i = 0; i < dim; ++i) g[i] = scale * rng.uniform();
        adv.gains_.push_back(g);
    }
    adv.verify();
    return adv;
}

Adversary Adversary::alternating_bad(int horizon) {
    require_horizon(horizon);
    Adversary adv;
    adv.kind_ = AdversaryKind::AlternatingBad;
    adv.max_norm_M_ = std::hypot(1.0, 0.1);
    adv.gains_.reserve(horizon);
    Vector g(2);
    g << 1.0, 0.01;
    adv.gains_.push_back(g);
    for (int t = 2; t <= horizon; ++t) {
        g << 1.0, (t % 2 == 0 ? -0.1 : 0.1);
        adv.gains_.push_back(g);
    }
    return adv;
}

Adversary Adversary::hinted(int dim, double alpha, double max_norm_M, int horizon,
                            std::uint64_t seed) {
    require_horizon(horizon);
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("hinted adversary: alpha in (0, 1]");
    if (!(max_norm_M > 0.0)) throw DomainError("hinted adversary: need M > 0");
    Adversary adv;
    adv.kind_ = AdversaryKind::Hinted;
    adv.alpha_ = alpha;
    adv.max_norm_M_ = max_norm_M;
    RngStream rng(seed, 12);
    for (int t = 0; t < horizon; ++t) {
        Vector dir = rng.unit_vector(dim);
        Vector g = dir * max_norm_M * rng.uniform(0.1, 1.0);
        Vector h;
        if (dim == 1) {
            h = dir;  // <h, g> = |g| >= alpha |g|
        } else {
            // h = alpha g_hat + sqrt(1-alpha^2) w with w unit, w _|_ g.
            Vector w = rng.unit_vector(dim);
            w -= w.dot(dir) * dir;
            while (w.norm() < 1e-9) {
                w = rng.unit_vector(dim);
                w -= w.dot(dir) * dir;
            }
            w.normalize();
            h = alpha * dir + std::sqrt(1.0 - alpha * alpha) * w;
        }
        adv.gains_.push_back(g);
        adv.hints_.push_back(h);
    }
    adv.verify();
    return adv;
}

void Adversary::verify() const {
    Vector s = Vector::Zero(gains_.empty() ? 0 : gains_.front().size());
    for (size_t i = 0; i < gains_.size(); ++i) {
        const Vector& g = gains_[i];
        const int round = static_cast<int>(i) + 1;
        switch (kind_) {
            case AdversaryKind::GrowthCondition:
                s += g;
                if (g.norm() > max_norm_M_ + 1e-12)
                    throw AdversaryViolationError("growth adversary: |g_t| exceeds M at round " +
                                                  std::to_string(round));
                if (s.norm() < growth_G_ * round - 1e-9)
                    throw AdversaryViolationError(
                        "growth adversary: |s_t| below tG at round " + std::to_string(round));
                break;
            case AdversaryKind::NonNegative:
                if (g.minCoeff() < 0.0)
                    throw AdversaryViolationError("non-negative adversary: negative component");
                if (g.norm() > max_norm_M_ + 1e-12)
                    throw AdversaryViolationError("non-negative adversary: |g_t| exceeds M");
                break;
            case AdversaryKind::AlternatingBad: {
                Vector expected(2);
                if (round == 1) expected << 1.0, 0.01;
                else expected << 1.0, (round % 2 == 0 ? -0.1 : 0.1);
                if ((g - expected).lpNorm<Eigen::Infinity>() != 0.0)
                    throw AdversaryViolationError("alternating adversary: stream mismatch");
                break;
            }
            case AdversaryKind::Hinted: {
                const Vector& h = hints_[i];
                if (std::abs(h.norm() - 1.0) > 1e-9)
                    throw AdversaryViolationError("hinted adversary: hint not unit norm");
                if (h.dot(g) < alpha_ * g.norm() - 1e-9)
                    throw AdversaryViolationError("hinted adversary: hint correlation below alpha");
                break;
            }
        }
    }
}

Vector ftl_step(const ConvexBody& body, const Vector& s_prev, const Vector& fallback) {
    if (body.gauge(fallback) > 1.0 + kFeasTol)
        throw DomainError("ftl_step: fallback point is not feasible");
    if (s_prev.lpNorm<Eigen::Infinity>() == 0.0) return fallback;
    return body.support_argmax(s_prev);
}

Learner ftl_learner(const ConvexBody& body) {
    Vector anchor = body.support_argmax(Vector::Zero(body.dim()));
    return [body, anchor](int, const Vector& s_prev) { return ftl_step(body, s_prev, anchor); };
}

Learner ftl_learner(const CurvedBody& body, double delta) {
    Vector anchor = body.inscribed_r() * Vector::Unit(body.dim(), 0);
    return [body, anchor, delta](int, const Vector& s_prev) {
        if (s_prev.lpNorm<Eigen::Infinity>() == 0.0) return anchor;
        auto res = weak_optimize(body, s_prev, delta);
        if (!res.converged)
            throw OracleFailureError("ftl over curved body: weak optimization hit its "
                                     "iteration limit (gap " +
                                     std::to_string(res.achieved_gap) + ")");
        return res.point;
    };
}

GameTrace play_game(const ConvexBody& body, const Learner& learner, const Adversary& adversary,
                    int horizon) {
    require_horizon(horizon);
    if (adversary.horizon() < horizon)
        throw DomainError("play_game: adversary stream shorter than the horizon");

    GameTrace trace;
    trace.horizon = horizon;
    trace.gains.reserve(horizon);
    trace.actions.reserve(horizon);
    trace.prefix_sums.reserve(horizon);
    trace.round_gains.reserve(horizon);

    Vector s = Vector::Zero(body.dim());
    for (int t = 1; t <= horizon; ++t) {
        Vector x = learner(t, s);
        if (body.gauge(x) > 1.0 + kFeasTol)
            throw DomainError("play_game: learner action infeasible at round " +
                              std::to_string(t));
        const Vector& g = adversary.gain(t);
        s += g;
        trace.actions.push_back(std::move(x));
        trace.gains.push_back(g);
        trace.prefix_sums.push_back(s);
        trace.round_gains.push_back(g.dot(trace.actions.back()));
        trace.cumulative_gain += trace.round_gains.back();
    }
    adversary.verify();
    return trace;
}

const Certificate* RegretReport::find(const std::string& name) const {
    for (const auto& c : certificates)
        if (c.name == name) return &c;
    return nullptr;
}

RegretReport regret_report(const ConvexBody& body, const GameTrace& trace,
                           const RegretParams& params) {
    if (trace.horizon < 1) throw DomainError("regret_report: empty trace");
    const int T = trace.horizon;
    const Vector& s_total = trace.prefix_sums.back();

    RegretReport rep;
    rep.realized_gain = trace.cumulative_gain;
    rep.opt_value = body.support(s_total);
    rep.regret = rep.opt_value - rep.realized_gain;

    // Lemma-style stability bound: sum <g_t, x_{t+1} - x_t> with the
    // after-the-end action x_{T+1} = argmax(s_T). Unconditional for FTL.
    {
        Certificate c{"ftl_stability", 0.0, false, true};
        double bound = 0.0;
        for (int t = 0; t < T; ++t) {
            const Vector& next =
                (t + 1 < T) ? trace.actions[t + 1] : body.support_argmax(s_total);
            bound += trace.gains[t].dot(next - trace.actions[t]);
        }
        c.bound = bound;
        c.holds = rep.regret <= bound + 1e-8;
        rep.certificates.push_back(c);
    }

    // Sphere-Lipschitz route: (1/2 lambda) sum |g_t|^2 / |s_t|, valid only
    // when every prefix sum stays away from the origin.
    {
        Certificate c{"sphere_lipschitz", 0.0, false, false};
        if (params.lambda) {
            bool all_nonzero = true;
            double sum = 0.0;
            for (int t = 0; t < T; ++t) {
                double sn = trace.prefix_sums[t].norm();
                if (sn <= 1e-12) {
                    all_nonzero = false;
                    break;
                }
                sum += trace.gains[t].squaredNorm() / sn;
            }
            if (all_nonzero) {
                c.applicable = true;
                c.bound = sum / (2.0 * *params.lambda);
                c.holds = rep.regret <= c.bound + 1e-6 * T;
            }
        }
        rep.certificates.push_back(c);
    }

    // Closed-form growth-condition bound M^2/(2 lambda G)(1 + ln T).
    {
        Certificate c{"growth_log_t", 0.0, false, false};
        if (params.lambda && params.max_norm && params.growth && *params.growth > 0.0) {
            c.applicable = true;
            c.bound = (*params.max_norm * *params.max_norm) /
                      (2.0 * *params.lambda * *params.growth) * (1.0 + std::log(T));
            c.holds = rep.regret <= c.bound;
        }
        rep.certificates.push_back(c);
    }

    // Non-negative-gain bound (5 C^2 M / 2 lambda) ln T.
    {
        Certificate c{"nonneg_log_t", 0.0, false, false};
        bool nonneg = true;
        for (const auto& g : trace.gains)
            if (g.minCoeff() < 0.0) {
                nonneg = false;
                break;
            }
        if (params.lambda && params.max_norm && params.linearization_C && nonneg && T >= 2) {
            const double C = *params.linearization_C;
            c.applicable = true;
            c.bound = 5.0 * C * C * *params.max_norm / (2.0 * *params.lambda) * std::log(T);
            c.holds = rep.regret <= c.bound;
        }
        rep.certificates.push_back(c);
    }

    return rep;
}

NonnegLinearization nonneg_linearization(const ConvexBody& norm_body, std::uint64_t seed) {
    const int d = norm_body.dim();
    RngStream rng(seed, 13);
    // Spot-check symmetry: the construction is stated for norms.
    for (int i = 0; i < 16; ++i) {
        Vector x = rng.normal_vector(d);
        if (std::abs(norm_body.gauge(x) - norm_body.gauge(-x)) >
            1e-9 * (1.0 + norm_body.gauge(x)))
            throw DomainError("nonneg_linearization: body gauge is not symmetric");
    }

    NonnegLinearization out;
    out.u.resize(d);
    for (int i = 0; i < d; ++i) out.u[i] = norm_body.gauge(Vector::Unit(d, i));

    // Maximize <u, x> over {x >= 0, ||x|| = 1}: dense non-negative sampling
    // plus projected gradient ascent polish from the best starts.
    auto value = [&](const Vector& x) { return out.u.dot(x) / norm_body.gauge(x); };
    Vector best = Vector::Unit(d, 0);
    double best_val = value(best);
    const long dense = 2048L * d;
    for (long i = 0; i < dense; ++i) {
        Vector x = rng.normal_vector(d).cwiseAbs();
        if (x.lpNorm<Eigen::Infinity>() < 1e-12) continue;
        double v = value(x);
        if (v > best_val) {
            best_val = v;
            best = x;
        }
    }
    Vector x = best / norm_body.gauge(best);
    for (int it = 0; it < 400; ++it) {
        double step = 0.5 * std::pow(0.985, it);
        Vector cand = (x + step * out.u).cwiseMax(0.0);
        if (cand.lpNorm<Eigen::Infinity>() < 1e-12) continue;
        cand /= norm_body.gauge(cand);
        if (out.u.dot(cand) > out.u.dot(x)) x = cand;
    }
    out.C = out.u.dot(x);
    return out;
}

LogEstimate log_estimate_check(const std::vector<double>& a, double upper_A) {
    const int T = static_cast<int>(a.size());
    if (T < 2) throw DomainError("log_estimate_check: need T >= 2");
    if (!(upper_A >= 0.0)) throw DomainError("log_estimate_check: A must be non-negative");
    for (double v : a)
        if (!(v >= 0.0 && v <= upper_A))
            throw DomainError("log_estimate_check: entry outside [0, A]");

    LogEstimate out;
    double prefix = 0.0;
    for (double v : a) {
        prefix += v;
        if (prefix > 0.0) out.lhs += v * v / prefix;  // prefix = 0 forces v = 0
    }
    out.bound = 5.0 * upper_A * std::log(static_cast<double>(T));
    out.holds = out.lhs <= out.bound + 1e-9;
    return out;
}

HintsReduction hints_reduction(const ConvexBody& body, double eps,
                               const InnerLearnerFactory& factory) {
    auto sw = body.sandwich_radii();
    auto param = choose_t_for_eps(sw.r, sw.R, eps);
    CurvedBody curved(body, sw.r, param.t);
    Learner learner =
        factory ? factory(curved) : ftl_learner(curved);
    return HintsReduction{std::move(curved), param, std::move(learner)};
}

double reduction_opt_ratio(const ConvexBody& body, const CurvedBody& curved,
                           const Vector& s_total, double delta) {
    double opt = body.support(s_total);
    if (opt <= 0.0) return 1.0;  // degenerate gain sum: nothing to lose
    double curved_opt = weak_optimize(curved, s_total, delta).value;
    return curved_opt / opt;
}

}  // namespace curvopt
