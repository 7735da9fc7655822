#include "curvopt/presets.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "curvopt/certify.hpp"
#include "curvopt/curved.hpp"
#include "curvopt/errors.hpp"
#include "curvopt/fw.hpp"
#include "curvopt/rng.hpp"

namespace curvopt {

namespace {

using nlohmann::json;

std::string hex64(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%016" PRIx64, v);
    return buf;
}

std::string meta_line(const std::string& config, std::uint64_t seed) {
    std::ostringstream os;
    os << "# curvopt v" << kArtifactVersion << " seed=" << seed
       << " config_hash=" << hex64(config_hash(config)) << " config=" << config;
    return os.str();
}

json meta_json(const std::string& config, std::uint64_t seed) {
    json m;
    m["version"] = kArtifactVersion;
    m["seed"] = seed;
    m["config_hash"] = hex64(config_hash(config));
    m["config"] = config;
    return m;
}

std::ofstream open_artifact(const std::string& dir, const std::string& name) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    const std::string path = (fs::path(dir) / name).string();
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open output file: " + path);
    return out;
}

void add_line(PresetResult& result, const std::string& name, bool pass,
              const std::string& detail) {
    result.lines.push_back({name, pass, detail});
}

std::string fmt(double v) { return format_double(v); }

// ---------------------------------------------------------------- ftl-growth

PresetResult run_ftl_growth(const PresetConfig& cfg) {
    PresetResult result{cfg.name, {}};
    const int kSeeds = 20;
    const int kHorizon = 10000;
    const double lambda = 0.125, max_norm = 1.0, growth = 0.5;
    const std::vector<int> t_grid = {100, 1000, 10000};
    auto bound_at = [&](int T) {
        return max_norm * max_norm / (2.0 * lambda * growth) * (1.0 + std::log(T));
    };
    // regret <= bound(T) forces regret/ln T <= this constant for T >= 100.
    const double ratio_cap =
        max_norm * max_norm / (2.0 * lambda * growth) * (1.0 + 1.0 / std::log(100.0));

    auto ball = ConvexBody::ball(2, 1.0);
    RegretParams params;
    params.lambda = lambda;
    params.max_norm = max_norm;
    params.growth = growth;

    bool bound_ok = true, stability_ok = true, lipschitz_ok = true, ratio_ok = true;
    double worst_margin = std::numeric_limits<double>::infinity();
    double worst_ratio = 0.0;
    std::ostringstream csv;

    for (int s = 0; s < kSeeds; ++s) {
        auto adv = Adversary::growth_condition(2, growth, max_norm, kHorizon, cfg.seed + s);
        auto trace = play_game(ball, ftl_learner(ball), adv, kHorizon);

        double cum = 0.0;
        size_t grid_pos = 0;
        for (int t = 1; t <= kHorizon; ++t) {
            cum += trace.round_gains[t - 1];
            if (grid_pos < t_grid.size() && t == t_grid[grid_pos]) {
                double regret_t = ball.support(trace.prefix_sums[t - 1]) - cum;
                double b = bound_at(t);
                bound_ok = bound_ok && regret_t <= b;
                worst_margin = std::min(worst_margin, b - regret_t);
                double ratio = regret_t / std::log(t);
                worst_ratio = std::max(worst_ratio, ratio);
                ratio_ok = ratio_ok && ratio <= ratio_cap;
                csv << (cfg.seed + s) << ',' << t << ',' << fmt(regret_t) << ',' << fmt(b)
                    << '\n';
                ++grid_pos;
            }
        }

        auto rep = regret_report(ball, trace, params);
        stability_ok = stability_ok && rep.find("ftl_stability")->holds;
        lipschitz_ok = lipschitz_ok && rep.find("sphere_lipschitz")->applicable &&
                       rep.find("sphere_lipschitz")->holds;
    }

    add_line(result, "growth-regret-bound", bound_ok,
             "20 seeds, T in {1e2,1e3,1e4}; slack min " + fmt(worst_margin));
    add_line(result, "regret-per-log-horizon", ratio_ok,
             "max regret/ln T = " + fmt(worst_ratio) + " <= " + fmt(ratio_cap));
    add_line(result, "stability-certificate", stability_ok, "holds on every trace");
    add_line(result, "sphere-lipschitz-certificate", lipschitz_ok, "holds on every trace");

    if (!cfg.out_dir.empty()) {
        auto out = open_artifact(cfg.out_dir, "ftl_growth.csv");
        out << meta_line("preset=ftl-growth G=0.5 M=1 T=10000 seeds=20", cfg.seed) << '\n';
        out << "seed,horizon,regret,growth_bound\n" << csv.str();
    }
    return result;
}

// ---------------------------------------------------------------- ftl-nonneg

PresetResult run_ftl_nonneg(const PresetConfig& cfg) {
    PresetResult result{cfg.name, {}};
    const int kSeeds = 20;
    const int kHorizon = 10000;
    const double lambda = 0.125, max_norm = 1.0;

    bool lin_ok = true;
    std::ostringstream csv;
    for (int d : {2, 5}) {
        auto ball = ConvexBody::ball(d, 1.0);
        auto lin = nonneg_linearization(ball, cfg.seed);
        lin_ok = lin_ok && std::abs(lin.C - std::sqrt(double(d))) <= 1e-3;

        const double c_const = std::sqrt(static_cast<double>(d));
        RegretParams params;
        params.lambda = lambda;
        params.max_norm = max_norm;
        params.linearization_C = c_const;

        bool bound_ok = true, stability_ok = true, lipschitz_ok = true;
        double worst_margin = std::numeric_limits<double>::infinity();
        for (int s = 0; s < kSeeds; ++s) {
            auto adv = Adversary::non_negative(d, max_norm, kHorizon, cfg.seed + s);
            auto trace = play_game(ball, ftl_learner(ball), adv, kHorizon);
            auto rep = regret_report(ball, trace, params);
            const auto* cert = rep.find("nonneg_log_t");
            bound_ok = bound_ok && cert->applicable && cert->holds;
            worst_margin = std::min(worst_margin, cert->bound - rep.regret);
            stability_ok = stability_ok && rep.find("ftl_stability")->holds;
            lipschitz_ok = lipschitz_ok && rep.find("sphere_lipschitz")->applicable &&
                           rep.find("sphere_lipschitz")->holds;
            csv << d << ',' << (cfg.seed + s) << ',' << fmt(rep.regret) << ','
                << fmt(cert->bound) << '\n';
        }
        const std::string suffix = "-d" + std::to_string(d);
        add_line(result, "nonneg-regret-bound" + suffix, bound_ok,
                 "20 seeds, T=1e4; slack min " + fmt(worst_margin));
        add_line(result, "stability-certificate" + suffix, stability_ok, "holds on every trace");
        add_line(result, "sphere-lipschitz-certificate" + suffix, lipschitz_ok,
                 "holds on every trace");
    }
    add_line(result, "linearization-constant", lin_ok, "C matches sqrt(d) within 1e-3");

    if (!cfg.out_dir.empty()) {
        auto out = open_artifact(cfg.out_dir, "ftl_nonneg.csv");
        out << meta_line("preset=ftl-nonneg M=1 T=10000 seeds=20 dims=2,5", cfg.seed) << '\n';
        out << "dim,seed,regret,nonneg_bound\n" << csv.str();
    }
    return result;
}

// ------------------------------------------------------------------- ftl-bad

PresetResult run_ftl_bad(const PresetConfig& cfg) {
    PresetResult result{cfg.name, {}};
    const int kHorizon = 10000;
    auto cube = ConvexBody::cube(2);
    auto adv = Adversary::alternating_bad(kHorizon);
    auto trace = play_game(cube, ftl_learner(cube), adv, kHorizon);

    bool alternation = true;
    for (int t = 2; t <= kHorizon; ++t) {
        const Vector& x = trace.actions[t - 1];
        const double expected_y = (t % 2 == 0) ? 1.0 : -1.0;
        if (x[0] != 1.0 || x[1] != expected_y) {
            alternation = false;
            break;
        }
    }
    auto rep = regret_report(cube, trace, {});
    const double slope = rep.regret / kHorizon;

    add_line(result, "alternation-exact", alternation,
             "actions flip between (1,1) and (1,-1) from round 2 on");
    add_line(result, "linear-regret", rep.regret >= 0.05 * kHorizon,
             "regret/T = " + fmt(slope));
    add_line(result, "stability-certificate", rep.find("ftl_stability")->holds,
             "unconditional bound holds");
    add_line(result, "curved-certificates-not-applicable",
             !rep.find("sphere_lipschitz")->applicable && !rep.find("growth_log_t")->applicable,
             "cube carries no strong convexity modulus");

    if (!cfg.out_dir.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(cfg.out_dir, ec);
        write_olo_csv((fs::path(cfg.out_dir) / "ftl_bad.csv").string(), cube, trace, {},
                      "preset=ftl-bad T=10000", cfg.seed);
    }
    return result;
}

// ------------------------------------------------------------- curve-sandwich

PresetResult run_curve_sandwich(const PresetConfig& cfg) {
    PresetResult result{cfg.name, {}};
    const std::vector<int> dims = {2, 3, 5};
    const std::vector<double> t_grid = {0.1, 0.5, 0.9, 1.0};
    const int kPoints = 10000;
    const long kPairs = 100000;

    long violations = 0;
    bool curvature_ok = true;
    json cells = json::array();
    std::uint64_t stream = 0;

    for (int d : dims) {
        auto cube = ConvexBody::cube(d);
        const double big_R = cube.sandwich_radii().R;
        for (double t : t_grid) {
            CurvedBody kt(cube, 1.0, t);
            const double mult = std::sqrt(1.0 + (big_R * big_R - 1.0) * t * t);
            RngStream rng(cfg.seed, 100 + stream);
            long cell_viol = 0;
            for (int i = 0; i < kPoints; ++i) {
                Vector x = rng.normal_vector(d) * std::exp(rng.uniform(-1.0, 1.0));
                double base = cube.gauge(x);
                double curved = kt.gauge(x);
                double ball = x.norm();  // r = 1
                if (base > curved + 1e-9 * (1.0 + curved)) ++cell_viol;
                if (curved > ball + 1e-9 * (1.0 + ball)) ++cell_viol;
                if (curved > mult * base + 1e-9 * (1.0 + mult * base)) ++cell_viol;
            }
            violations += cell_viol;

            auto rep = check_two_convex(gauge_oracle(kt), t * t / 8.0, kPairs,
                                        cfg.seed + stream);
            curvature_ok = curvature_ok && rep.pass;

            json cell;
            cell["dim"] = d;
            cell["t"] = t;
            cell["pointwise_violations"] = cell_viol;
            cell["two_convex_claimed"] = t * t / 8.0;
            cell["two_convex_empirical"] = rep.empirical_modulus;
            cell["two_convex_pass"] = rep.pass;
            cells.push_back(cell);
            ++stream;
        }
    }

    bool minkowski_fails = true;
    for (double t : {0.1, 0.5, 0.9}) {
        MinkowskiRoundedCube rounded(2, 1.0, 1.0, t);
        auto rep = check_two_convex(gauge_oracle(rounded), 1e-4, 30000, cfg.seed + 900);
        minkowski_fails = minkowski_fails && !rep.pass;
    }

    add_line(result, "sandwich-pointwise", violations == 0,
             "12 cells x 10^4 points x 3 inequalities, violations = " +
                 std::to_string(violations));
    add_line(result, "curvature-two-convex", curvature_ok,
             "K_t passes 2-convexity at t^2/8 on every grid cell (10^5 pairs)");
    add_line(result, "minkowski-negative", minkowski_fails,
             "(1-t)K + tB(r) fails 2-convexity at D=1e-4 on the square");

    if (!cfg.out_dir.empty()) {
        auto out = open_artifact(cfg.out_dir, "curve_sandwich.json");
        json doc;
        doc["meta"] = meta_json("preset=curve-sandwich dims=2,3,5 t=0.1,0.5,0.9,1.0", cfg.seed);
        doc["cells"] = cells;
        doc["pointwise_violations"] = violations;
        out << doc.dump(2) << '\n';
    }
    return result;
}

// --------------------------------------------------------------- curve-decomp

PresetResult run_curve_decomp(const PresetConfig& cfg) {
    PresetResult result{cfg.name, {}};

    std::vector<std::pair<ConvexBody, double>> combos;
    combos.emplace_back(ConvexBody::ball(3, 1.0), 0.4);
    Matrix shape(2, 2);
    shape << 4, 0, 0, 1;
    combos.emplace_back(ConvexBody::ellipsoid(shape), 0.6);
    combos.emplace_back(ConvexBody::lp_ball(3, 1.5, 1.0), 0.5);
    combos.emplace_back(ConvexBody::cube(2), 0.5);
    combos.emplace_back(ConvexBody::cube(4), 0.9);
    combos.emplace_back(ConvexBody::cross_polytope(2), 0.7);
    {
        Vector a(2), b(2), c(2);
        a << 1, 0;
        b << 0, 1;
        c << -1, -1;
        combos.emplace_back(ConvexBody::vertex_polytope({a, b, c}), 0.3);
    }

    const long kTotal = 100000;
    const long per_combo = kTotal / static_cast<long>(combos.size()) + 1;
    long violations = 0;
    double max_rel = 0.0;
    std::uint64_t stream = 0;
    for (const auto& [body, t] : combos) {
        CurvedBody kt(body, t);
        RngStream rng(cfg.seed, 200 + stream++);
        for (long i = 0; i < per_combo; ++i) {
            Vector y = rng.normal_vector(body.dim()) * std::exp(rng.uniform(-1.5, 1.5));
            if (y.norm() < 1e-12) continue;
            auto cert = polar_decomposition_max(kt, y);
            double g = kt.gauge(y);
            double rel = std::abs(cert.value - g) / (1.0 + cert.value);
            max_rel = std::max(max_rel, rel);
            if (rel > 1e-9) ++violations;
        }
    }
    add_line(result, "decomposition-identity", violations == 0,
             "10^5 queries across 7 body kinds, max relative error " + fmt(max_rel));

    // Independent route: dense boundary enumeration in 2d.
    CurvedBody half(ConvexBody::cube(2), 1.0, 0.5);
    const int kGrid = 200000;
    std::vector<Vector> boundary;
    boundary.reserve(kGrid);
    for (int k = 0; k < kGrid; ++k) {
        double th = 2.0 * M_PI * k / kGrid;
        Vector dir(2);
        dir << std::cos(th), std::sin(th);
        boundary.push_back(dir / half.gauge(dir));
    }
    RngStream rng(cfg.seed, 250);
    const double delta = 1e-4;
    double max_diff = 0.0;
    bool weak_ok = true;
    for (int i = 0; i < 100; ++i) {
        Vector c = rng.unit_vector(2) * std::exp(rng.uniform(-0.5, 1.0));
        double brute = -1e300;
        for (const auto& p : boundary) brute = std::max(brute, c.dot(p));
        auto res = weak_optimize(half, c, delta);
        weak_ok = weak_ok && res.converged;
        max_diff = std::max(max_diff, std::abs(res.value - brute));
    }
    weak_ok = weak_ok && max_diff <= 2.0 * delta;
    add_line(result, "weakopt-vs-bruteforce", weak_ok,
             "100 directions at delta=1e-4, max |difference| = " + fmt(max_diff));

    if (!cfg.out_dir.empty()) {
        auto out = open_artifact(cfg.out_dir, "curve_decomp.json");
        json doc;
        doc["meta"] = meta_json("preset=curve-decomp queries=100000 weakopt_dirs=100", cfg.seed);
        doc["decomposition_max_relative_error"] = max_rel;
        doc["decomposition_violations"] = violations;
        doc["weakopt_max_difference"] = max_diff;
        out << doc.dump(2) << '\n';
    }
    return result;
}

// ------------------------------------------------------------ hints-reduction

PresetResult run_hints_reduction(const PresetConfig& cfg) {
    PresetResult result{cfg.name, {}};
    auto cube = ConvexBody::cube(2);
    const int kHorizon = 1000;
    const int kReps = 3;

    bool ratio_ok = true, feasible_ok = true;
    double worst_ratio = 1.0;
    json runs = json::array();
    for (double eps : {0.05, 0.1, 0.3}) {
        auto reduction = hints_reduction(cube, eps);
        for (int rep = 0; rep < kReps; ++rep) {
            auto adv = Adversary::hinted(2, 0.8, 1.0, kHorizon,
                                         cfg.seed + 31 * rep + static_cast<int>(1000 * eps));
            auto trace = play_game(cube, reduction.learner, adv, kHorizon);
            for (const auto& x : trace.actions)
                feasible_ok = feasible_ok && cube.gauge(x) <= 1.0 + 1e-9;
            double ratio =
                reduction_opt_ratio(cube, reduction.curved, trace.prefix_sums.back());
            ratio_ok = ratio_ok && ratio >= 1.0 - eps;
            worst_ratio = std::min(worst_ratio, ratio / (1.0 - eps));
            json run;
            run["eps"] = eps;
            run["t"] = reduction.parameter.t;
            run["opt_ratio"] = ratio;
            runs.push_back(run);
        }
    }
    add_line(result, "opt-ratio", ratio_ok,
             "OPT_{K_t}/OPT >= 1-eps on every run (min ratio/(1-eps) = " + fmt(worst_ratio) +
                 ")");
    add_line(result, "actions-feasible", feasible_ok, "every inner action lies in K");

    if (!cfg.out_dir.empty()) {
        auto out = open_artifact(cfg.out_dir, "hints_reduction.json");
        json doc;
        doc["meta"] = meta_json("preset=hints-reduction eps=0.05,0.1,0.3 T=1000", cfg.seed);
        doc["runs"] = runs;
        out << doc.dump(2) << '\n';
    }
    return result;
}

// --------------------------------------------------------------- certify-ball

PresetResult run_certify_ball(const PresetConfig& cfg) {
    PresetResult result{cfg.name, {}};
    auto ball = gauge_oracle(ConvexBody::ball(2, 1.0));
    const long kPairs = 100000;

    auto conv_pass = check_two_convex(ball, 0.125, kPairs, cfg.seed);
    auto conv_fail = check_two_convex(ball, 0.125 * 1.05, kPairs, cfg.seed);
    auto smooth_pass = check_two_smooth(ball, 0.5, kPairs, cfg.seed);
    auto smooth_fail = check_two_smooth(ball, 0.5 * 0.95, kPairs, cfg.seed);

    add_line(result, "two-convex-at-eighth", conv_pass.pass,
             "empirical " + fmt(conv_pass.empirical_modulus));
    add_line(result, "two-convex-tightened-fails",
             !conv_fail.pass && conv_fail.witness.x.size() == 2,
             "claim 0.13125 rejected with witness ratio " + fmt(conv_fail.witness.ratio));
    add_line(result, "two-smooth-at-half", smooth_pass.pass,
             "empirical " + fmt(smooth_pass.empirical_modulus));
    add_line(result, "two-smooth-tightened-fails",
             !smooth_fail.pass && smooth_fail.witness.x.size() == 2,
             "claim 0.475 rejected with witness ratio " + fmt(smooth_fail.witness.ratio));

    if (!cfg.out_dir.empty()) {
        auto out = open_artifact(cfg.out_dir, "certify_ball.json");
        json doc;
        doc["meta"] = meta_json("preset=certify-ball samples=100000", cfg.seed);
        doc["two_convex_pass"] = report_to_json(conv_pass);
        doc["two_convex_tightened"] = report_to_json(conv_fail);
        doc["two_smooth_pass"] = report_to_json(smooth_pass);
        doc["two_smooth_tightened"] = report_to_json(smooth_fail);
        out << doc.dump(2) << '\n';
    }
    return result;
}

// -------------------------------------------------------------------- fw-demo

void write_fw_csv(const std::string& dir, const std::string& name, const FwTrace& trace,
                  const std::string& config, std::uint64_t seed) {
    auto out = open_artifact(dir, name);
    out << meta_line(config, seed) << '\n';
    out << "iter,objective,gap\n";
    for (size_t t = 0; t < trace.iterates.size(); ++t)
        out << t << ',' << format_double(trace.objective_values[t]) << ','
            << format_double(trace.gaps[t]) << '\n';
}

PresetResult run_fw_demo(const PresetConfig& cfg) {
    PresetResult result{cfg.name, {}};
    Vector outside(2), inside(2), start(2);
    outside << 2, 0;
    inside << 0.5, 0.5;

    auto ball = ConvexBody::ball(2, 1.0);
    FwOptions classic;
    classic.steps = 400;
    start << 0, 0.1;
    auto ball_trace = fw_solve(ball, quadratic_objective(outside), start, classic);
    add_line(result, "ball-projection", std::abs(ball_trace.best_value() - 1.0) <= 1e-3,
             "best objective " + fmt(ball_trace.best_value()) + " vs optimum 1");

    auto cube = ConvexBody::cube(2);
    FwOptions ls;
    ls.steps = 200;
    ls.rule = FwStepRule::LineSearch;
    ls.gap_tolerance = 1e-10;
    start << -1, -1;
    auto interior_trace = fw_solve(cube, quadratic_objective(inside), start, ls);
    add_line(result, "cube-interior-optimum", interior_trace.best_value() <= 1e-6,
             "best objective " + fmt(interior_trace.best_value()));

    FwOptions envelope_opt;
    envelope_opt.steps = 300;
    start << -1, -1;
    auto envelope_trace = fw_solve(cube, quadratic_objective(outside), start, envelope_opt);
    bool envelope_ok = true;
    double best_gap = 1e300;
    for (size_t t = 0; t < envelope_trace.gaps.size(); ++t) {
        best_gap = std::min(best_gap, envelope_trace.gaps[t]);
        envelope_ok = envelope_ok && best_gap <= 64.0 / (static_cast<double>(t) + 2.0) + 1e-9;
    }
    add_line(result, "classic-gap-envelope", envelope_ok,
             "best-so-far gap under 8 diam^2/(t+2) throughout");

    Vector face(2);
    face << 2, 1.0 / M_PI;
    FwOptions cmp;
    cmp.steps = 200;
    start << -0.5, 0.1;
    auto flat = fw_solve(cube, quadratic_objective(face), start, cmp);
    CurvedBody kt(cube, 1.0, 0.5);
    auto curved = fw_solve(kt, quadratic_objective(face), start, cmp);
    add_line(result, "curved-benefit", curved.gaps.back() < flat.gaps.back(),
             "final gap " + fmt(curved.gaps.back()) + " (curved) vs " + fmt(flat.gaps.back()) +
                 " (flat)");

    if (!cfg.out_dir.empty()) {
        write_fw_csv(cfg.out_dir, "fw_ball.csv", ball_trace, "preset=fw-demo instance=ball",
                     cfg.seed);
        write_fw_csv(cfg.out_dir, "fw_cube_interior.csv", interior_trace,
                     "preset=fw-demo instance=cube-interior", cfg.seed);
        write_fw_csv(cfg.out_dir, "fw_cube_envelope.csv", envelope_trace,
                     "preset=fw-demo instance=cube-envelope", cfg.seed);
        write_fw_csv(cfg.out_dir, "fw_curved.csv", curved, "preset=fw-demo instance=curved",
                     cfg.seed);
    }
    return result;
}

}  // namespace

bool PresetResult::all_pass() const {
    for (const auto& line : lines)
        if (!line.pass) return false;
    return true;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "ftl-growth",      "ftl-nonneg",   "ftl-bad",      "curve-sandwich",
        "curve-decomp",    "hints-reduction", "certify-ball", "fw-demo",
    };
    return names;
}

PresetResult run_preset(const PresetConfig& config) {
    if (config.name == "ftl-growth") return run_ftl_growth(config);
    if (config.name == "ftl-nonneg") return run_ftl_nonneg(config);
    if (config.name == "ftl-bad") return run_ftl_bad(config);
    if (config.name == "curve-sandwich") return run_curve_sandwich(config);
    if (config.name == "curve-decomp") return run_curve_decomp(config);
    if (config.name == "hints-reduction") return run_hints_reduction(config);
    if (config.name == "certify-ball") return run_certify_ball(config);
    if (config.name == "fw-demo") return run_fw_demo(config);
    throw DomainError("unknown preset \"" + config.name + "\"");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t config_hash(const std::string& canonical) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void write_olo_csv(const std::string& path, const ConvexBody& body, const GameTrace& trace,
                   const RegretParams& params, const std::string& config_line,
                   std::uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open output file: " + path);
    out << meta_line(config_line, seed) << '\n';

    const int d = body.dim();
    out << "round";
    for (int i = 0; i < d; ++i) out << ",g" << i;
    for (int i = 0; i < d; ++i) out << ",x" << i;
    out << ",cumulative_gain,regret,bound_stability,bound_sphere_lipschitz,bound_growth_log_t,"
           "bound_nonneg_log_t\n";

    const double nan = std::numeric_limits<double>::quiet_NaN();
    double cum = 0.0;
    double stability_partial = 0.0;
    double lip_sum = 0.0;
    bool lip_valid = params.lambda.has_value();
    bool nonneg_valid = params.lambda && params.max_norm && params.linearization_C;

    for (int t = 1; t <= trace.horizon; ++t) {
        const Vector& g = trace.gains[t - 1];
        const Vector& x = trace.actions[t - 1];
        const Vector& s = trace.prefix_sums[t - 1];
        cum += trace.round_gains[t - 1];
        double regret = body.support(s) - cum;

        Vector next = (t < trace.horizon) ? trace.actions[t] : body.support_argmax(s);
        double stability = stability_partial + g.dot(next - x);
        stability_partial += g.dot(trace.actions[std::min(t, trace.horizon - 1)] - x);

        double lip = nan;
        if (lip_valid) {
            double sn = s.norm();
            if (sn <= 1e-12) lip_valid = false;
            else {
                lip_sum += g.squaredNorm() / sn;
                lip = lip_sum / (2.0 * *params.lambda);
            }
        }
        double growth_bound =
            (params.lambda && params.max_norm && params.growth)
                ? *params.max_norm * *params.max_norm /
                      (2.0 * *params.lambda * *params.growth) * (1.0 + std::log(t))
                : nan;
        double nonneg_bound = nan;
        if (nonneg_valid && t >= 2) {
            double c_lin = *params.linearization_C;
            nonneg_bound =
                5.0 * c_lin * c_lin * *params.max_norm / (2.0 * *params.lambda) * std::log(t);
        }

        out << t;
        for (int i = 0; i < d; ++i) out << ',' << format_double(g[i]);
        for (int i = 0; i < d; ++i) out << ',' << format_double(x[i]);
        out << ',' << format_double(cum) << ',' << format_double(regret) << ','
            << format_double(stability) << ',' << format_double(lip) << ','
            << format_double(growth_bound) << ',' << format_double(nonneg_bound) << '\n';
    }
}

}  // namespace curvopt
