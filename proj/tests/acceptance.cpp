// Acceptance runner: executes every acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fracsymm/analysis.hpp"
#include "fracsymm/io.hpp"
#include "fracsymm/kernel.hpp"
#include "fracsymm/planar.hpp"
#include "fracsymm/radial.hpp"
#include "fracsymm/rearrange.hpp"
#include "fracsymm/util.hpp"

using namespace fracsymm;

namespace {

int g_failures = 0;

void report(int crit, const std::string& what, bool pass, const std::string& detail) {
    std::printf("%s criterion-%d: %s (%s)\n", pass ? "PASS" : "FAIL", crit, what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = int(xs.size());
    for (int i = 0; i < n; ++i) {
        double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double wall() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

// ------------------------------------------------------------ criterion 1+2

void criterion_kernel() {
    double worst_cross = 0, worst_sym = 0;
    for (int N : {2, 3, 4})
        for (double s : {0.25, 0.5, 0.75}) {
            KernelParams p{N, s};
            for (int k = 1; k <= 9; ++k) {
                double rho = 1.7, r = 0.1 * k * rho;
                double q = theta_quadrature(p, r, rho).value;
                double h = theta_hypergeometric(p, r, rho).value;
                worst_cross = std::max(worst_cross, std::abs(q - h) / std::abs(q));
                double sq = theta_quadrature(p, rho, r).value;
                double sh = theta_hypergeometric(p, rho, r).value;
                worst_sym = std::max(worst_sym, std::abs(q - sq) / std::abs(q));
                worst_sym = std::max(worst_sym, std::abs(h - sh) / std::abs(h));
            }
        }
    report(1, "kernel cross-validation and symmetry", worst_cross <= 1e-8 && worst_sym <= 1e-10,
           "cross=" + fmt17(worst_cross) + " sym=" + fmt17(worst_sym));

    double worst_near = 0, worst_far = 0;
    for (int N : {2, 3, 4})
        for (double s : {0.25, 0.5, 0.75}) {
            KernelParams p{N, s};
            std::vector<double> ds, vals;
            for (double d : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
                ds.push_back(d);
                vals.push_back(theta(p, 1 + d / 2, 1 - d / 2).value);
            }
            double sl = loglog_slope(ds, vals);
            worst_near = std::max(worst_near, std::abs(sl + 1 + 2 * s) / (1 + 2 * s));
            std::vector<double> rs, fv;
            for (double r = 10.0; r <= 100.0; r *= std::pow(10.0, 0.25)) {
                rs.push_back(r);
                fv.push_back(theta(p, r, 1.0).value);
            }
            double sf = loglog_slope(rs, fv);
            worst_far = std::max(worst_far, std::abs(sf + N + 2 * s) / (N + 2 * s));
        }
    report(2, "near-diagonal and far-field asymptotic slopes",
           worst_near <= 0.02 && worst_far <= 0.02,
           "near=" + fmt17(worst_near) + " far=" + fmt17(worst_far));
}

// -------------------------------------------------------------- criterion 3

void criterion_rearrangement() {
    Rng rng(1001);
    double worst_norm = 0, worst_equi = 0;
    long hl_violations = 0;
    for (int inst = 0; inst < 1000; ++inst) {
        int n = 30 + rng.uniform_int(80);
        std::vector<double> a(n), b(n), w(n);
        for (int i = 0; i < n; ++i) {
            a[i] = rng.uniform(-2, 2);
            b[i] = rng.uniform(-2, 2);
            w[i] = rng.uniform(0.05, 1.0);
        }
        WeightedSample ua(a, w), ub(b, w);
        if (!hardy_littlewood_check(ua, ub).holds) ++hl_violations;
        if (inst < 50) {
            StepRearrangement st = decreasing_rearrangement(ua);
            std::vector<double> rv, rw;
            for (std::size_t j = 0; j < st.plateau_values.size(); ++j) {
                rv.push_back(st.plateau_values[j]);
                rw.push_back(st.breakpoints[j + 1] - st.breakpoints[j]);
            }
            WeightedSample ur(rv, rw);
            for (int kt = 0; kt < 8; ++kt) {
                double t = rng.uniform(0.0, 2.0);
                double d0 = distribution_function(ua, t), d1 = distribution_function(ur, t);
                worst_equi = std::max(worst_equi,
                                      std::abs(d0 - d1) / std::max(1.0, std::abs(d0)));
            }
            for (double pexp : {1.0, 2.0, 5.0}) {
                double n0 = 0, n1 = 0;
                for (int i = 0; i < n; ++i) n0 += std::pow(std::abs(a[i]), pexp) * w[i];
                for (std::size_t i = 0; i < rv.size(); ++i)
                    n1 += std::pow(std::abs(rv[i]), pexp) * rw[i];
                worst_norm = std::max(worst_norm, std::abs(n0 - n1) / n0);
            }
            double m0 = 0;
            for (int i = 0; i < n; ++i) m0 = std::max(m0, std::abs(a[i]));
            worst_norm = std::max(worst_norm, std::abs(m0 - st.max_value()) / m0);
        }
    }
    report(3, "rearrangement exactness and Hardy-Littlewood",
           worst_norm <= 1e-12 && worst_equi <= 1e-12 && hl_violations == 0,
           "norm=" + fmt17(worst_norm) + " equi=" + fmt17(worst_equi) +
               " hl_violations=" + std::to_string(hl_violations));
}

// -------------------------------------------------------------- criterion 4

void criterion_riesz() {
    RieszSuiteResult c32 = run_riesz_suite(100, 32, 99, {0.5, 2.0});
    RieszSuiteResult c64 = run_riesz_suite(20, 64, 99, {0.5, 2.0});
    bool pass = c32.violations == 0 && c64.worst_violation <= c32.worst_violation + 1e-12;
    report(4, "Riesz checker at 32x32 plus refinement", pass,
           "worst32=" + fmt17(c32.worst_violation) + " worst64=" + fmt17(c64.worst_violation));
}

// -------------------------------------------------------------- criterion 5

void criterion_torsion() {
    KernelParams p{2, 0.5};
    double lam = torsion_coefficient(p);
    double prev = 1e300, final_err = 0;
    bool decreasing = true;
    double t0 = wall();
    for (int M : {64, 128, 256}) {
        auto g = make_radial_mesh(1.0, M, p);
        RadialFunction u = solve_linear_radial(g, [](double) { return 1.0; }, 0.0);
        double err = 0;
        for (std::size_t i = 0; i < g->nodes.size(); ++i) {
            double exact = lam * std::pow(1.0 - g->nodes[i] * g->nodes[i], p.s);
            err = std::max(err, std::abs(u.values[i] - exact));
        }
        err /= lam;  // relative to the sup of the exact solution
        decreasing = decreasing && err < prev;
        prev = err;
        final_err = err;
    }
    double dt = wall() - t0;
    report(5, "torsion benchmark (sup-relative error, M = 64/128/256)",
           final_err <= 0.02 && decreasing && dt <= 60.0,
           "err256=" + fmt17(final_err) + " decreasing=" + std::to_string(decreasing) +
               " time=" + fmt17(dt) + "s");
}

// -------------------------------------------------------------- criterion 6

void criterion_disk_crosscheck() {
    auto dom = build_domain(Shape::disk(1.0), 1.0 / 64);
    Operator2D op(dom, 0.5);
    GridFunction2D f(dom, std::vector<double>(dom->size(), 1.0));
    GridFunction2D u = solve_linear_2d(op, f, 0.0);
    auto grid = make_radial_mesh(1.0, 256, KernelParams{2, 0.5});
    RadialFunction v = solve_linear_radial(grid, [](double) { return 1.0; }, 0.0);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < dom->size(); ++i) {
        double r = std::hypot(dom->cx[i], dom->cy[i]);
        double d = u.values[i] - v(r);
        num += d * d;
        den += v(r) * v(r);
    }
    double rel = std::sqrt(num / den);
    report(6, "planar-radial cross-check on the disk at h = R/64", rel <= 0.03,
           "l2_rel=" + fmt17(rel));
}

// -------------------------------------------------------------- criterion 7

void criterion_singular_contracts() {
    bool pass = true;
    std::string detail;
    {
        KernelParams p{2, 0.5};
        auto g = make_radial_mesh(1.0, 96, p);
        RadialSystem sys(g);
        double gamma = 1.0;
        auto res = sys.solve_singular([](double) { return 1.0; }, gamma, 0.0,
                                      default_k_schedule(1024));
        pass = pass && res.report.converged && res.report.monotonicity_margin >= -1e-8 &&
               res.report.last_sweep_diff <= 1e-6;
        detail += "radial_mono=" + fmt17(res.report.monotonicity_margin) +
                  " radial_diff=" + fmt17(res.report.last_sweep_diff);
        for (double lambda : {2.0, 10.0}) {
            double alpha = 1.0 / (1.0 + gamma);
            std::vector<double> ks = default_k_schedule(1024);
            for (double& k : ks) k /= std::pow(lambda, alpha);
            auto res2 = sys.solve_singular([lambda](double) { return lambda; }, gamma, 0.0, ks);
            double fac = std::pow(lambda, alpha), worst = 0;
            for (std::size_t i = 0; i < res.solution.values.size(); ++i)
                worst = std::max(worst, std::abs(res2.solution.values[i] -
                                                 fac * res.solution.values[i]));
            worst /= fac * res.solution.max_value();
            pass = pass && worst <= 1e-8;
            detail += " hom" + fmt17(lambda).substr(0, 2) + "=" + fmt17(worst);
        }
    }
    {
        auto dom = build_domain(Shape::disk(1.0), 1.0 / 12);
        Operator2D op(dom, 0.5);
        GridFunction2D f(dom, std::vector<double>(dom->size(), 1.0));
        auto [u, rep] = solve_singular_2d(op, f, 1.0, 0.0, default_k_schedule(1024));
        pass = pass && rep.converged && rep.monotonicity_margin >= -1e-8 &&
               rep.last_sweep_diff <= 1e-6;
        detail += " planar_mono=" + fmt17(rep.monotonicity_margin);
    }
    report(7, "singular-scheme contracts (monotone, converged, homogeneous)", pass, detail);
}

// ---------------------------------------------------------- criteria 8 + 9

void criterion_theorems() {
    struct Case {
        Shape shape;
        bool gaussian;
        double gamma, s;
    };
    std::vector<Case> cases;
    for (int sh = 0; sh < 2; ++sh)
        for (int ff = 0; ff < 2; ++ff)
            for (double gm : {0.5, 2.0})
                for (double s : {0.3, 0.7})
                    cases.push_back({sh == 0 ? Shape::square(2.0) : Shape::ellipse(1.5, 0.75),
                                     ff == 1, gm, s});
    bool pass1 = true, pass2 = true;
    double worst1 = -1e300, worst2 = -1e300;
    const double t_start = wall();
    for (const Case& cs : cases) {
        ProblemSpec spec;
        spec.shape = cs.shape;
        spec.h = 1.0 / 20;
        spec.s = cs.s;
        spec.gamma = cs.gamma;
        spec.M = 128;
        if (cs.gaussian) {
            spec.fkind = ProblemSpec::FKind::gaussian;
            spec.gx = 0.3;
            spec.gy = 0.2;
            spec.gsigma = 0.4;
            spec.gamp = 1.0;
        }
        PlanarInstance inst = solve_planar_instance(spec);
        TheoremResult r1 = verify_theorem1_on(inst, spec.M, 0.01, spec.k_max);
        TheoremResult r2 = verify_theorem2_on(inst, spec.M, 0.01);
        pass1 = pass1 && r1.holds;
        pass2 = pass2 && r2.holds;
        worst1 = std::max(worst1, r1.margin_rel);
        worst2 = std::max(worst2, r2.margin_rel);
    }
    // refinement step on the square / f == 1 instance
    ProblemSpec spec;
    spec.shape = Shape::square(2.0);
    spec.gamma = 0.5;
    spec.s = 0.3;
    spec.h = 1.0 / 20;
    spec.M = 128;
    TheoremResult coarse = verify_theorem1(spec);
    spec.h = 1.0 / 40;
    spec.M = 256;
    TheoremResult fine = verify_theorem1(spec);
    bool nogrow = fine.margin_rel <= coarse.margin_rel + 1e-3;
    double dt = wall() - t_start;
    report(8, "Theorem 1.1 concentration comparison (16-case matrix + refinement)",
           pass1 && nogrow && dt <= 900.0,
           "worst_margin_rel=" + fmt17(worst1) + " refine:" + fmt17(coarse.margin_rel) + "->" +
               fmt17(fine.margin_rel) + " time=" + fmt17(dt) + "s");

    // radial N=3 instance for Theorem 1.2
    ProblemSpec rad;
    rad.radial_only = true;
    rad.N = 3;
    rad.s = 0.3;
    rad.gamma = 2.0;
    rad.M = 128;
    rad.fkind = ProblemSpec::FKind::radial_power;
    rad.fpower = -0.5;
    TheoremResult r3 = verify_theorem2(rad);
    pass2 = pass2 && r3.holds;
    worst2 = std::max(worst2, r3.margin_rel);
    report(9, "Theorem 1.2 concentration comparison (matrix + radial N=3)", pass2,
           "worst_margin_rel=" + fmt17(worst2));
}

// ------------------------------------------------------------- criterion 10

void criterion_energy() {
    ProblemSpec spec;
    spec.shape = Shape::square(2.0);
    spec.h = 1.0 / 16;
    spec.s = 0.5;
    spec.gamma = 1.0;
    spec.M = 128;
    PlanarInstance inst = solve_planar_instance(spec);
    EnergyResult sq = verify_energy(inst, spec.M);

    ProblemSpec ctrl;
    ctrl.shape = Shape::disk(1.0);
    ctrl.h = 1.0 / 64;
    ctrl.s = 0.5;
    ctrl.gamma = 1e-12;
    ctrl.M = 256;
    ctrl.k_max = 4;
    PlanarInstance cinst = solve_planar_instance(ctrl);
    EnergyResult ck = verify_energy(cinst, ctrl.M);
    bool control_close = std::abs(ck.lhs - ck.rhs) <= 0.05 * ck.rhs;
    report(10, "energy estimate (square) and disk control case", sq.holds && control_close,
           "square " + fmt17(sq.lhs) + " <= 1.05*" + fmt17(sq.rhs) + "; disk " + fmt17(ck.lhs) +
               " ~ " + fmt17(ck.rhs));
}

// ------------------------------------------------------------- criterion 11

void criterion_regularity() {
    struct Cfg {
        int N;
        double s, p;
        int expect_regime;
        double expect_q;
    };
    std::vector<Cfg> cfgs = {{3, 0.3, 3.0, 1, 15.0}, {3, 0.5, 3.0, 2, 0.0}, {2, 0.5, 4.0, 3, 0.0}};
    bool pass = true;
    std::string detail;
    for (const Cfg& cfg : cfgs) {
        KernelParams kp{cfg.N, cfg.s};
        auto grid = make_radial_mesh(1.0, 64, kp);
        RadialSystem sys(grid);
        double gamma = 1.0, ratio0 = 0;
        int regime = 0;
        bool stable = true;
        for (double lam : {1.0, 2.0, 4.0}) {
            auto res = sys.solve_singular([lam](double) { return lam; }, gamma, 0.0,
                                          default_k_schedule(1024));
            WeightedSample us = sample_radial(res.solution);
            WeightedSample fs = us;
            for (auto& v : fs.values) v = lam;
            RegularityResult rr = verify_regularity(us, fs, cfg.p, gamma, kp);
            regime = rr.regime;
            if (lam == 1.0) {
                ratio0 = rr.ratio;
                if (cfg.expect_regime == 1 &&
                    std::abs(rr.q - cfg.expect_q) > 1e-12 * cfg.expect_q)
                    pass = false;
            } else if (std::abs(rr.ratio - ratio0) > 1e-3 * ratio0) {
                stable = false;
            }
        }
        pass = pass && regime == cfg.expect_regime && stable;
        detail += " regime" + std::to_string(regime) + "_ratio=" + fmt17(ratio0);
    }
    report(11, "regularity regimes and ratio stability under f-scaling", pass, detail);
}

// ------------------------------------------------------------- criterion 12

void criterion_lemmas() {
    LemmaReport m = run_maxmin_suite(1000, 12001);
    LemmaReport a = run_ab_suite(100000, 12002);
    LemmaReport ch = run_chain_rule_suite(300, 12003);
    bool pass = m.violations == 0 && a.violations == 0 && ch.violations == 0;
    report(12, "lemma suites (maxmin 1000, ab 1e5, chain rule 300)", pass,
           "maxmin=" + std::to_string(m.violations) + " ab=" + std::to_string(a.violations) +
               " chain=" + std::to_string(ch.violations));
}

}  // namespace

int main() {
    std::printf("fracsymm acceptance suite\n");
    double t0 = wall();
    criterion_kernel();
    criterion_rearrangement();
    criterion_riesz();
    criterion_torsion();
    criterion_disk_crosscheck();
    criterion_singular_contracts();
    criterion_theorems();
    criterion_energy();
    criterion_regularity();
    criterion_lemmas();
    std::printf("total time: %.1fs\n", wall() - t0);
    std::printf(g_failures == 0 ? "ALL CRITERIA PASS\n" : "%d CRITERIA FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
