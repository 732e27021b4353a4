#include "fracsymm/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "fracsymm/errors.hpp"
#include "fracsymm/util.hpp"

namespace fracsymm {

double g_test_function(double t, double h, double theta) {
    if (!(h > 0)) throw std::domain_error("g_test_function: h must be positive");
    return std::clamp(theta - t, 0.0, h);
}

// --------------------------------------------------------------- max / min

namespace {

// cumulative trapezoid of f * rho^{N-1}
std::vector<double> cum_weighted(const std::vector<double>& r, const std::vector<double>& f,
                                 int N) {
    std::vector<double> c(r.size(), 0.0);
    for (std::size_t i = 1; i < r.size(); ++i) {
        double g0 = f[i - 1] * std::pow(r[i - 1], N - 1);
        double g1 = f[i] * std::pow(r[i], N - 1);
        c[i] = c[i - 1] + 0.5 * (g0 + g1) * (r[i] - r[i - 1]);
    }
    return c;
}

void record(LemmaReport& rep, double slack, double tol) {
    rep.worst_margin = std::min(rep.worst_margin, slack);
    if (slack < -tol) ++rep.violations;
}

}  // namespace

void maxmin_lemma_check(const std::vector<double>& r, const std::vector<double>& u,
                        const std::vector<double>& v, const WeightFunction& h, int N,
                        LemmaReport& rep) {
    if (r.size() < 200) throw std::domain_error("maxmin_lemma_check: need >= 200 samples");
    if (u.size() != r.size() || v.size() != r.size() || h.values.size() != r.size())
        throw std::invalid_argument("maxmin_lemma_check: sample size mismatch");
    // h must be positive on the open interval (endpoints may vanish)
    double hpos = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (h.values[i] < 0)
            throw std::invalid_argument("maxmin_lemma_check: weight must be nonnegative");
        hpos = std::max(hpos, h.values[i]);
        if (i > 0 && i + 1 < r.size() && h.values[i] == 0.0 && h.values[i - 1] > 0.0)
            throw std::invalid_argument("maxmin_lemma_check: weight vanishes in the interior");
        if (i > 0 && (h.increasing ? h.values[i] < h.values[i - 1] - 1e-14
                                   : h.values[i] > h.values[i - 1] + 1e-14))
            throw std::invalid_argument("maxmin_lemma_check: weight monotonicity violated");
    }
    if (hpos == 0.0) throw std::invalid_argument("maxmin_lemma_check: weight is identically 0");
    ++rep.instances_run;
    const std::size_t n = r.size();
    std::vector<double> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = u[i] - v[i];
    std::vector<double> Hd = cum_weighted(r, diff, N);
    std::vector<double> hw(n);
    double hmax = 0;
    for (std::size_t i = 0; i < n; ++i) {
        hw[i] = diff[i] * h.values[i];
        hmax = std::max(hmax, h.values[i]);
    }
    std::vector<double> Wd = cum_weighted(r, hw, N);
    std::vector<double> absd(n);
    for (std::size_t i = 0; i < n; ++i) absd[i] = std::abs(diff[i]);
    double scale = cum_weighted(r, absd, N).back() * hmax + 1e-300;
    const double tol = 1e-10 * scale;

    if (h.increasing) {
        std::size_t imax = std::max_element(Hd.begin(), Hd.end()) - Hd.begin();
        double hd = Hd[imax];
        if (hd > tol && imax > 0) {
            // positive maximum at rbar > 0: strict weighted inequality
            record(rep, Wd[imax], tol);
        } else if (std::abs(hd) <= tol) {
            // zero-maximum variant: >= 0
            record(rep, Wd[imax], tol);
        }
        // else: no qualifying extremum; skipped
    } else {
        // K_u - K_v = Hd(R) - Hd(r); its min sits at the argmax of Hd
        std::size_t imin = 0;
        double kmin = 1e300;
        for (std::size_t i = 0; i < n; ++i) {
            double kd = Hd.back() - Hd[i];
            if (kd < kmin) {
                kmin = kd;
                imin = i;
            }
        }
        if (kmin < -tol && imin + 1 < n) {
            double tail = Wd.back() - Wd[imin];
            record(rep, -tail, tol);  // conclusion: tail integral < 0
        } else if (std::abs(kmin) <= tol) {
            double tail = Wd.back() - Wd[imin];
            record(rep, -tail, tol);
        }
    }

    // duality: an interior positive maximum of Hd forces a non-positive
    // minimum of Kd at the same point
    std::size_t imax = std::max_element(Hd.begin(), Hd.end()) - Hd.begin();
    if (Hd[imax] > tol && imax > 0 && imax + 1 < n) {
        double kd_at = Hd.back() - Hd[imax];
        double kmin = 1e300;
        for (std::size_t i = 0; i < n; ++i) kmin = std::min(kmin, Hd.back() - Hd[i]);
        record(rep, -kd_at, tol);          // Kd(rbar) <= 0
        record(rep, tol - (kd_at - kmin), tol);  // attained minimum (within tol)
    }
}

AbResult ab_inequality_check(double a, double b, double gamma) {
    if (!(a > 0 && b > 0 && gamma > 0))
        throw std::domain_error("ab_inequality_check: requires a, b, gamma > 0");
    double lhs = std::pow(a, -gamma) - std::pow(b, -gamma);
    double rhs = gamma * std::pow(a, -gamma - 1.0) * (b - a);
    bool holds = lhs <= rhs + 1e-12 * (std::abs(lhs) + std::abs(rhs) + 1.0);
    return {lhs, rhs, holds};
}

ChainRuleResult chain_rule_check(const Operator2D& op, const std::vector<double>& u,
                                 const std::function<double(double)>& Phi,
                                 const std::function<double(double)>& dPhi,
                                 const std::vector<double>& phi, bool convex) {
    const std::size_t n = u.size();
    // bilinear form B(p,q) = sum_{i!=j}(p_i-p_j)(q_i-q_j) K a a + 2 sum p q T a
    // equals (2/gamma_ns) sum_i p_i (A q)_i a.
    auto B = [&](const std::vector<double>& pv, const std::vector<double>& qv) {
        std::vector<double> aq = op.apply(qv);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += pv[i] * aq[i];
        return 2.0 / op.frac_constant() * acc * op.domain().cell_area();
    };
    std::vector<double> Pu(n), psi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Pu[i] = Phi(u[i]);
        psi[i] = dPhi(u[i]) * phi[i];
    }
    double lhs = B(Pu, phi);
    double rhs = B(u, psi);
    bool holds = convex ? lhs <= rhs + 1e-9 * std::abs(rhs)
                        : lhs >= rhs - 1e-9 * std::abs(rhs);
    return {lhs, rhs, holds};
}

// ------------------------------------------------------------------ suites

LemmaReport run_maxmin_suite(long instances, std::uint64_t seed, int samples) {
    Rng rng(seed);
    LemmaReport rep{"maxmin", 0, 0, 1e300};
    const double R = 1.0;
    std::vector<double> r(samples);
    for (int i = 0; i < samples; ++i) r[i] = R * i / (samples - 1.0);
    for (long inst = 0; inst < instances; ++inst) {
        int N = 2 + rng.uniform_int(3);
        auto profile = [&](std::vector<double>& f) {
            double a[4], b[4];
            for (int m = 0; m < 4; ++m) {
                a[m] = rng.uniform(-1, 1);
                b[m] = rng.uniform(-1, 1);
            }
            for (int i = 0; i < samples; ++i) {
                double t = 0;
                for (int m = 0; m < 4; ++m)
                    t += a[m] * std::cos(m * M_PI * r[i] / R) +
                         b[m] * std::sin(m * M_PI * r[i] / R);
                f[i] = t * t;  // nonnegative continuous
            }
        };
        std::vector<double> u(samples), v(samples);
        profile(u);
        profile(v);
        WeightFunction h;
        h.increasing = rng.uniform() < 0.5;
        h.values.resize(samples);
        double c0 = rng.uniform(0.05, 1.0), c1 = rng.uniform(0.1, 2.0);
        double pw = rng.uniform(0.5, 3.0);
        for (int i = 0; i < samples; ++i) {
            double t = r[i] / R;
            h.values[i] = c0 + c1 * std::pow(h.increasing ? t : 1.0 - t, pw);
        }
        maxmin_lemma_check(r, u, v, h, N, rep);
    }
    return rep;
}

LemmaReport run_ab_suite(long instances, std::uint64_t seed) {
    Rng rng(seed);
    LemmaReport rep{"ab", 0, 0, 1e300};
    for (long i = 0; i < instances; ++i) {
        double a = rng.log_uniform(1e-3, 1e3);
        double b = rng.log_uniform(1e-3, 1e3);
        double g = rng.log_uniform(1e-2, 1e1);
        AbResult res = ab_inequality_check(a, b, g);
        ++rep.instances_run;
        double slack = res.rhs - res.lhs;
        double tol = 1e-12 * (std::abs(res.lhs) + std::abs(res.rhs) + 1.0);
        rep.worst_margin = std::min(rep.worst_margin, slack / (std::abs(res.rhs) + 1.0));
        if (slack < -tol) ++rep.violations;
    }
    return rep;
}

LemmaReport run_chain_rule_suite(long instances, std::uint64_t seed) {
    Rng rng(seed);
    LemmaReport rep{"chain_rule", 0, 0, 1e300};
    auto dom = build_domain(Shape::disk(1.0), 1.0 / 8);
    Operator2D op(dom, 0.5);
    const std::size_t n = dom->size();
    for (long inst = 0; inst < instances; ++inst) {
        std::vector<double> u(n), phi(n);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = rng.uniform(0.0, 2.0);
            phi[i] = rng.uniform(0.0, 1.0);
        }
        int fam = int(inst % 3);
        std::function<double(double)> Phi, dPhi;
        if (fam == 0) {
            Phi = [](double t) { return t; };
            dPhi = [](double) { return 1.0; };
        } else if (fam == 1) {
            Phi = [](double t) { return t * t; };
            dPhi = [](double t) { return 2.0 * t; };
        } else {
            double th = rng.uniform(0.0, 1.5);
            Phi = [th](double t) { return std::max(t - th, 0.0); };
            dPhi = [th](double t) { return t > th ? 1.0 : 0.0; };
        }
        ChainRuleResult res = chain_rule_check(op, u, Phi, dPhi, phi, true);
        ++rep.instances_run;
        double slack = (res.rhs - res.lhs) / (std::abs(res.rhs) + 1e-300);
        rep.worst_margin = std::min(rep.worst_margin, slack);
        if (!res.holds) ++rep.violations;
    }
    return rep;
}

RieszSuiteResult run_riesz_suite(long instances, int cells_across, std::uint64_t seed,
                                 const std::vector<double>& alphas) {
    Rng rng(seed);
    RieszSuiteResult out;
    auto dom = build_domain(Shape::disk(1.0), 2.0 / cells_across);
    auto bump_mix = [&](GridFunction2D& f) {
        int nb = 1 + rng.uniform_int(3);
        struct B {
            double cx, cy, s2, amp;
            bool indicator;
        };
        std::vector<B> bs;
        for (int b = 0; b < nb; ++b) {
            B bb;
            bb.cx = rng.uniform(-0.35, 0.35);
            bb.cy = rng.uniform(-0.35, 0.35);
            double sg = rng.uniform(0.08, 0.2);
            bb.s2 = sg * sg;
            bb.amp = rng.uniform(0.3, 1.0);
            bb.indicator = rng.uniform() < 0.4;
            bs.push_back(bb);
        }
        for (std::size_t i = 0; i < dom->size(); ++i) {
            double val = 0;
            for (const auto& bb : bs) {
                double d2 = (dom->cx[i] - bb.cx) * (dom->cx[i] - bb.cx) +
                            (dom->cy[i] - bb.cy) * (dom->cy[i] - bb.cy);
                val += bb.indicator ? (d2 < bb.s2 * 4 ? bb.amp : 0.0)
                                    : bb.amp * std::exp(-d2 / (2 * bb.s2));
            }
            f.values[i] = val;
        }
    };
    for (long inst = 0; inst < instances; ++inst) {
        GridFunction2D u(dom), v(dom);
        bump_mix(u);
        bump_mix(v);
        double t = rng.uniform(0.0, 0.8), hstep = rng.uniform(0.1, 1.0);
        auto G = [t, hstep](double x) { return g_test_function(t, hstep, x); };
        for (double alpha : alphas) {
            RieszResult r = riesz_check(u, v, alpha, G);
            ++out.instances;
            out.worst_violation = std::max(out.worst_violation, r.violation_rel);
            if (r.violation_rel > 1e-3) ++out.violations;
        }
    }
    return out;
}

// ------------------------------------------------------- theorem verifiers

double ProblemSpec::f_xy(double x, double y) const {
    switch (fkind) {
        case FKind::constant: return fconst;
        case FKind::gaussian: {
            double d2 = (x - gx) * (x - gx) + (y - gy) * (y - gy);
            return gamp * std::exp(-d2 / (2 * gsigma * gsigma));
        }
        case FKind::radial_power: {
            double r = std::hypot(x, y);
            return std::pow(std::max(r, 1e-6), fpower);
        }
    }
    return 0.0;
}

PlanarInstance solve_planar_instance(const ProblemSpec& spec) {
    PlanarInstance inst;
    inst.dom = build_domain(spec.shape, spec.h);
    inst.op = assemble_operator_2d(inst.dom, spec.s);
    inst.f = GridFunction2D(inst.dom);
    for (std::size_t i = 0; i < inst.dom->size(); ++i)
        inst.f.values[i] = spec.f_xy(inst.dom->cx[i], inst.dom->cy[i]);
    inst.s = spec.s;
    inst.gamma = spec.gamma;
    inst.c = spec.c;
    auto [u, rep] = solve_singular_2d(*inst.op, inst.f, spec.gamma, spec.c,
                                      default_k_schedule(spec.k_max));
    inst.u = std::move(u);
    inst.report = rep;
    return inst;
}

namespace {

TheoremResult compare_concentrations(const ConcentrationCurve& cu, const ConcentrationCurve& cv,
                                     double tol_rel) {
    TheoremResult res;
    std::vector<double> vols = cu.volumes;
    vols.insert(vols.end(), cv.volumes.begin(), cv.volumes.end());
    std::sort(vols.begin(), vols.end());
    vols.erase(std::unique(vols.begin(), vols.end()), vols.end());
    res.margin = -1e300;
    for (double sig : vols) {
        double m = cu.value(sig) - cv.value(sig);
        if (m > res.margin) {
            res.margin = m;
            res.worst_volume = sig;
        }
    }
    res.tol_abs = tol_rel * cv.total_mass();
    res.margin_rel = res.margin / cv.total_mass();
    res.holds = res.margin <= res.tol_abs;
    res.cu = cu;
    res.cv = cv;
    return res;
}

}  // namespace

TheoremResult verify_theorem1_on(const PlanarInstance& inst, int M, double tol_rel,
                                 double k_max) {
    const PlanarDomain& d = *inst.dom;
    double fmax = 0.0;
    for (double v : inst.f.values) fmax = std::max(fmax, v);
    double Rstar = std::sqrt(d.area() / M_PI);
    auto grid = make_radial_mesh(Rstar, M, {2, inst.s});
    RadialSystem sys(grid);
    auto sing = sys.solve_singular([fmax](double) { return fmax; }, inst.gamma, inst.c,
                                   default_k_schedule(k_max));
    WeightedSample us(inst.u.values, std::vector<double>(d.size(), d.cell_area()));
    ConcentrationCurve cu = concentration_curve(decreasing_rearrangement(us));
    ConcentrationCurve cv = radial_concentration(sing.solution, 1.0, cu.volumes);
    TheoremResult res = compare_concentrations(cu, cv, tol_rel);
    res.solve_report = sing.report;
    return res;
}

TheoremResult verify_theorem1(const ProblemSpec& spec) {
    PlanarInstance inst = solve_planar_instance(spec);
    return verify_theorem1_on(inst, spec.M, spec.tol_rel, spec.k_max);
}

TheoremResult verify_theorem2_on(const PlanarInstance& inst, int M, double tol_rel) {
    const PlanarDomain& d = *inst.dom;
    double Rstar = std::sqrt(d.area() / M_PI);
    WeightedSample fs(inst.f.values, std::vector<double>(d.size(), d.cell_area()));
    StepRearrangement fstar = decreasing_rearrangement(fs);
    const double omega2 = M_PI;
    auto grid = make_radial_mesh(Rstar, M, {2, inst.s});
    RadialSystem sys(grid);
    double gm = inst.gamma;
    RadialFunction v = sys.solve_linear(
        [&](double r) { return (gm + 1.0) * fstar.value(omega2 * r * r); }, inst.c);
    std::vector<double> up(inst.u.values);
    for (double& x : up) x = std::pow(x, gm + 1.0);
    WeightedSample us(up, std::vector<double>(d.size(), d.cell_area()));
    ConcentrationCurve cu = concentration_curve(decreasing_rearrangement(us));
    ConcentrationCurve cv = radial_concentration(v, 1.0, cu.volumes);
    return compare_concentrations(cu, cv, tol_rel);
}

TheoremResult verify_theorem2(const ProblemSpec& spec) {
    if (spec.radial_only) {
        // radial shortcut: f radial nonincreasing on the ball, u and v both
        // produced by the radial solver
        KernelParams p{spec.N, spec.s};
        auto grid = make_radial_mesh(1.0, spec.M, p);
        double r1 = grid->nodes[1];
        double cap = std::pow(r1, spec.fpower);
        auto f = [&](double r) { return std::min(std::pow(std::max(r, 1e-300), spec.fpower), cap); };
        RadialSystem sys(grid);
        auto sing = sys.solve_singular(f, spec.gamma, spec.c, default_k_schedule(spec.k_max));
        double gm = spec.gamma;
        RadialFunction v = sys.solve_linear([&](double r) { return (gm + 1.0) * f(r); }, spec.c);
        ConcentrationCurve cu = radial_concentration(sing.solution, gm + 1.0);
        ConcentrationCurve cv = radial_concentration(v, 1.0, cu.volumes);
        TheoremResult res = compare_concentrations(cu, cv, spec.tol_rel);
        res.solve_report = sing.report;
        return res;
    }
    PlanarInstance inst = solve_planar_instance(spec);
    TheoremResult res = verify_theorem2_on(inst, spec.M, spec.tol_rel);
    res.solve_report = inst.report;
    return res;
}

EnergyResult verify_energy(const PlanarInstance& inst, int M, double slack) {
    std::vector<double> up(inst.u.values);
    for (double& x : up) x = std::pow(x, inst.gamma + 1.0);
    double lhs = std::sqrt(inst.op->seminorm_squared(up));

    const PlanarDomain& d = *inst.dom;
    double Rstar = std::sqrt(d.area() / M_PI);
    WeightedSample fs(inst.f.values, std::vector<double>(d.size(), d.cell_area()));
    StepRearrangement fstar = decreasing_rearrangement(fs);
    auto grid = make_radial_mesh(Rstar, M, {2, inst.s});
    RadialSystem sys(grid);
    double gm = inst.gamma;
    RadialFunction v =
        sys.solve_linear([&](double r) { return (gm + 1.0) * fstar.value(M_PI * r * r); }, inst.c);
    double rhs = std::sqrt(sys.energy_seminorm_squared(v));
    return {lhs, rhs, lhs <= rhs * (1.0 + slack)};
}

// ------------------------------------------------------------- regularity

double lp_norm(const WeightedSample& u, double p) {
    if (p == std::numeric_limits<double>::infinity()) {
        double m = 0;
        for (double v : u.values) m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0;
    for (std::size_t i = 0; i < u.values.size(); ++i)
        acc += std::pow(std::abs(u.values[i]), p) * u.weights[i];
    return std::pow(acc, 1.0 / p);
}

double luxemburg_norm(const WeightedSample& u, const std::function<double(double)>& Phi) {
    double umax = 0;
    for (double v : u.values) umax = std::max(umax, std::abs(v));
    if (umax == 0) return 0.0;
    auto S = [&](double lam) {
        double acc = 0;
        for (std::size_t i = 0; i < u.values.size(); ++i)
            acc += Phi(std::abs(u.values[i]) / lam) * u.weights[i];
        return acc;
    };
    double lo = 1e-6 * umax, hi = 1e6 * umax;
    if (S(hi) > 1.0) throw numerical_error("luxemburg_norm: bracket too small");
    if (S(lo) <= 1.0) return lo;
    // defining integral is monotone in lambda; bisect
    while (hi - lo > 1e-8 * hi) {
        double mid = 0.5 * (lo + hi);
        (S(mid) <= 1.0 ? hi : lo) = mid;
    }
    return hi;
}

RegularityResult verify_regularity(const WeightedSample& u, const WeightedSample& f, double p,
                                   double gamma, const KernelParams& params) {
    RegularityResult out;
    double crit = critical_exponent(params);
    if (p < crit - 1e-12)
        throw std::domain_error("verify_regularity: hypothesis p >= 2N/(N-2s) fails");
    double thresh = params.N / (2.0 * params.s);
    double fp = lp_norm(f, p);
    out.rhs_norm = std::pow(fp, 1.0 / (gamma + 1.0));
    if (std::abs(p - thresh) <= 1e-12 * thresh) {
        out.regime = 2;
        double pprime = p / (p - 1.0);
        double expo = (gamma + 1.0) * pprime;
        auto Phi = [expo](double t) {
            double a = std::pow(t, expo);
            return a > 700 ? std::numeric_limits<double>::infinity() : std::exp(a) - 1.0;
        };
        out.lhs_norm = luxemburg_norm(u, Phi);
    } else if (p < thresh) {
        out.regime = 1;
        out.q = params.N * p * (gamma + 1.0) / (params.N - 2.0 * params.s * p);
        out.lhs_norm = lp_norm(u, out.q);
    } else {
        out.regime = 3;
        out.lhs_norm = lp_norm(u, std::numeric_limits<double>::infinity());
    }
    out.ratio = out.lhs_norm / out.rhs_norm;
    return out;
}

WeightedSample sample_radial(const RadialFunction& u, int per_element) {
    const RadialGrid& g = *u.grid;
    const GaussRule& gl = gauss_legendre(per_element);
    const double Nw = g.params.N * unit_ball_volume(g.params.N);
    std::vector<double> vals, wts;
    for (int e = 1; e <= g.M(); ++e) {
        double lo = g.nodes[e - 1], hi = g.nodes[e];
        for (std::size_t q = 0; q < gl.x.size(); ++q) {
            double r = lo + (hi - lo) * gl.x[q];
            vals.push_back(u(r));
            wts.push_back((hi - lo) * gl.w[q] * Nw * std::pow(r, g.params.N - 1));
        }
    }
    return WeightedSample(std::move(vals), std::move(wts));
}

}  // namespace fracsymm
