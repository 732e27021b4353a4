// Command-line driver: kernel tables, rearrangement pipelines, the radial
// and planar solvers, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
// failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fracsymm/analysis.hpp"
#include "fracsymm/errors.hpp"
#include "fracsymm/io.hpp"
#include "fracsymm/kernel.hpp"
#include "fracsymm/planar.hpp"
#include "fracsymm/radial.hpp"
#include "fracsymm/rearrange.hpp"
#include "fracsymm/util.hpp"

using namespace fracsymm;

namespace {

struct Common {
    std::string out_dir;
    int threads = 0;
    std::uint64_t seed = 42;
    bool plot = false;
    std::vector<std::pair<std::string, std::string>> manifest;

    void note(const std::string& k, const std::string& v) { manifest.emplace_back(k, v); }
    void note(const std::string& k, double v) { manifest.emplace_back(k, fmt17(v)); }
    std::string path(const std::string& name) const {
        return out_dir.empty() ? name : out_dir + "/" + name;
    }
    void finish(const std::string& cmd) {
        note("subcommand", cmd);
        note("seed", fmt17(double(seed)));
        if (!out_dir.empty()) ensure_dir(out_dir);
        write_manifest(out_dir, manifest);
    }
};

Shape parse_shape(const std::string& s) {
    auto colon = s.find(':');
    std::string kind = s.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (kind == "disk") return Shape::disk(std::stod(args));
    if (kind == "square") return Shape::square(std::stod(args));
    if (kind == "ellipse") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--shape", "ellipse:a,b");
        return Shape::ellipse(std::stod(args.substr(0, comma)), std::stod(args.substr(comma + 1)));
    }
    throw CLI::ValidationError("--shape", "expected disk:R | square:L | ellipse:a,b");
}

void parse_f(const std::string& fspec, ProblemSpec& ps) {
    auto colon = fspec.find(':');
    std::string kind = fspec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : fspec.substr(colon + 1);
    if (kind == "const") {
        ps.fkind = ProblemSpec::FKind::constant;
        ps.fconst = std::stod(args);
        return;
    }
    if (kind == "gauss") {
        std::replace(args.begin(), args.end(), ',', ' ');
        std::istringstream is(args);
        if (!(is >> ps.gx >> ps.gy >> ps.gsigma >> ps.gamp))
            throw CLI::ValidationError("--f", "gauss:x0,y0,sigma,amp");
        ps.fkind = ProblemSpec::FKind::gaussian;
        return;
    }
    throw CLI::ValidationError("--f", "expected const:v | gauss:x0,y0,sigma,amp");
}

void print_report(std::ostream& os, const SolveReport& rep) {
    os << "converged = " << (rep.converged ? "yes" : "no") << "\n";
    std::string ks, its;
    for (std::size_t i = 0; i < rep.k_used.size(); ++i) {
        ks += (i ? " " : "") + fmt17(rep.k_used[i]);
        its += (i ? " " : "") + std::to_string(rep.newton_iters[i]);
    }
    os << "k_schedule = " << ks << "\n";
    os << "newton_iters = " << its << "\n";
    os << "final_residual = " << fmt17(rep.final_residual) << "\n";
    os << "monotonicity_margin = " << fmt17(rep.monotonicity_margin) << "\n";
    os << "last_sweep_diff = " << fmt17(rep.last_sweep_diff) << "\n";
    os << "interior_min = " << fmt17(rep.interior_min) << "\n";
    os << "wall_time_s = " << fmt17(rep.wall_time_s) << "\n";
}

int cmd_kernel(Common& c, int N, double s, std::vector<double> rs, std::vector<double> rhos) {
    KernelParams p{N, s};
    std::vector<std::vector<double>> rows;
    std::cout << "N,s,r,rho,theta,method,est_error\n";
    for (double r : rs)
        for (double rho : rhos) {
            if (r == rho) continue;
            ThetaEval e = theta(p, r, rho);
            std::cout << N << "," << fmt17(s) << "," << fmt17(r) << "," << fmt17(rho) << ","
                      << fmt17(e.value) << ","
                      << (e.method == ThetaMethod::hypergeometric ? "hypergeometric"
                                                                  : "angular-quadrature")
                      << "," << fmt17(e.est_error) << "\n";
            rows.push_back({double(N), s, r, rho, e.value,
                            e.method == ThetaMethod::hypergeometric ? 1.0 : 0.0, e.est_error});
        }
    if (!c.out_dir.empty()) {
        ensure_dir(c.out_dir);
        write_csv(c.path("kernel.csv"), "N,s,r,rho,theta,method_hyp,est_error", rows);
    }
    c.finish("kernel");
    return 0;
}

int cmd_rearrange(Common& c, const std::string& input) {
    std::vector<std::pair<double, double>> data;
    if (input == "-") {
        data = read_value_weight_csv(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) throw CLI::ValidationError("--in", "cannot open " + input);
        data = read_value_weight_csv(in);
    }
    std::vector<double> vals, wts;
    for (auto [v, w] : data) {
        vals.push_back(v);
        wts.push_back(w);
    }
    WeightedSample ws(vals, wts);
    StepRearrangement star = decreasing_rearrangement(ws);
    ConcentrationCurve curve = concentration_curve(star);
    std::vector<std::vector<double>> rows;
    std::cout << "sigma,ustar,ustarstar,concentration\n";
    for (double sig : curve.volumes) {
        double us = star.value(sig);
        double uss = sig > 0 ? maximal_function(star, sig) : star.max_value();
        double cc = curve.value(sig);
        std::cout << fmt17(sig) << "," << fmt17(us) << "," << fmt17(uss) << "," << fmt17(cc)
                  << "\n";
        rows.push_back({sig, us, uss, cc});
    }
    if (!c.out_dir.empty()) {
        ensure_dir(c.out_dir);
        write_csv(c.path("rearrange.csv"), "sigma,ustar,ustarstar,concentration", rows);
    }
    c.finish("rearrange");
    return 0;
}

int cmd_solve_radial(Common& c, int N, double s, double R, int M, double gamma, double cc,
                     const std::string& rhs_spec, double k_max) {
    KernelParams p{N, s};
    auto grid = make_radial_mesh(R, M, p);
    RadialSystem sys(grid);
    std::function<double(double)> rhs;
    bool torsion_check = rhs_spec == "torsion-check";
    RadialFunction rhs_file;
    if (torsion_check || rhs_spec == "const:1") {
        rhs = [](double) { return 1.0; };
    } else if (rhs_spec.rfind("const:", 0) == 0) {
        double v = std::stod(rhs_spec.substr(6));
        rhs = [v](double) { return v; };
    } else if (rhs_spec.rfind("file:", 0) == 0) {
        std::ifstream in(rhs_spec.substr(5));
        if (!in) throw CLI::ValidationError("--rhs", "cannot open rhs file");
        auto data = read_value_weight_csv(in);  // (r, value) rows
        std::vector<double> vv(grid->nodes.size(), 0.0);
        for (std::size_t i = 0; i < grid->nodes.size(); ++i) {
            double r = grid->nodes[i];
            // piecewise-linear interp of the file samples
            double best = 0.0;
            for (std::size_t k = 0; k + 1 < data.size(); ++k)
                if (r >= data[k].first && r <= data[k + 1].first) {
                    double t = (r - data[k].first) / (data[k + 1].first - data[k].first);
                    best = data[k].second + t * (data[k + 1].second - data[k].second);
                }
            vv[i] = best;
        }
        rhs_file = RadialFunction(grid, vv);
        rhs = [&rhs_file](double r) { return rhs_file(r); };
    } else {
        throw CLI::ValidationError("--rhs", "expected const:<v>|torsion-check|file:<csv>");
    }

    RadialFunction sol;
    SolveReport rep;
    if (gamma > 0) {
        auto res = sys.solve_singular(rhs, gamma, cc, default_k_schedule(k_max));
        sol = res.solution;
        rep = res.report;
    } else {
        auto t0 = std::chrono::steady_clock::now();
        sol = sys.solve_linear(rhs, cc);
        rep.converged = true;
        rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    std::vector<std::vector<double>> rows;
    if (torsion_check) {
        double lam = torsion_coefficient(p);
        double err = 0, scale = 0;
        for (std::size_t i = 0; i < grid->nodes.size(); ++i) {
            double r = grid->nodes[i];
            double exact = lam * std::pow(std::max(R * R - r * r, 0.0), s);
            err = std::max(err, std::abs(sol.values[i] - exact));
            scale = std::max(scale, exact);
            rows.push_back({r, sol.values[i], exact});
        }
        std::cout << "torsion_sup_rel_error = " << fmt17(err / scale) << "\n";
        c.note("torsion_sup_rel_error", err / scale);
        if (!c.out_dir.empty()) {
            ensure_dir(c.out_dir);
            write_csv(c.path("solution.csv"), "r,value,exact", rows);
        }
    } else {
        for (std::size_t i = 0; i < grid->nodes.size(); ++i)
            rows.push_back({grid->nodes[i], sol.values[i]});
        if (!c.out_dir.empty()) {
            ensure_dir(c.out_dir);
            write_csv(c.path("solution.csv"), "r,value", rows);
        }
        for (auto& r : rows) std::cout << fmt17(r[0]) << "," << fmt17(r[1]) << "\n";
    }
    print_report(std::cout, rep);
    c.finish("solve-radial");
    return 0;
}

int cmd_solve_planar(Common& c, const std::string& shape_s, double h, double s, double gamma,
                     double cc, const std::string& f_s, double k_max) {
    ProblemSpec ps;
    ps.shape = parse_shape(shape_s);
    ps.h = h;
    ps.s = s;
    ps.gamma = gamma;
    ps.c = cc;
    ps.k_max = k_max;
    parse_f(f_s, ps);
    auto dom = build_domain(ps.shape, h);
    auto op = assemble_operator_2d(dom, s);
    GridFunction2D f(dom);
    for (std::size_t i = 0; i < dom->size(); ++i) f.values[i] = ps.f_xy(dom->cx[i], dom->cy[i]);
    GridFunction2D u;
    SolveReport rep;
    if (gamma > 0) {
        auto res = solve_singular_2d(*op, f, gamma, cc, default_k_schedule(k_max));
        u = res.first;
        rep = res.second;
    } else {
        u = solve_linear_2d(*op, f, cc);
        rep.converged = true;
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < dom->size(); ++i)
        rows.push_back({dom->cx[i], dom->cy[i], u.values[i]});
    if (!c.out_dir.empty()) {
        ensure_dir(c.out_dir);
        write_csv(c.path("solution.csv"), "x,y,value", rows);
    } else {
        std::cout << "x,y,value\n";
        for (auto& r : rows)
            std::cout << fmt17(r[0]) << "," << fmt17(r[1]) << "," << fmt17(r[2]) << "\n";
    }
    print_report(std::cout, rep);
    c.finish("solve-planar");
    return 0;
}

struct VerifyRow {
    std::string name;
    double metric, tol;
    bool pass;
    double aux = 0;
};

int emit_verify(Common& c, const std::string& target, std::vector<VerifyRow>& rows) {
    bool all = true;
    std::vector<std::vector<double>> csv;
    std::ofstream listing(c.out_dir.empty() ? (target + ".csv") : c.path(target + ".csv"));
    listing << "check,metric,tolerance,pass\n";
    for (const auto& r : rows) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  metric=" << fmt17(r.metric)
                  << "  tol=" << fmt17(r.tol) << "\n";
        listing << r.name << "," << fmt17(r.metric) << "," << fmt17(r.tol) << ","
                << (r.pass ? 1 : 0) << "\n";
    }
    c.finish("verify-" + target);
    return all ? 0 : 1;
}

int cmd_verify(Common& c, const std::string& target, ProblemSpec ps, double p_summ,
               long n_maxmin, long n_ab, long n_chain) {
    if (!c.out_dir.empty()) ensure_dir(c.out_dir);
    std::vector<VerifyRow> rows;
    auto run_lemmas = [&]() {
        LemmaReport m = run_maxmin_suite(n_maxmin, c.seed);
        rows.push_back({"maxmin_lemma", double(m.violations), 0.0, m.violations == 0,
                        m.worst_margin});
        LemmaReport a = run_ab_suite(n_ab, c.seed + 1);
        rows.push_back({"ab_inequality", double(a.violations), 0.0, a.violations == 0,
                        a.worst_margin});
        LemmaReport ch = run_chain_rule_suite(n_chain, c.seed + 2);
        rows.push_back({"chain_rule", double(ch.violations), 0.0, ch.violations == 0,
                        ch.worst_margin});
        std::vector<std::vector<double>> csv;
        csv.push_back({double(m.instances_run), double(m.violations), m.worst_margin});
        csv.push_back({double(a.instances_run), double(a.violations), a.worst_margin});
        csv.push_back({double(ch.instances_run), double(ch.violations), ch.worst_margin});
        write_csv(c.path("lemmas.csv"), "instances,violations,worst_margin", csv);
    };
    auto curves_out = [&](const std::string& name, const TheoremResult& res) {
        std::vector<std::vector<double>> cu, cv;
        for (std::size_t i = 0; i < res.cu.volumes.size(); ++i)
            cu.push_back({res.cu.volumes[i], res.cu.cumulative[i]});
        for (std::size_t i = 0; i < res.cv.volumes.size(); ++i)
            cv.push_back({res.cv.volumes[i], res.cv.cumulative[i]});
        write_csv(c.path(name + "_cu.csv"), "sigma,concentration", cu);
        write_csv(c.path(name + "_cv.csv"), "sigma,concentration", cv);
        if (c.plot) {
            PlotSeries a{"C_u", res.cu.volumes, res.cu.cumulative};
            PlotSeries b{"C_v", res.cv.volumes, res.cv.cumulative};
            write_svg_curves(c.path(name + ".svg"), name + " concentration comparison", {a, b});
        }
    };

    if (target == "lemmas" || target == "all") run_lemmas();
    if (target == "thm1" || target == "all") {
        TheoremResult res = verify_theorem1(ps);
        curves_out("thm1", res);
        rows.push_back({"theorem1_concentration", res.margin, res.tol_abs, res.holds,
                        res.worst_volume});
    }
    if (target == "thm2" || target == "all") {
        TheoremResult res = verify_theorem2(ps);
        curves_out("thm2", res);
        rows.push_back({"theorem2_concentration", res.margin, res.tol_abs, res.holds,
                        res.worst_volume});
    }
    if (target == "energy" || target == "all") {
        PlanarInstance inst = solve_planar_instance(ps);
        EnergyResult res = verify_energy(inst, ps.M);
        rows.push_back({"energy_estimate", res.lhs, 1.05 * res.rhs, res.holds});
    }
    if (target == "regularity" || target == "all") {
        KernelParams kp{ps.N, ps.s};
        auto grid = make_radial_mesh(1.0, ps.M, kp);
        RadialSystem sys(grid);
        double ratio0 = 0;
        bool stable = true;
        int regime = 0;
        for (double lam : {1.0, 2.0, 4.0}) {
            auto res = sys.solve_singular([&](double) { return lam * ps.fconst; }, ps.gamma,
                                          ps.c, default_k_schedule(ps.k_max));
            WeightedSample us = sample_radial(res.solution);
            WeightedSample fs = us;
            for (auto& v : fs.values) v = lam * ps.fconst;
            RegularityResult rr = verify_regularity(us, fs, p_summ, ps.gamma, kp);
            regime = rr.regime;
            if (lam == 1.0)
                ratio0 = rr.ratio;
            else if (std::abs(rr.ratio - ratio0) > 1e-3 * ratio0)
                stable = false;
        }
        rows.push_back({"regularity_regime" + std::to_string(regime) + "_ratio_stability",
                        ratio0, 1e-3, stable});
    }
    return emit_verify(c, target, rows);
}

int cmd_report(Common& c, const std::string& dir) {
    std::ifstream mf(dir + "/manifest");
    if (!mf) {
        std::cerr << "no manifest in " << dir << "\n";
        return 2;
    }
    std::cout << "manifest:\n";
    std::string line;
    while (std::getline(mf, line)) std::cout << "  " << line << "\n";
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        auto p = entry.path();
        if (p.extension() == ".csv") {
            std::ifstream f(p);
            long n = -1;
            while (std::getline(f, line)) ++n;
            std::cout << p.filename().string() << ": " << n << " rows\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracsymm: fractional-Laplacian symmetrization toolkit"};
    app.require_subcommand(1);
    Common c;
    if (const char* env = std::getenv("FRACSYMM_OUT")) c.out_dir = env;
    app.add_option("--out", c.out_dir, "output directory");
    app.add_option("--threads", c.threads, "worker thread count (default: hardware)");
    app.add_option("--seed", c.seed, "random seed");
    app.add_flag("--plot", c.plot, "emit SVG overlay plots");

    // kernel
    auto* k = app.add_subcommand("kernel", "evaluate Theta_{N,s} (CSV table)");
    int kN = 2;
    double ks = 0.5;
    std::vector<double> krs{1.0}, krhos{2.0};
    k->add_option("--N", kN);
    k->add_option("--s", ks);
    k->add_option("--r", krs)->delimiter(',');
    k->add_option("--rho", krhos)->delimiter(',');

    // rearrange
    auto* re = app.add_subcommand("rearrange", "decreasing rearrangement pipeline from CSV");
    std::string re_in = "-";
    re->add_option("--in", re_in, "CSV of value,weight rows ('-' = stdin)");

    // solve-radial
    auto* sr = app.add_subcommand("solve-radial", "radial Galerkin solver on a ball");
    int srN = 2, srM = 128;
    double srs = 0.5, srR = 1.0, srg = 0.0, src = 0.0, srkmax = 1024;
    std::string sr_rhs = "const:1";
    sr->add_option("--N", srN);
    sr->add_option("--s", srs);
    sr->add_option("--R", srR);
    sr->add_option("--M", srM);
    sr->add_option("--gamma", srg);
    sr->add_option("--c", src);
    sr->add_option("--rhs", sr_rhs, "const:<v> | torsion-check | file:<csv>");
    sr->add_option("--k-max", srkmax);

    // solve-planar
    auto* sp = app.add_subcommand("solve-planar", "planar collocation solver");
    sp->set_help_flag("--help", "print help");  // frees -h for the --h spacing flag
    std::string sp_shape = "square:2", sp_f = "const:1";
    double sph = 1.0 / 16, sps = 0.5, spg = 1.0, spc = 0.0, spkmax = 1024;
    sp->add_option("--shape", sp_shape, "disk:R | square:L | ellipse:a,b");
    sp->add_option("--h", sph);
    sp->add_option("--s", sps);
    sp->add_option("--gamma", spg);
    sp->add_option("--c", spc);
    sp->add_option("--f", sp_f, "const:v | gauss:x0,y0,sigma,amp");
    sp->add_option("--k-max", spkmax);

    // verify
    auto* ve = app.add_subcommand("verify", "run verification suites");
    ve->set_help_flag("--help", "print help");
    std::string ve_target = "all";
    ve->add_option("target", ve_target, "thm1|thm2|regularity|energy|lemmas|all")->required();
    std::string ve_shape = "square:2", ve_f = "const:1";
    ProblemSpec ps;
    double ve_p = 4.0;
    long n_maxmin = 1000, n_ab = 100000, n_chain = 300;
    ve->add_option("--shape", ve_shape);
    ve->add_option("--f", ve_f);
    ve->add_option("--N", ps.N);
    ve->add_option("--s", ps.s);
    ve->add_option("--gamma", ps.gamma);
    ve->add_option("--c", ps.c);
    ve->add_option("--h", ps.h);
    ve->add_option("--M", ps.M);
    ve->add_option("--k-max", ps.k_max);
    ve->add_option("--tol", ps.tol_rel);
    ve->add_option("--p", ve_p, "summability exponent for regularity");
    bool ve_radial = false;
    ve->add_flag("--radial", ve_radial, "pure-radial instance (thm2/regularity)");
    ve->add_option("--n-maxmin", n_maxmin);
    ve->add_option("--n-ab", n_ab);
    ve->add_option("--n-chain", n_chain);

    // report
    auto* rp = app.add_subcommand("report", "summarize a previous run directory");
    std::string rp_dir = ".";
    rp->add_option("dir", rp_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c.threads > 0) set_thread_count(c.threads);
        if (k->parsed()) return cmd_kernel(c, kN, ks, krs, krhos);
        if (re->parsed()) return cmd_rearrange(c, re_in);
        if (sr->parsed())
            return cmd_solve_radial(c, srN, srs, srR, srM, srg, src, sr_rhs, srkmax);
        if (sp->parsed()) return cmd_solve_planar(c, sp_shape, sph, sps, spg, spc, sp_f, spkmax);
        if (ve->parsed()) {
            ps.shape = parse_shape(ve_shape);
            parse_f(ve_f, ps);
            ps.radial_only = ve_radial;
            static const char* targets[] = {"thm1", "thm2", "regularity", "energy", "lemmas", "all"};
            bool ok = false;
            for (const char* t : targets) ok = ok || ve_target == t;
            if (!ok) {
                std::cerr << "unknown verify target: " << ve_target << "\n";
                return 2;
            }
            return cmd_verify(c, ve_target, ps, ve_p, n_maxmin, n_ab, n_chain);
        }
        if (rp->parsed()) return cmd_report(c, rp_dir);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
