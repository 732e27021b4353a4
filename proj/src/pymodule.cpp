#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracsymm/analysis.hpp"
#include "fracsymm/kernel.hpp"
#include "fracsymm/planar.hpp"
#include "fracsymm/radial.hpp"
#include "fracsymm/rearrange.hpp"
#include "fracsymm/specfun.hpp"

namespace py = pybind11;
using namespace fracsymm;

namespace {

py::dict theta_dict(const ThetaEval& e) {
    py::dict d;
    d["value"] = e.value;
    d["method"] = e.method == ThetaMethod::hypergeometric ? "hypergeometric"
                                                          : "angular-quadrature";
    d["est_error"] = e.est_error;
    return d;
}

py::dict report_dict(const SolveReport& r) {
    py::dict d;
    d["k_used"] = r.k_used;
    d["newton_iters"] = r.newton_iters;
    d["final_residual"] = r.final_residual;
    d["monotonicity_margin"] = r.monotonicity_margin;
    d["last_sweep_diff"] = r.last_sweep_diff;
    d["interior_min"] = r.interior_min;
    d["converged"] = r.converged;
    return d;
}

Shape shape_from(const std::string& kind, double a, double b) {
    if (kind == "disk") return Shape::disk(a);
    if (kind == "square") return Shape::square(a);
    if (kind == "ellipse") return Shape::ellipse(a, b);
    throw std::invalid_argument("shape kind must be disk|square|ellipse");
}

}  // namespace

PYBIND11_MODULE(_fracsymm, m) {
    m.doc() = "fractional-Laplacian symmetrization toolkit";

    m.def("gamma_fn", &gamma_fn, py::arg("x"));
    m.def("frac_lap_constant",
          [](int N, double s) { return frac_lap_constant({N, s}); }, py::arg("N"), py::arg("s"));
    m.def("critical_exponent",
          [](int N, double s) { return critical_exponent({N, s}); }, py::arg("N"), py::arg("s"));
    m.def("hyp2f1", &hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
    m.def("hyp2f1_derivative", &hyp2f1_derivative);
    m.def("unit_ball_volume", &unit_ball_volume);
    m.def("torsion_coefficient", [](int N, double s) { return torsion_coefficient({N, s}); });

    m.def("theta", [](int N, double s, double r, double rho) {
        return theta_dict(theta({N, s}, r, rho));
    });
    m.def("theta_quadrature", [](int N, double s, double r, double rho) {
        return theta_dict(theta_quadrature({N, s}, r, rho));
    });
    m.def("theta_hypergeometric", [](int N, double s, double r, double rho) {
        return theta_dict(theta_hypergeometric({N, s}, r, rho));
    });
    m.def("near_diagonal_coefficient", [](int N, double s, double t) {
        return near_diagonal_coefficient({N, s}, t);
    });

    m.def("decreasing_rearrangement",
          [](std::vector<double> v, std::vector<double> w) {
              StepRearrangement st = decreasing_rearrangement({std::move(v), std::move(w)});
              py::dict d;
              d["breakpoints"] = st.breakpoints;
              d["plateau_values"] = st.plateau_values;
              return d;
          });
    m.def("distribution_function", [](std::vector<double> v, std::vector<double> w, double t) {
        return distribution_function({std::move(v), std::move(w)}, t);
    });
    m.def("is_less_concentrated",
          [](std::vector<double> u, std::vector<double> wu, std::vector<double> v,
             std::vector<double> wv, double tol) {
              auto r = is_less_concentrated({std::move(u), std::move(wu)},
                                            {std::move(v), std::move(wv)}, tol);
              py::dict d;
              d["holds"] = r.holds;
              d["worst_margin"] = r.worst_margin;
              d["worst_volume"] = r.worst_volume;
              return d;
          });
    m.def("hardy_littlewood_check",
          [](std::vector<double> u, std::vector<double> v, std::vector<double> w) {
              auto r = hardy_littlewood_check({std::move(u), w}, {std::move(v), w});
              py::dict d;
              d["lhs"] = r.lhs;
              d["rhs"] = r.rhs;
              d["holds"] = r.holds;
              return d;
          });

    py::class_<RadialFunction>(m, "RadialFunction")
        .def("__call__", &RadialFunction::operator())
        .def_property_readonly("nodes",
                               [](const RadialFunction& f) { return f.grid->nodes; })
        .def_readonly("values", &RadialFunction::values);

    m.def("solve_linear_radial",
          [](int N, double s, double R, int M, double rhs_const, double c) {
              auto g = make_radial_mesh(R, M, {N, s});
              return solve_linear_radial(g, [rhs_const](double) { return rhs_const; }, c);
          },
          py::arg("N"), py::arg("s"), py::arg("R"), py::arg("M"), py::arg("rhs_const") = 1.0,
          py::arg("c") = 0.0);
    m.def("solve_singular_radial",
          [](int N, double s, double R, int M, double f_const, double gamma, double c,
             double k_max) {
              auto g = make_radial_mesh(R, M, {N, s});
              auto res = solve_singular_radial(g, [f_const](double) { return f_const; }, gamma,
                                               c, default_k_schedule(k_max));
              return py::make_tuple(res.solution, report_dict(res.report));
          },
          py::arg("N"), py::arg("s"), py::arg("R"), py::arg("M"), py::arg("f_const") = 1.0,
          py::arg("gamma") = 1.0, py::arg("c") = 0.0, py::arg("k_max") = 1024.0);
    m.def("integrated_inequality_lhs", &integrated_inequality_lhs, py::arg("u"), py::arg("r"),
          py::arg("power") = 1.0);

    m.def("solve_singular_planar",
          [](const std::string& kind, double a, double b, double h, double s, double f_const,
             double gamma, double c, double k_max) {
              auto dom = build_domain(shape_from(kind, a, b), h);
              Operator2D op(dom, s);
              GridFunction2D f(dom, std::vector<double>(dom->size(), f_const));
              auto [u, rep] = solve_singular_2d(op, f, gamma, c, default_k_schedule(k_max));
              py::dict d;
              d["x"] = dom->cx;
              d["y"] = dom->cy;
              d["values"] = u.values;
              d["report"] = report_dict(rep);
              return d;
          },
          py::arg("shape"), py::arg("a"), py::arg("b") = 0.0, py::arg("h") = 1.0 / 16,
          py::arg("s") = 0.5, py::arg("f_const") = 1.0, py::arg("gamma") = 1.0,
          py::arg("c") = 0.0, py::arg("k_max") = 1024.0);
    m.def("seminorm_2d_squared",
          [](const std::string& kind, double a, double b, double h, double s,
             std::vector<double> vals) {
              auto dom = build_domain(shape_from(kind, a, b), h);
              return seminorm_2d_squared(GridFunction2D(dom, std::move(vals)), s);
          });

    m.def("g_test_function", &g_test_function);
    m.def("ab_inequality_check", [](double a, double b, double g) {
        auto r = ab_inequality_check(a, b, g);
        return py::make_tuple(r.lhs, r.rhs, r.holds);
    });
    m.def("run_maxmin_suite", [](long n, std::uint64_t seed) {
        LemmaReport r = run_maxmin_suite(n, seed);
        py::dict d;
        d["instances"] = r.instances_run;
        d["violations"] = r.violations;
        d["worst_margin"] = r.worst_margin;
        return d;
    });
    m.def("run_riesz_suite", [](long n, int across, std::uint64_t seed, std::vector<double> al) {
        RieszSuiteResult r = run_riesz_suite(n, across, seed, al);
        py::dict d;
        d["instances"] = r.instances;
        d["violations"] = r.violations;
        d["worst_violation"] = r.worst_violation;
        return d;
    });
    m.def("verify_theorem1",
          [](const std::string& kind, double a, double b, double h, double s, double gamma,
             int M) {
              ProblemSpec spec;
              spec.shape = shape_from(kind, a, b);
              spec.h = h;
              spec.s = s;
              spec.gamma = gamma;
              spec.M = M;
              TheoremResult r = verify_theorem1(spec);
              py::dict d;
              d["holds"] = r.holds;
              d["margin"] = r.margin;
              d["margin_rel"] = r.margin_rel;
              d["tol_abs"] = r.tol_abs;
              return d;
          },
          py::arg("shape"), py::arg("a"), py::arg("b") = 0.0, py::arg("h") = 1.0 / 12,
          py::arg("s") = 0.5, py::arg("gamma") = 1.0, py::arg("M") = 64);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
