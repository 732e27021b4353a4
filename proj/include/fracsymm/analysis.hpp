#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fracsymm/planar.hpp"
#include "fracsymm/radial.hpp"
#include "fracsymm/rearrange.hpp"

namespace fracsymm {

// ------------------------------------------------------------ lemma checks

struct LemmaReport {
    std::string name;
    long instances_run = 0;
    long violations = 0;
    double worst_margin = 1e300;  // min slack; negative beyond tolerance = violation
};

// Weight h sampled on the same radial grid as the functions under test.
struct WeightFunction {
    std::vector<double> values;
    bool increasing = true;
};

// G_{t,h}: 0 below t, linear on (t, t+h], constant h above.
double g_test_function(double t, double h, double theta);

// Runs the max/min comparison lemma (both weighted-integral conclusions,
// the zero-max/zero-min variants and the max/min duality) on one sampled
// instance; accumulates into rep.
void maxmin_lemma_check(const std::vector<double>& r, const std::vector<double>& u,
                        const std::vector<double>& v, const WeightFunction& h, int N,
                        LemmaReport& rep);

struct AbResult {
    double lhs, rhs;
    bool holds;
};

// 1/a^gamma - 1/b^gamma <= gamma (b-a) / a^{gamma+1}
AbResult ab_inequality_check(double a, double b, double gamma);

struct ChainRuleResult {
    double lhs, rhs;
    bool holds;
};

// Discrete version of the convex chain-rule inequality: both quadratic
// forms evaluated with the collocation kernel (exterior tail included).
// For concave Phi pass convex = false (inequality flips).
ChainRuleResult chain_rule_check(const Operator2D& op, const std::vector<double>& u,
                                 const std::function<double(double)>& Phi,
                                 const std::function<double(double)>& dPhi,
                                 const std::vector<double>& phi, bool convex = true);

// Randomized suites (shared by CLI and the acceptance runner).
LemmaReport run_maxmin_suite(long instances, std::uint64_t seed, int samples = 400);
LemmaReport run_ab_suite(long instances, std::uint64_t seed);
LemmaReport run_chain_rule_suite(long instances, std::uint64_t seed);

struct RieszSuiteResult {
    long instances = 0;
    long violations = 0;       // beyond 1e-3 relative
    double worst_violation = 0;  // max over instances of violation_rel
};

// Random analytic bump mixtures on a disk grid with n cells across,
// F built from G_{t,h}, W_alpha Gaussian weights.
RieszSuiteResult run_riesz_suite(long instances, int cells_across, std::uint64_t seed,
                                 const std::vector<double>& alphas);

// ------------------------------------------------------- problem instances

struct ProblemSpec {
    Shape shape = Shape::square(2.0);
    bool radial_only = false;  // pure-radial instance (no planar solve)
    int N = 2;
    double s = 0.5;
    double gamma = 1.0;
    double c = 0.0;
    double h = 1.0 / 16;
    int M = 96;
    double k_max = 1024.0;
    double tol_rel = 0.01;

    enum class FKind { constant, gaussian, radial_power };
    FKind fkind = FKind::constant;
    double fconst = 1.0;
    double gx = 0, gy = 0, gsigma = 0.3, gamp = 1.0;
    double fpower = -0.5;  // radial_power: f(r) = min(r^fpower, value at first node)

    double f_xy(double x, double y) const;
};

struct PlanarInstance {
    std::shared_ptr<const PlanarDomain> dom;
    std::shared_ptr<Operator2D> op;
    GridFunction2D f, u;
    SolveReport report;
    double s, gamma, c;
};

PlanarInstance solve_planar_instance(const ProblemSpec& spec);

struct TheoremResult {
    bool holds = false;
    double margin = 0;      // max over volumes of C_u - C_v
    double margin_rel = 0;  // margin / C_v(|Omega|)
    double tol_abs = 0;
    double worst_volume = 0;
    ConcentrationCurve cu, cv;
    SolveReport solve_report;
};

// Theorem 1.1: concentration of the Schwarz rearrangement of the solution
// of (P) against the solution of the symmetrized singular problem with
// constant right-hand side ||f||_inf on the equal-measure ball.
TheoremResult verify_theorem1(const ProblemSpec& spec);
TheoremResult verify_theorem1_on(const PlanarInstance& inst, int M, double tol_rel,
                                 double k_max);

// Theorem 1.2: concentration of u^{gamma+1} against the linear symmetrized
// problem with right-hand side (gamma+1) f*.
TheoremResult verify_theorem2(const ProblemSpec& spec);
TheoremResult verify_theorem2_on(const PlanarInstance& inst, int M, double tol_rel);

struct EnergyResult {
    double lhs, rhs;
    bool holds;
};

// ||u^{gamma+1}||_{X_0^s(Omega)} <= ||v||_{X_0^s(Omega*)} with v solving the
// linear symmetrized problem; 5% cross-discretization allowance.
EnergyResult verify_energy(const PlanarInstance& inst, int M, double slack = 0.05);

struct RegularityResult {
    int regime = 0;  // 1: L^q, 2: Orlicz, 3: L^inf
    double q = 0;    // regime 1 target exponent
    double lhs_norm = 0, rhs_norm = 0, ratio = 0;
};

// Norm-ratio computation of the regularity theorem on a weighted sample of
// (u, f). p must satisfy p >= 2N/(N-2s).
RegularityResult verify_regularity(const WeightedSample& u, const WeightedSample& f, double p,
                                   double gamma, const KernelParams& params);

// Luxemburg gauge norm inf{lambda : sum Phi(|u_i|/lambda) w_i <= 1}.
double luxemburg_norm(const WeightedSample& u, const std::function<double(double)>& Phi);

double lp_norm(const WeightedSample& u, double p);

// Quadrature sampling of a radial function as a weighted sample (measure
// weights N omega_N r^{N-1} dr).
WeightedSample sample_radial(const RadialFunction& u, int per_element = 8);

}  // namespace fracsymm
