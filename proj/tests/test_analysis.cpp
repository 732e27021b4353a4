#include <cmath>

#include "doctest.h"
#include "fracsymm/analysis.hpp"
#include "fracsymm/util.hpp"

using namespace fracsymm;

TEST_CASE("g test function") {
    CHECK(g_test_function(1.0, 0.5, 0.7) == 0.0);
    CHECK(g_test_function(1.0, 0.5, 1.25) == doctest::Approx(0.25));
    CHECK(g_test_function(1.0, 0.5, 15.0) == 0.5);
    CHECK(g_test_function(0.0, 2.0, 0.0) == 0.0);
    CHECK_THROWS_AS(g_test_function(1.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("maxmin lemma on the closed-form instance") {
    // u = 2, v = 1 on [0,1], h(rho) = rho, N = 2: maximum of H_u-H_v at
    // rbar = 1 and weighted difference 1/3
    const int n = 401;
    std::vector<double> r(n), u(n, 2.0), v(n, 1.0);
    WeightFunction h;
    h.increasing = true;
    h.values.resize(n);
    for (int i = 0; i < n; ++i) {
        r[i] = double(i) / (n - 1);
        h.values[i] = r[i];
    }
    LemmaReport rep{"maxmin", 0, 0, 1e300};
    maxmin_lemma_check(r, u, v, h, 2, rep);
    CHECK(rep.violations == 0);
    CHECK(rep.worst_margin == doctest::Approx(1.0 / 3.0).epsilon(1e-4));
}

TEST_CASE("maxmin lemma zero-max variant") {
    const int n = 256;
    std::vector<double> r(n), u(n, 1.5), v(n, 1.5);
    WeightFunction h;
    h.increasing = true;
    h.values.assign(n, 1.0);
    for (int i = 0; i < n; ++i) r[i] = double(i) / (n - 1);
    LemmaReport rep{"maxmin", 0, 0, 1e300};
    maxmin_lemma_check(r, u, v, h, 3, rep);
    CHECK(rep.violations == 0);
    CHECK(std::abs(rep.worst_margin) <= 1e-12);
}

TEST_CASE("maxmin randomized suite") {
    LemmaReport rep = run_maxmin_suite(200, 424242);
    CHECK(rep.instances_run == 200);
    CHECK(rep.violations == 0);
}

TEST_CASE("ab inequality") {
    AbResult eq = ab_inequality_check(1.7, 1.7, 2.3);
    CHECK(eq.holds);
    CHECK(eq.lhs == doctest::Approx(0.0));
    AbResult ex = ab_inequality_check(1.0, 2.0, 1.0);
    CHECK(ex.lhs == doctest::Approx(0.5));
    CHECK(ex.rhs == doctest::Approx(1.0));
    CHECK(ex.holds);
    LemmaReport rep = run_ab_suite(10000, 7);
    CHECK(rep.violations == 0);
}

TEST_CASE("chain rule inequality") {
    auto dom = build_domain(Shape::disk(1.0), 1.0 / 8);
    Operator2D op(dom, 0.4);
    Rng rng(3);
    std::vector<double> u(dom->size()), phi(dom->size());
    for (std::size_t i = 0; i < dom->size(); ++i) {
        u[i] = rng.uniform(0.0, 2.0);
        phi[i] = rng.uniform(0.0, 1.0);
    }
    // identity: exact equality
    auto ident = chain_rule_check(
        op, u, [](double t) { return t; }, [](double) { return 1.0; }, phi);
    CHECK(ident.holds);
    CHECK(ident.lhs == doctest::Approx(ident.rhs).epsilon(1e-12));
    // square
    auto sq = chain_rule_check(
        op, u, [](double t) { return t * t; }, [](double t) { return 2 * t; }, phi);
    CHECK(sq.holds);
    // concave variant flips
    auto cc = chain_rule_check(
        op, u, [](double t) { return std::sqrt(t + 0.1); },
        [](double t) { return 0.5 / std::sqrt(t + 0.1); }, phi, false);
    CHECK(cc.holds);
    LemmaReport rep = run_chain_rule_suite(60, 11);
    CHECK(rep.violations == 0);
}

TEST_CASE("riesz randomized suite (small)") {
    RieszSuiteResult res = run_riesz_suite(10, 32, 20250809, {0.5, 2.0});
    CHECK(res.violations == 0);
    CHECK(res.worst_violation <= 1e-3);
}

TEST_CASE("luxemburg norm closed form") {
    // constant c on measure m with Phi(t) = exp(t^2)-1:
    // lambda = c / sqrt(log(1 + 1/m))
    WeightedSample u(std::vector<double>(10, 2.0), std::vector<double>(10, 0.3));
    auto Phi = [](double t) { return std::exp(t * t) - 1.0; };
    double lam = luxemburg_norm(u, Phi);
    double exact = 2.0 / std::sqrt(std::log(1.0 + 1.0 / 3.0));
    CHECK(lam == doctest::Approx(exact).epsilon(1e-6));
}

TEST_CASE("regularity regime detection") {
    WeightedSample u(std::vector<double>(10, 1.0), std::vector<double>(10, 0.1));
    WeightedSample f = u;
    RegularityResult r1 = verify_regularity(u, f, 3.0, 1.0, {3, 0.3});
    CHECK(r1.regime == 1);
    CHECK(r1.q == doctest::Approx(15.0));
    RegularityResult r2 = verify_regularity(u, f, 3.0, 1.0, {3, 0.5});
    CHECK(r2.regime == 2);
    RegularityResult r3 = verify_regularity(u, f, 4.0, 1.0, {2, 0.5});
    CHECK(r3.regime == 3);
    CHECK_THROWS_AS(verify_regularity(u, f, 2.0, 1.0, {3, 0.3}), std::domain_error);
}

TEST_CASE("theorem 1.1 on a coarse square instance") {
    ProblemSpec spec;
    spec.shape = Shape::square(2.0);
    spec.h = 1.0 / 16;
    spec.s = 0.5;
    spec.gamma = 1.0;
    spec.M = 96;
    spec.k_max = 256;
    TheoremResult res = verify_theorem1(spec);
    CHECK(res.holds);
    CHECK(res.margin <= res.tol_abs);
}

TEST_CASE("theorem 1.2 radial shortcut instance") {
    ProblemSpec spec;
    spec.radial_only = true;
    spec.N = 3;
    spec.s = 0.3;
    spec.gamma = 2.0;
    spec.M = 48;
    spec.k_max = 256;
    spec.fkind = ProblemSpec::FKind::radial_power;
    spec.fpower = -0.5;
    TheoremResult res = verify_theorem2(spec);
    CHECK(res.holds);
}

TEST_CASE("energy estimate on the disk control case") {
    ProblemSpec spec;
    spec.shape = Shape::disk(1.0);
    spec.h = 1.0 / 12;
    spec.s = 0.5;
    spec.gamma = 1e-12;
    spec.M = 64;
    spec.k_max = 4;
    PlanarInstance inst = solve_planar_instance(spec);
    EnergyResult res = verify_energy(inst, spec.M);
    CHECK(res.holds);
    CHECK(std::abs(res.lhs - res.rhs) <= 0.05 * res.rhs);
}
