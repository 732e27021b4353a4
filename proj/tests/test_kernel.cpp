#include <cmath>
#include <vector>

#include "doctest.h"
#include "fracsymm/errors.hpp"
#include "fracsymm/kernel.hpp"
#include "fracsymm/util.hpp"

using namespace fracsymm;

namespace {

// Brute-force trapezoid oracle for the angular integral (1e6 points).
double theta_trapezoid(const KernelParams& p, double r, double rho, int n = 1000000) {
    double pref = 2.0 * std::pow(M_PI, (p.N - 1) / 2.0) / gamma_fn((p.N - 1) / 2.0);
    double h = M_PI / n, sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        double th = i * h;
        double f = std::pow(std::sin(th), p.N - 2) *
                   std::pow(r * r - 2 * r * rho * std::cos(th) + rho * rho,
                            -(p.N + 2.0 * p.s) / 2.0);
        sum += (i == 0 || i == n) ? 0.5 * f : f;
    }
    return pref * sum * h;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = xs.size();
    for (int i = 0; i < n; ++i) {
        double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("theta quadrature vs trapezoid oracle") {
    KernelParams p{2, 0.5};
    double oracle = theta_trapezoid(p, 1.0, 2.0);
    ThetaEval e = theta_quadrature(p, 1.0, 2.0);
    CHECK(e.value == doctest::Approx(oracle).epsilon(1e-7));
    CHECK(e.method == ThetaMethod::angular_quadrature);
    // argument swap is exact by construction
    CHECK(theta_quadrature(p, 2.0, 1.0).value == e.value);

    KernelParams p3{3, 0.25};
    CHECK(theta_quadrature(p3, 1.0, 3.0).value ==
          doctest::Approx(theta_trapezoid(p3, 1.0, 3.0)).epsilon(1e-7));
}

TEST_CASE("theta hypergeometric branch") {
    // At r=0 the kernel equals the sphere area times rho^{-N-2s}:
    // 2 pi^{N/2}/Gamma(N/2). (The r=0 analytic value; 2F1 factor is 1.)
    KernelParams p{2, 0.5};
    CHECK(theta_hypergeometric(p, 0.0, 1.0).value == doctest::Approx(2 * M_PI).epsilon(1e-12));
    KernelParams p3{3, 0.25};
    CHECK(theta_hypergeometric(p3, 0.0, 1.0).value == doctest::Approx(4 * M_PI).epsilon(1e-12));

    CHECK(theta_hypergeometric(p, 1.0, 2.0).value ==
          doctest::Approx(theta_quadrature(p, 1.0, 2.0).value).epsilon(1e-8));

    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        double r = rng.uniform(0.1, 3.0);
        double rho = r * rng.uniform(1.2, 4.0);
        CHECK(theta_hypergeometric(p3, r, rho).value ==
              theta_hypergeometric(p3, rho, r).value);
    }
}

TEST_CASE("theta dispatcher") {
    KernelParams p{2, 0.5};
    CHECK(theta(p, 0.5, 1.0).method == ThetaMethod::hypergeometric);
    CHECK(theta(p, 0.995, 1.0).method == ThetaMethod::angular_quadrature);
    CHECK_THROWS_AS(theta(p, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(theta(p, 1.0, 1.0 + 1e-8), numerical_error);
}

TEST_CASE("theta symmetry and cross-branch agreement") {
    Rng rng(5);
    for (int N : {2, 3, 4}) {
        for (double s : {0.25, 0.5, 0.75}) {
            KernelParams p{N, s};
            for (int i = 0; i < 25; ++i) {
                double r = rng.uniform(0.05, 4.0);
                double rho = rng.uniform(0.05, 4.0);
                if (std::abs(r - rho) < 1e-3) continue;
                ThetaEval a = theta(p, r, rho), b = theta(p, rho, r);
                CHECK(std::abs(a.value - b.value) <= 1e-10 * a.value);
                double ratio2 = std::pow(std::min(r, rho) / std::max(r, rho), 2);
                if (ratio2 <= 0.95 && ratio2 >= 1e-4) {
                    CHECK(theta_hypergeometric(p, r, rho).value ==
                          doctest::Approx(theta_quadrature(p, r, rho).value).epsilon(1e-8));
                }
            }
        }
    }
}

TEST_CASE("theta monotonicity along each argument") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        KernelParams p{2 + rng.uniform_int(3), rng.uniform(0.1, 0.9)};
        double rbar = rng.uniform(0.3, 2.0);
        double rho = rbar * rng.uniform(1.05, 3.0);
        // increasing in r on [0, rbar] for fixed rho > rbar
        double prev = theta(p, 0.0, rho).value;
        for (int k = 1; k <= 8; ++k) {
            double r = rbar * k / 8.0;
            double cur = theta(p, r, rho).value;
            CHECK(cur > prev);
            prev = cur;
        }
        // decreasing in rho on (rbar, inf) for fixed r < rbar
        double r = rbar * rng.uniform(0.0, 0.9);
        prev = theta(p, r, rbar * 1.05).value;
        for (int k = 1; k <= 8; ++k) {
            double rr = rbar * (1.05 + 0.7 * k);
            double cur = theta(p, r, rr).value;
            CHECK(cur < prev);
            prev = cur;
        }
    }
    // derivative route: the kernel's 2F1 has positive derivative where the
    // Euler-integral contract applies (c > b > 0, e.g. N = 4)
    Rng rng2(19);
    for (int i = 0; i < 20; ++i) {
        double s = rng2.uniform(0.1, 0.9);
        double x = rng2.uniform(0.01, 0.9);
        CHECK(hyp2f1_derivative((4 + 2 * s) / 2.0, s + 1.0, 2.0, x) > 0.0);
    }
}

TEST_CASE("near-diagonal asymptotics") {
    // log-log slope of Theta(t+d/2, t-d/2) in d equals -(1+2s)
    for (auto [N, s, slope] : {std::tuple{2, 0.5, -2.0}, {3, 0.25, -1.5}}) {
        KernelParams p{N, s};
        std::vector<double> ds, vals;
        for (double d : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
            ds.push_back(d);
            vals.push_back(theta(p, 1.0 + d / 2, 1.0 - d / 2).value);
        }
        CHECK(loglog_slope(ds, vals) == doctest::Approx(slope).epsilon(0.02));
    }
}

TEST_CASE("near-diagonal coefficient is stable, positive, smooth in t") {
    KernelParams p{2, 0.5};
    double prev = 0.0;
    for (double t : {0.5, 1.0, 2.0, 4.0}) {
        double c = near_diagonal_coefficient(p, t);
        CHECK(c > 0.0);
        if (prev > 0.0) {
            double ratio = c / prev;  // smooth t-dependence: bounded ratio
            CHECK(ratio > 0.1);
            CHECK(ratio < 10.0);
        }
        prev = c;
    }
    KernelParams p3{3, 0.25};
    CHECK(near_diagonal_coefficient(p3, 1.0) > 0.0);
}

TEST_CASE("far-field decay") {
    for (auto [N, s] : {std::pair{2, 0.5}, {3, 0.25}, {4, 0.75}}) {
        KernelParams p{N, s};
        std::vector<double> rs, vals;
        for (double r = 10.0; r <= 100.0; r *= 1.78) {
            rs.push_back(r);
            vals.push_back(theta(p, r, 1.0).value);
        }
        CHECK(loglog_slope(rs, vals) ==
              doctest::Approx(-(N + 2.0 * s)).epsilon(0.02));
    }
}

TEST_CASE("fast evaluator matches theta across regimes") {
    for (auto [N, s] : {std::pair{2, 0.5}, {3, 0.3}, {2, 0.7}}) {
        KernelParams p{N, s};
        ThetaEvaluator fast(p);
        Rng rng(23);
        for (int i = 0; i < 200; ++i) {
            double r = rng.uniform(0.05, 3.0);
            double gap_rel = rng.log_uniform(1e-8, 1.0);
            double rho = r * (1.0 + gap_rel);
            double ref;
            double ratio2 = std::pow(r / rho, 2);
            if (ratio2 <= 0.98)
                ref = theta_hypergeometric(p, r, rho).value;
            else if (gap_rel >= 1e-6)
                ref = theta_quadrature(p, r, rho).value;
            else
                continue;
            CHECK(fast(r, rho) == doctest::Approx(ref).epsilon(1e-9));
        }
    }
}
