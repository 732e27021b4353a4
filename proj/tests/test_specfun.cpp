#include <cmath>

#include "doctest.h"
#include "fracsymm/errors.hpp"
#include "fracsymm/specfun.hpp"
#include "fracsymm/util.hpp"

using namespace fracsymm;

namespace {

// 200-term reference series for 2F1, independent of the library path.
double series_oracle(double a, double b, double c, double x) {
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 200; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_CASE("gamma function values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    // Reflection oracle: Gamma(1/2)^2 = pi / sin(pi/2).
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-2.5), std::domain_error);
}

TEST_CASE("gamma functional equation on [0.5, 20]") {
    for (int k = 0; k <= 60; ++k) {
        double x = 0.5 * std::pow(40.0, k / 60.0);
        CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-12));
    }
}

TEST_CASE("fractional Laplacian constant") {
    CHECK(frac_lap_constant({2, 0.5}) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-13));
    CHECK(frac_lap_constant({3, 0.5}) == doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-13));
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        KernelParams p{2 + rng.uniform_int(4), rng.uniform(0.05, 0.95)};
        CHECK(frac_lap_constant(p) > 0.0);
    }
}

TEST_CASE("critical exponent") {
    CHECK(critical_exponent({2, 0.5}) == doctest::Approx(4.0));
    CHECK(critical_exponent({3, 0.5}) == doctest::Approx(3.0));
    CHECK(critical_exponent({3, 0.3}) == doctest::Approx(2.5));
}

TEST_CASE("kernel params validation") {
    CHECK_THROWS_AS(KernelParams(1, 0.5), std::domain_error);
    CHECK_THROWS_AS(KernelParams(2, 0.0), std::domain_error);
    CHECK_THROWS_AS(KernelParams(2, 1.0), std::domain_error);
}

TEST_CASE("hyp2f1 basics") {
    CHECK(hyp2f1(1.3, 0.7, 2.1, 0.0) == doctest::Approx(1.0));
    // closed form 2F1(1,1;2;x) = -log(1-x)/x
    CHECK(hyp2f1(1, 1, 2, 0.5) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-10));
    CHECK(hyp2f1(1, 1, 2, 0.5) == doctest::Approx(series_oracle(1, 1, 2, 0.5)).epsilon(1e-10));
    CHECK_THROWS_AS(hyp2f1(2.5, 1.5, 1.0, 0.3), std::domain_error);
    CHECK_THROWS_AS(hyp2f1(1.0, -0.5, 1.0, 0.3), std::domain_error);
    CHECK_THROWS_AS(hyp2f1(1.0, 0.5, 1.0, 1.0 - 1e-12), accuracy_error);
}

TEST_CASE("hyp2f1 euler and series branches agree") {
    Rng rng(42);
    for (int i = 0; i < 60; ++i) {
        double b = rng.uniform(0.2, 3.0);
        double c = b + rng.uniform(0.1, 3.0);
        double a = rng.uniform(0.0, 5.0);
        double x = rng.uniform(0.05, 0.5);
        double s = hyp2f1_series(a, b, c, x);
        double e = hyp2f1_euler(a, b, c, x);
        CHECK(e == doctest::Approx(s).epsilon(1e-9));
    }
    // and above the branch switch point
    for (double x : {0.6, 0.75, 0.9}) {
        CHECK(hyp2f1_euler(1.2, 0.8, 2.4, x) ==
              doctest::Approx(hyp2f1_series_bounded(1.2, 0.8, 2.4, x, 200000, nullptr))
                  .epsilon(1e-9));
    }
}

TEST_CASE("hyp2f1 derivative identity") {
    CHECK(hyp2f1_derivative(1.5, 0.5, 2.5, 0.0) == doctest::Approx(1.5 * 0.5 / 2.5));
    CHECK(hyp2f1_derivative(1, 1, 2, 0.5) == doctest::Approx(0.5 * hyp2f1(2, 2, 3, 0.5)));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        double b = rng.uniform(0.2, 2.5);
        double c = b + rng.uniform(0.2, 2.5);
        double a = rng.uniform(0.1, 4.0);
        double x = rng.uniform(0.02, 0.85);
        double h = 1e-5;
        double fd = (hyp2f1(a, b, c, x + h) - hyp2f1(a, b, c, x - h)) / (2 * h);
        CHECK(hyp2f1_derivative(a, b, c, x) == doctest::Approx(fd).epsilon(1e-6));
        CHECK(hyp2f1_derivative(a, b, c, x) >= 0.0);
    }
}
