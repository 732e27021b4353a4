#include "fracsymm/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "fracsymm/errors.hpp"
#include "fracsymm/util.hpp"

namespace fracsymm {

namespace {

// J(eps) = int_0^{pi/2} sin^{N-2} cos^{N-2} (eps^2 + sin^2)^{-beta} dphi,
// so that Theta = pref_j (r rho)^{-beta} J(|r-rho| / (2 sqrt(r rho))).
double j_quadrature(int N, double beta, double eps, int order) {
    auto f = [&](double phi) {
        double sn = std::sin(phi), cs = std::cos(phi);
        double base = std::pow(sn * cs, N - 2);
        return base * std::pow(eps * eps + sn * sn, -beta);
    };
    auto edges = geometric_panels(M_PI / 2, std::min(eps, M_PI / 4));
    double v = 0.0;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        v += gl_integrate(f, edges[k], edges[k + 1], order);
    return v;
}

// Transformed series for the kernel's 2F1:
//   2F1((N+2s)/2, s+1; N/2; x) = (1-x)^{-1-2s} 2F1(-s, N/2-s-1; N/2; x).
// The transformed parameters give terms ~ n^{-(2+2s)} x^n, so the series
// stays practical far closer to x = 1 than the original one.
double kernel_2f1(const KernelParams& p, double x, double* est) {
    double tail = 0.0;
    double f = hyp2f1_series_bounded(-p.s, p.N / 2.0 - p.s - 1.0, p.N / 2.0, x, 400000, &tail);
    if (est) *est = tail;
    return std::pow(1.0 - x, -1.0 - 2.0 * p.s) * f;
}

}  // namespace

ThetaEval theta_quadrature(const KernelParams& p, double r, double rho) {
    if (!(r > 0.0 && rho > 0.0)) throw std::domain_error("theta_quadrature: r, rho must be > 0");
    double hi = std::max(r, rho), lo = std::min(r, rho);
    if (hi - lo < 1e-6 * hi)
        throw numerical_error("theta_quadrature: arguments too close to the diagonal");
    double beta = (p.N + 2.0 * p.s) / 2.0;
    double eps = (hi - lo) / (2.0 * std::sqrt(r * rho));
    double j1 = j_quadrature(p.N, beta, eps, 16);
    double j2 = j_quadrature(p.N, beta, eps, 24);
    double pref = 2.0 * std::pow(M_PI, (p.N - 1) / 2.0) / gamma_fn((p.N - 1) / 2.0) *
                  std::pow(2.0, -1.0 - 2.0 * p.s);
    double value = pref * std::pow(r * rho, -beta) * j2;
    double est = std::abs(j2 - j1) / std::abs(j2) + 1e-13;
    if (est > 1e-8) throw numerical_error("theta_quadrature: quadrature did not converge");
    return {value, ThetaMethod::angular_quadrature, est};
}

ThetaEval theta_hypergeometric(const KernelParams& p, double r, double rho) {
    if (!(rho > 0.0 || r > 0.0)) throw std::domain_error("theta_hypergeometric: needs a positive radius");
    if (r < 0.0 || rho < 0.0) throw std::domain_error("theta_hypergeometric: radii must be >= 0");
    double hi = std::max(r, rho), lo = std::min(r, rho);
    double x = (lo / hi) * (lo / hi);
    if (x > 1.0 - 1e-5)
        throw accuracy_error("theta_hypergeometric: ratio^2 too close to 1");
    double est = 0.0;
    double f = kernel_2f1(p, x, &est);
    est += 1e-13;
    if (est > 1e-8) throw accuracy_error("theta_hypergeometric: series accuracy loss");
    double pref = 2.0 * std::pow(M_PI, p.N / 2.0) / gamma_fn(p.N / 2.0);
    double value = pref * std::pow(hi, -double(p.N) - 2.0 * p.s) * f;
    return {value, ThetaMethod::hypergeometric, est};
}

ThetaEval theta(const KernelParams& p, double r, double rho) {
    if (r == rho) throw std::domain_error("theta: diverges on the diagonal r == rho");
    double hi = std::max(r, rho), lo = std::min(r, rho);
    double ratio2 = (lo / hi) * (lo / hi);
    if (ratio2 <= 0.98) return theta_hypergeometric(p, r, rho);
    return theta_quadrature(p, r, rho);
}

double near_diagonal_coefficient(const KernelParams& p, double t) {
    if (!(t > 0.0)) throw std::domain_error("near_diagonal_coefficient: t must be > 0");
    const double deltas[3] = {1e-2 * t, 5e-3 * t, 2.5e-3 * t};
    double A[3];
    for (int i = 0; i < 3; ++i) {
        double d = deltas[i];
        A[i] = theta(p, t + d / 2, t - d / 2).value * std::pow(d, 1.0 + 2.0 * p.s);
    }
    // Estimate the convergence order from the triple, then extrapolate the
    // two finer levels; their spread is the stability check.
    double num = A[0] - A[1], den = A[1] - A[2];
    double order = (den != 0.0 && num / den > 0.0) ? std::log2(num / den) : 1.0;
    order = std::clamp(order, 0.5, 4.0);
    double fac = std::pow(2.0, order) - 1.0;
    double r1 = A[1] + (A[1] - A[0]) / fac;
    double r2 = A[2] + (A[2] - A[1]) / fac;
    if (std::abs(r2 - r1) > 0.01 * std::abs(r2))
        throw numerical_error("near_diagonal_coefficient: extrapolation unstable");
    return r2;
}

ThetaEvaluator::ThetaEvaluator(const KernelParams& p) : p_(p) {
    beta_ = (p.N + 2.0 * p.s) / 2.0;
    pref_hyp_ = 2.0 * std::pow(M_PI, p.N / 2.0) / gamma_fn(p.N / 2.0);
    pref_j_ = 2.0 * std::pow(M_PI, (p.N - 1) / 2.0) / gamma_fn((p.N - 1) / 2.0) *
              std::pow(2.0, -1.0 - 2.0 * p.s);
    cj_ = gamma_fn((p.N - 1) / 2.0) * gamma_fn(p.s + 0.5) / (2.0 * gamma_fn(p.N / 2.0 + p.s));
    // Chebyshev model of H(w) = log(J(e^w) e^{(1+2s)w}) on the narrow band
    // of eps the dispatcher can route here (ratio^2 > 0.98 gives eps < 6e-3).
    w_lo_ = std::log(1e-9);
    w_hi_ = std::log(6e-3);
    const int n = 96;
    cheb_.assign(n, 0.0);
    std::vector<double> hv(n);
    for (int k = 0; k < n; ++k) {
        double xk = std::cos(M_PI * (k + 0.5) / n);
        double w = 0.5 * (w_lo_ + w_hi_) + 0.5 * (w_hi_ - w_lo_) * xk;
        double eps = std::exp(w);
        hv[k] = std::log(j_quadrature(p.N, beta_, eps, 24) * std::pow(eps, 1.0 + 2.0 * p.s));
    }
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += hv[k] * std::cos(M_PI * j * (k + 0.5) / n);
        cheb_[j] = 2.0 / n * s;
    }
}

double ThetaEvaluator::cheb_eval(double w) const {
    double x = (2.0 * w - (w_lo_ + w_hi_)) / (w_hi_ - w_lo_);
    double b0 = 0.0, b1 = 0.0;
    for (int j = int(cheb_.size()) - 1; j >= 1; --j) {
        double t = 2.0 * x * b0 - b1 + cheb_[j];
        b1 = b0;
        b0 = t;
    }
    return x * b0 - b1 + 0.5 * cheb_[0];
}

double ThetaEvaluator::j_profile(double eps) const { return j_quadrature(p_.N, beta_, eps, 24); }

double ThetaEvaluator::operator()(double r, double rho) const {
    double hi = std::max(r, rho), lo = std::min(r, rho);
    double q = lo / hi, x = q * q;
    if (x <= 0.98) {
        double f = hyp2f1_series_bounded(-p_.s, p_.N / 2.0 - p_.s - 1.0, p_.N / 2.0, x, 400000,
                                         nullptr);
        return pref_hyp_ * std::pow(hi, -double(p_.N) - 2.0 * p_.s) *
               std::pow(1.0 - x, -1.0 - 2.0 * p_.s) * f;
    }
    double eps = (hi - lo) / (2.0 * std::sqrt(r * rho));
    double j;
    if (eps < 1e-9) {
        j = cj_ * std::pow(eps, -1.0 - 2.0 * p_.s);
    } else if (eps <= 6e-3) {
        j = std::exp(cheb_eval(std::log(eps))) * std::pow(eps, -1.0 - 2.0 * p_.s);
    } else {
        j = j_profile(eps);
    }
    return pref_j_ * std::pow(r * rho, -beta_) * j;
}

}  // namespace fracsymm
