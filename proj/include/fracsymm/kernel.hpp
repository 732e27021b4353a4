#pragma once

#include <vector>

#include "fracsymm/specfun.hpp"

namespace fracsymm {

enum class ThetaMethod { angular_quadrature, hypergeometric };

// One kernel evaluation: value of Theta_{N,s}(r,rho), the branch that
// produced it and an upper bound on the relative error.
struct ThetaEval {
    double value;
    ThetaMethod method;
    double est_error;
};

// Angular-integral route,
//   Theta = (2 pi^{(N-1)/2} / Gamma((N-1)/2)) int_0^pi sin^{N-2}(t)
//           (r^2 - 2 r rho cos t + rho^2)^{-(N+2s)/2} dt,
// by graded Gauss-Legendre panels concentrated where the integrand peaks.
// Requires |r - rho| / max(r,rho) >= 1e-6.
ThetaEval theta_quadrature(const KernelParams& p, double r, double rho);

// Closed-form route via the Gauss hypergeometric function; for r < rho,
//   Theta = (2 pi^{N/2} / Gamma(N/2)) rho^{-N-2s}
//           2F1((N+2s)/2, s+1; N/2; r^2/rho^2),
// arguments swapped for rho < r. Valid for min^2/max^2 away from 1.
ThetaEval theta_hypergeometric(const KernelParams& p, double r, double rho);

// Dispatcher: hypergeometric branch when (min/max)^2 <= 0.98, otherwise
// angular quadrature. Throws std::domain_error on the diagonal r == rho.
ThetaEval theta(const KernelParams& p, double r, double rho);

// Coefficient c(t) with Theta(t+d/2, t-d/2) d^{1+2s} -> c(t) as d -> 0+,
// by Richardson extrapolation with empirically estimated order.
double near_diagonal_coefficient(const KernelParams& p, double t);

// Fast kernel evaluator for assembly loops. Spends a few hundred direct
// quadrature evaluations at construction on a Chebyshev model of the
// near-diagonal profile; individual calls then cost a handful of flops.
// Lifetime is one assembly (per-assembly memoization); accuracy ~1e-11.
class ThetaEvaluator {
  public:
    explicit ThetaEvaluator(const KernelParams& p);

    double operator()(double r, double rho) const;

    const KernelParams& params() const { return p_; }

  private:
    double j_profile(double eps) const;   // J(eps) by direct quadrature
    double cheb_eval(double w) const;

    KernelParams p_;
    double beta_;       // (N+2s)/2
    double pref_hyp_;   // 2 pi^{N/2} / Gamma(N/2)
    double pref_j_;     // 2 pi^{(N-1)/2} / Gamma((N-1)/2) * 2^{-1-2s}
    double cj_;         // lim eps^{1+2s} J(eps)
    double w_lo_, w_hi_;
    std::vector<double> cheb_;
};

}  // namespace fracsymm
