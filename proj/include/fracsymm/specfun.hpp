#pragma once

#include <stdexcept>

namespace fracsymm {

// Dimension N >= 2 and fractional order s in (0,1). Shared by every
// fractional-order computation in the library.
struct KernelParams {
    int N;
    double s;

    KernelParams(int N_, double s_) : N(N_), s(s_) {
        if (N < 2) throw std::domain_error("KernelParams: N must be >= 2");
        if (!(s > 0.0 && s < 1.0)) throw std::domain_error("KernelParams: s must lie in (0,1)");
    }
};

// Gamma function for x > 0 (Lanczos approximation, fixed coefficients).
double gamma_fn(double x);

// Normalisation constant of the fractional Laplacian,
//   gamma(N,s) = s 4^s Gamma((N+2s)/2) / (pi^{N/2} Gamma(1-s)).
double frac_lap_constant(const KernelParams& p);

// Critical Sobolev exponent 2N/(N-2s); requires N > 2s.
double critical_exponent(const KernelParams& p);

// Gauss hypergeometric function 2F1(a,b;c;x) for c > b > 0 and x in [0,1).
// Power series for x <= 0.5, Euler integral otherwise.
double hyp2f1(double a, double b, double c, double x);

// The two evaluation routes, individually accessible.
double hyp2f1_series(double a, double b, double c, double x);
double hyp2f1_euler(double a, double b, double c, double x);

// Series with an explicit term cap; writes an upper bound on the relative
// truncation error to est_rel_error. Valid for c > 0 and x in [0,1).
double hyp2f1_series_bounded(double a, double b, double c, double x, long max_terms,
                             double* est_rel_error);

// d/dx 2F1(a,b;c;x) = (ab/c) 2F1(a+1,b+1;c+1;x).
double hyp2f1_derivative(double a, double b, double c, double x);

// Volume of the unit ball in R^N.
double unit_ball_volume(int N);

}  // namespace fracsymm
