#pragma once

#include <complex>
#include <memory>
#include <utility>
#include <vector>

#include "fracsymm/grid2d.hpp"
#include "fracsymm/report.hpp"

namespace fracsymm {

// Collocation discretization of the restricted fractional Laplacian in the
// plane:
//   (A u)_i = gamma(2,s) [ sum_{j != i} K_ij a_j (u_i - u_j) + T_i u_i ],
// K the cell-averaged kernel |x-y|^{-2-2s} (exact integral over the 8
// nearest cells, midpoint beyond), T_i the exterior tail. A is a symmetric
// M-matrix with row sums gamma(2,s) T_i > 0.
class Operator2D {
  public:
    Operator2D(std::shared_ptr<const PlanarDomain> dom, double s);
    ~Operator2D();
    Operator2D(const Operator2D&) = delete;
    Operator2D& operator=(const Operator2D&) = delete;

    const PlanarDomain& domain() const { return *dom_; }
    std::shared_ptr<const PlanarDomain> domain_ptr() const { return dom_; }
    double order() const { return s_; }
    double frac_constant() const { return gamma_ns_; }

    // K_ij between two cells (i != j)
    double kernel_entry(std::size_t i, std::size_t j) const;
    double tail(std::size_t i) const { return tails_[i]; }
    double diag(std::size_t i) const;

    std::vector<double> apply(const std::vector<double>& u) const;

    // Gagliardo seminorm squared of the cell function (zero outside):
    // sum_{i!=j} (u_i-u_j)^2 K_ij a_i a_j + 2 sum_i u_i^2 T_i a_i.
    double seminorm_squared(const std::vector<double>& u) const;

    // Solves (A + c I) u = f by dense Cholesky (small n) or Jacobi-CG with
    // FFT-accelerated matvecs (large n). diag_shift adds a nonnegative
    // per-cell diagonal term.
    std::vector<double> solve_shifted(const std::vector<double>& rhs, double c,
                                      const std::vector<double>& diag_shift) const;

  private:
    void build_fft() const;
    std::vector<double> convolve(const std::vector<double>& cell_vals) const;

    std::shared_ptr<const PlanarDomain> dom_;
    double s_, gamma_ns_;
    std::vector<double> ktab_;   // offset table, self entry 0
    std::vector<double> tails_;  // T_i
    std::vector<double> ksum_;   // sum_{j != i} K_ij a_j
    double m2_ = 0;              // self-cell curvature weight, O(h^{2-2s})
    std::vector<int> nbr_;       // 4-neighbor cell indices (-1 if absent)
    // FFT workspace (lazy, immutable after first build)
    mutable bool fft_ready_ = false;
    mutable int px_ = 0, py_ = 0;
    mutable std::vector<std::complex<double>> khat_;
    mutable void* plan_fwd_ = nullptr;
    mutable void* plan_bwd_ = nullptr;
    mutable std::vector<double> rbuf_;
    mutable std::vector<std::complex<double>> cbuf_;
};

std::shared_ptr<Operator2D> assemble_operator_2d(std::shared_ptr<const PlanarDomain> dom,
                                                 double s);

double seminorm_2d_squared(const GridFunction2D& u, double s);

GridFunction2D solve_linear_2d(const Operator2D& op, const GridFunction2D& f, double c);

// k-regularized singular solve of (-Delta)^s u + c u = f / u^gamma by damped
// Newton over the schedule of regularization levels.
std::pair<GridFunction2D, SolveReport> solve_singular_2d(const Operator2D& op,
                                                         const GridFunction2D& f, double gamma,
                                                         double c,
                                                         const std::vector<double>& schedule);

}  // namespace fracsymm
