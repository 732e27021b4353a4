#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <vector>

#include "fracsymm/kernel.hpp"
#include "fracsymm/rearrange.hpp"
#include "fracsymm/report.hpp"
#include "fracsymm/specfun.hpp"

namespace fracsymm {

// Mesh on [0,R], graded toward the boundary where solutions behave like
// dist^s:  r_i = R (1 - (1 - i/M)^q), q = max(1, 1/s), so the last gap is
// R M^{-1/s}.
struct RadialGrid {
    double R;
    KernelParams params;
    std::vector<double> nodes;  // 0 = r_0 < ... < r_M = R

    int M() const { return int(nodes.size()) - 1; }
};

std::shared_ptr<const RadialGrid> make_radial_mesh(double R, int M, const KernelParams& p);

// Piecewise-linear radial profile on the grid, zero for r > R.
struct RadialFunction {
    std::shared_ptr<const RadialGrid> grid;
    std::vector<double> values;  // at all M+1 nodes

    RadialFunction() = default;
    RadialFunction(std::shared_ptr<const RadialGrid> g, std::vector<double> v);
    double operator()(double r) const;
    double max_value() const;
};

// Radial Gagliardo form: G_ij = N omega_N iint over (0,inf)^2 of
// [phi_i(r)-phi_i(rho)][phi_j(r)-phi_j(rho)] Theta(r,rho) (r rho)^{N-1},
// hat functions at nodes 1..M-1 (the first hat extends flat to r = 0,
// imposing zero slope at the origin; Dirichlet at r = R). Includes the
// exterior tail 2 int phi_i phi_j tau(r) r^{N-1} with
// tau(r) = int_R^inf Theta(r,rho) rho^{N-1} drho.
struct GagliardoMatrixRadial {
    std::shared_ptr<const RadialGrid> grid;
    Eigen::MatrixXd G;                 // (M-1) x (M-1), SPD
    std::vector<double> tail_weights;  // tau at the nodes (diagnostic)
};

GagliardoMatrixRadial assemble_gagliardo_radial(std::shared_ptr<const RadialGrid> grid);

struct RadialSingularResult {
    RadialFunction solution;
    std::vector<RadialFunction> iterates;  // one per k in the schedule run
    SolveReport report;
};

// Assembled forms for one grid; solvers share the factorizations.
class RadialSystem {
  public:
    explicit RadialSystem(std::shared_ptr<const RadialGrid> grid);

    const RadialGrid& grid() const { return *grid_; }
    std::shared_ptr<const RadialGrid> grid_ptr() const { return grid_; }
    const GagliardoMatrixRadial& gagliardo() const { return gag_; }
    const Eigen::MatrixXd& mass() const { return mass_; }

    Eigen::VectorXd load(const std::function<double(double)>& f) const;

    // (gamma(N,s)/2) G w + c Mass w = load(rhs)
    RadialFunction solve_linear(const std::function<double(double)>& rhs, double c) const;

    RadialSingularResult solve_singular(const std::function<double(double)>& F, double gamma,
                                        double c, const std::vector<double>& schedule) const;

    // w' G w of the coefficient vector of u (u must live on this grid)
    double energy_seminorm_squared(const RadialFunction& u) const;

    RadialFunction from_dofs(const Eigen::VectorXd& w) const;
    Eigen::VectorXd to_dofs(const RadialFunction& u) const;

  private:
    std::shared_ptr<const RadialGrid> grid_;
    GagliardoMatrixRadial gag_;
    Eigen::MatrixXd mass_;
};

RadialFunction solve_linear_radial(std::shared_ptr<const RadialGrid> grid,
                                   const std::function<double(double)>& rhs, double c);

RadialSingularResult solve_singular_radial(std::shared_ptr<const RadialGrid> grid,
                                           const std::function<double(double)>& F, double gamma,
                                           double c, const std::vector<double>& schedule);

// gamma(N,s) int_0^r ( int_r^inf (u(t)^p - u(rho)^p) Theta(t,rho) rho^{N-1}
// drho ) t^{N-1} dt with u == 0 beyond R.
double integrated_inequality_lhs(const RadialFunction& u, double r, double power);

// Exact closed-form torsion coefficient: (-Delta)^s of
// lambda (R^2-|x|^2)^s equals 1 on the ball.
double torsion_coefficient(const KernelParams& p);

// sigma -> int over the ball of volume sigma of u(|x|)^power; evaluated on
// the union of node volumes and sigma_grid.
ConcentrationCurve radial_concentration(const RadialFunction& u, double power,
                                        const std::vector<double>& sigma_grid = {});

}  // namespace fracsymm
