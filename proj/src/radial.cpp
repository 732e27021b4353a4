#include "fracsymm/radial.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <chrono>
#include <cmath>

#include "fracsymm/errors.hpp"
#include "fracsymm/util.hpp"

namespace fracsymm {

namespace {

// Hat basis at nodes 1..M-1; the first hat extends flat to r=0 (zero slope
// at the origin), all hats vanish at r=R and beyond.
struct HatBasis {
    const std::vector<double>& r;
    int M;

    explicit HatBasis(const RadialGrid& g) : r(g.nodes), M(g.M()) {}

    double value(int i, double x) const {
        if (i == 1) {
            if (x <= r[1]) return 1.0;
            if (x <= r[2]) return (r[2] - x) / (r[2] - r[1]);
            return 0.0;
        }
        if (x <= r[i - 1] || x >= r[i + 1]) return 0.0;
        if (x <= r[i]) return (x - r[i - 1]) / (r[i] - r[i - 1]);
        return (r[i + 1] - x) / (r[i + 1] - r[i]);
    }

    // hats supported on element e = [r_{e-1}, r_e]
    void active_on(int e, int out[2], int& count) const {
        count = 0;
        if (e - 1 >= 1 || e == 1) {
            if (e == 1) {
                out[count++] = 1;
                return;
            }
            out[count++] = e - 1;
        }
        if (e <= M - 1) out[count++] = e;
    }

    double slope_on(int i, int e) const {
        // slope of hat i on element e
        if (i == 1 && e == 1) return 0.0;
        if (e == i) return 1.0 / (r[e] - r[e - 1]);
        if (e == i + 1) return -1.0 / (r[e] - r[e - 1]);
        return 0.0;
    }
};

double n_omega(const KernelParams& p) { return p.N * unit_ball_volume(p.N); }

// tau(r) = int_R^inf Theta(r,rho) rho^{N-1} drho via rho = R/t, graded
// toward t = 1 where the integrand peaks for r near R.
double tail_weight(const ThetaEvaluator& th, double R, double r) {
    const KernelParams& p = th.params();
    double scale = std::max(0.5 * (R - r) / R, 1e-12);
    auto edges = geometric_panels(1.0, scale);
    auto f = [&](double e) {
        double t = 1.0 - e;  // t in (0,1], rho = R/t
        double rho = R / t;
        return th(r, rho) * std::pow(rho, p.N - 1) * R / (t * t);
    };
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        acc += gl_integrate(f, edges[k], edges[k + 1], 8);
    return acc;
}

}  // namespace

std::shared_ptr<const RadialGrid> make_radial_mesh(double R, int M, const KernelParams& p) {
    if (M < 8) throw std::domain_error("make_radial_mesh: need M >= 8");
    if (!(R > 0)) throw std::domain_error("make_radial_mesh: R must be positive");
    auto g = std::make_shared<RadialGrid>(RadialGrid{R, p, {}});
    double q = std::max(1.0, 1.0 / p.s);
    g->nodes.resize(M + 1);
    for (int i = 0; i <= M; ++i)
        g->nodes[i] = R * (1.0 - std::pow(1.0 - double(i) / M, q));
    g->nodes[M] = R;
    return g;
}

RadialFunction::RadialFunction(std::shared_ptr<const RadialGrid> g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (!grid || values.size() != grid->nodes.size())
        throw std::invalid_argument("RadialFunction: size mismatch");
}

double RadialFunction::operator()(double r) const {
    const auto& nd = grid->nodes;
    if (r < 0) throw std::domain_error("RadialFunction: r < 0");
    if (r >= nd.back()) return 0.0;
    auto it = std::upper_bound(nd.begin(), nd.end(), r);
    std::size_t j = std::size_t(it - nd.begin());
    if (j == 0) return values[0];
    double t = (r - nd[j - 1]) / (nd[j] - nd[j - 1]);
    return values[j - 1] + t * (values[j] - values[j - 1]);
}

double RadialFunction::max_value() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
}

GagliardoMatrixRadial assemble_gagliardo_radial(std::shared_ptr<const RadialGrid> grid) {
    const RadialGrid& g = *grid;
    const KernelParams& p = g.params;
    const int M = g.M();
    const int nd = M - 1;
    const double Nw = n_omega(p);
    ThetaEvaluator th(p);
    HatBasis hat(g);

    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(nd, nd);
    const GaussRule& gl8 = gauss_legendre(8);
    const GaussRule& gl12 = gauss_legendre(12);
    const GaussRule& gl6 = gauss_legendre(6);

    // identical panels: phi's are linear there, so the hat differences give
    // slope_i slope_j delta^2 and one scalar integral serves every (i,j)
    for (int e = 2; e <= M; ++e) {
        double lo = g.nodes[e - 1], hi = g.nodes[e];
        double S = 0.0;
        for (std::size_t it = 0; it < gl12.x.size(); ++it) {
            double tau = lo + (hi - lo) * gl12.x[it];
            double wt = (hi - lo) * gl12.w[it];
            double D = hi - tau;
            if (D <= 0) continue;
            auto edges = geometric_panels(D, D * 0x1.0p-25);
            double inner = 0.0;
            for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
                for (std::size_t iq = 0; iq < gl8.x.size(); ++iq) {
                    double d = edges[k] + (edges[k + 1] - edges[k]) * gl8.x[iq];
                    if (d < 4e-16 * tau) continue;
                    double w = (edges[k + 1] - edges[k]) * gl8.w[iq];
                    double rho = tau + d;
                    inner += w * d * d * th(tau, rho) * std::pow(tau, p.N - 1) *
                             std::pow(rho, p.N - 1);
                }
            }
            S += 2.0 * wt * inner;
        }
        int act[2], na;
        hat.active_on(e, act, na);
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < na; ++b)
                G(act[a] - 1, act[b] - 1) += hat.slope_on(act[a], e) * hat.slope_on(act[b], e) * S;
    }

    // distinct panel pairs, graded toward the facing edges
    struct Task {
        int ea, eb;
    };
    std::vector<Task> tasks;
    for (int ea = 1; ea <= M; ++ea)
        for (int eb = ea + 1; eb <= M; ++eb) tasks.push_back({ea, eb});
    std::vector<Eigen::MatrixXd> partial(tasks.size());
    // local index map: dofs {ea-1, ea, eb-1, eb} clipped to [1, M-1]
    parallel_for(tasks.size(), [&](std::size_t lo_t, std::size_t hi_t) {
        for (std::size_t tix = lo_t; tix < hi_t; ++tix) {
            int ea = tasks[tix].ea, eb = tasks[tix].eb;
            double a0 = g.nodes[ea - 1], a1 = g.nodes[ea];
            double b0 = g.nodes[eb - 1], b1 = g.nodes[eb];
            double A = a1 - a0, B = b1 - b0, gap = b0 - a1;
            int dofs[4], ndof = 0;
            for (int i : {ea - 1, ea, eb - 1, eb})
                if (i >= 1 && i <= M - 1 && (ndof == 0 || dofs[ndof - 1] != i)) dofs[ndof++] = i;
            Eigen::MatrixXd loc = Eigen::MatrixXd::Zero(ndof, ndof);
            bool graded = gap < 2.0 * (A + B);
            std::vector<double> ex =
                graded ? geometric_panels(A, std::max(gap / 2, A * 0x1.0p-25))
                       : std::vector<double>{0.0, A};
            std::vector<double> ey =
                graded ? geometric_panels(B, std::max(gap / 2, B * 0x1.0p-25))
                       : std::vector<double>{0.0, B};
            double phiR[4], phiP[4];
            for (std::size_t kx = 0; kx + 1 < ex.size(); ++kx)
                for (std::size_t ky = 0; ky + 1 < ey.size(); ++ky) {
                    for (std::size_t qx = 0; qx < gl6.x.size(); ++qx) {
                        double x = ex[kx] + (ex[kx + 1] - ex[kx]) * gl6.x[qx];
                        double wx = (ex[kx + 1] - ex[kx]) * gl6.w[qx];
                        double r = a1 - x;
                        for (int ii = 0; ii < ndof; ++ii) phiR[ii] = hat.value(dofs[ii], r);
                        for (std::size_t qy = 0; qy < gl6.x.size(); ++qy) {
                            double y = ey[ky] + (ey[ky + 1] - ey[ky]) * gl6.x[qy];
                            double wy = (ey[ky + 1] - ey[ky]) * gl6.w[qy];
                            double rho = b0 + y;
                            if (rho - r < 4e-16 * rho) continue;
                            double base = 2.0 * wx * wy * th(r, rho) *
                                          std::pow(r, p.N - 1) * std::pow(rho, p.N - 1);
                            for (int ii = 0; ii < ndof; ++ii)
                                phiP[ii] = hat.value(dofs[ii], rho);
                            for (int ii = 0; ii < ndof; ++ii) {
                                double di = phiR[ii] - phiP[ii];
                                if (di == 0.0) continue;
                                for (int jj = 0; jj < ndof; ++jj) {
                                    double dj = phiR[jj] - phiP[jj];
                                    loc(ii, jj) += base * di * dj;
                                }
                            }
                        }
                    }
                }
            partial[tix] = std::move(loc);
        }
    });
    for (std::size_t tix = 0; tix < tasks.size(); ++tix) {
        int ea = tasks[tix].ea, eb = tasks[tix].eb;
        int dofs[4], ndof = 0;
        for (int i : {ea - 1, ea, eb - 1, eb})
            if (i >= 1 && i <= M - 1 && (ndof == 0 || dofs[ndof - 1] != i)) dofs[ndof++] = i;
        for (int ii = 0; ii < ndof; ++ii)
            for (int jj = 0; jj < ndof; ++jj)
                G(dofs[ii] - 1, dofs[jj] - 1) += partial[tix](ii, jj);
    }

    // exterior tail, 2 int_0^R phi_i phi_j tau(r) r^{N-1} dr
    GagliardoMatrixRadial out;
    out.tail_weights.resize(M + 1);
    for (int i = 0; i <= M; ++i)
        out.tail_weights[i] = (g.nodes[i] < g.R) ? tail_weight(th, g.R, g.nodes[i]) : 0.0;
    for (int e = 1; e <= M; ++e) {
        double lo = g.nodes[e - 1], hi = g.nodes[e];
        int act[2], na;
        hat.active_on(e, act, na);
        for (std::size_t q = 0; q < gl8.x.size(); ++q) {
            double r = lo + (hi - lo) * gl8.x[q];
            double w = (hi - lo) * gl8.w[q];
            double tw = tail_weight(th, g.R, r);
            for (int a = 0; a < na; ++a)
                for (int b = 0; b < na; ++b)
                    G(act[a] - 1, act[b] - 1) += 2.0 * w * tw * hat.value(act[a], r) *
                                                 hat.value(act[b], r) * std::pow(r, p.N - 1);
        }
    }

    G *= Nw;
    // enforce exact symmetry (quadratures are symmetric up to roundoff)
    G = 0.5 * (G + G.transpose()).eval();
    out.grid = grid;
    out.G = std::move(G);
    return out;
}

RadialSystem::RadialSystem(std::shared_ptr<const RadialGrid> grid)
    : grid_(grid), gag_(assemble_gagliardo_radial(grid)) {
    const RadialGrid& g = *grid_;
    const int M = g.M(), nd = M - 1;
    const double Nw = n_omega(g.params);
    HatBasis hat(g);
    const GaussRule& gl8 = gauss_legendre(8);
    mass_ = Eigen::MatrixXd::Zero(nd, nd);
    for (int e = 1; e <= M; ++e) {
        double lo = g.nodes[e - 1], hi = g.nodes[e];
        int act[2], na;
        hat.active_on(e, act, na);
        for (std::size_t q = 0; q < gl8.x.size(); ++q) {
            double r = lo + (hi - lo) * gl8.x[q];
            double w = (hi - lo) * gl8.w[q] * Nw * std::pow(r, g.params.N - 1);
            for (int a = 0; a < na; ++a)
                for (int b = 0; b < na; ++b)
                    mass_(act[a] - 1, act[b] - 1) +=
                        w * hat.value(act[a], r) * hat.value(act[b], r);
        }
    }
}

Eigen::VectorXd RadialSystem::load(const std::function<double(double)>& f) const {
    const RadialGrid& g = *grid_;
    const int M = g.M();
    const double Nw = n_omega(g.params);
    HatBasis hat(g);
    const GaussRule& gl16 = gauss_legendre(16);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(M - 1);
    for (int e = 1; e <= M; ++e) {
        double lo = g.nodes[e - 1], hi = g.nodes[e];
        int act[2], na;
        hat.active_on(e, act, na);
        for (std::size_t q = 0; q < gl16.x.size(); ++q) {
            double r = lo + (hi - lo) * gl16.x[q];
            double w = (hi - lo) * gl16.w[q] * Nw * std::pow(r, g.params.N - 1) * f(r);
            for (int a = 0; a < na; ++a) b(act[a] - 1) += w * hat.value(act[a], r);
        }
    }
    return b;
}

RadialFunction RadialSystem::from_dofs(const Eigen::VectorXd& w) const {
    const int M = grid_->M();
    std::vector<double> v(M + 1, 0.0);
    v[0] = w(0);
    for (int i = 1; i <= M - 1; ++i) v[i] = w(i - 1);
    return RadialFunction(grid_, std::move(v));
}

Eigen::VectorXd RadialSystem::to_dofs(const RadialFunction& u) const {
    const int M = grid_->M();
    Eigen::VectorXd w(M - 1);
    for (int i = 1; i <= M - 1; ++i) w(i - 1) = u.values[i];
    return w;
}

double RadialSystem::energy_seminorm_squared(const RadialFunction& u) const {
    Eigen::VectorXd w = to_dofs(u);
    return w.dot(gag_.G * w);
}

RadialFunction RadialSystem::solve_linear(const std::function<double(double)>& rhs,
                                          double c) const {
    const KernelParams& p = grid_->params;
    Eigen::MatrixXd A = 0.5 * frac_lap_constant(p) * gag_.G;
    if (c > 0) A += c * mass_;
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() != Eigen::Success)
        throw numerical_error("solve_linear_radial: Cholesky failed");
    Eigen::VectorXd b = load(rhs);
    Eigen::VectorXd w = llt.solve(b);
    RadialFunction out = from_dofs(w);
    bool rhs_nonneg = true;
    for (double r : grid_->nodes)
        if (rhs(std::min(r, grid_->R * (1 - 1e-12))) < 0) rhs_nonneg = false;
    if (rhs_nonneg) {
        double mx = out.max_value();
        for (double v : out.values)
            if (v < -1e-10 * std::max(mx, 1e-300))
                throw numerical_error("solve_linear_radial: positivity violation");
    }
    return out;
}

RadialSingularResult RadialSystem::solve_singular(const std::function<double(double)>& F,
                                                  double gamma, double c,
                                                  const std::vector<double>& schedule) const {
    const auto t0 = std::chrono::steady_clock::now();
    const RadialGrid& g = *grid_;
    const KernelParams& p = g.params;
    const int M = g.M(), nd = M - 1;
    if (schedule.empty()) throw std::domain_error("solve_singular_radial: empty schedule");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (!(schedule[i] > schedule[i - 1]))
            throw std::domain_error("solve_singular_radial: schedule must increase");

    Eigen::MatrixXd A = 0.5 * frac_lap_constant(p) * gag_.G;
    if (c > 0) A += c * mass_;
    HatBasis hat(g);
    const GaussRule& gl16 = gauss_legendre(16);
    const double Nw = n_omega(p);

    auto interp = [&](const Eigen::VectorXd& w, double r) {
        return from_dofs(w)(r);  // small M; clarity over speed here
    };

    // residual and Jacobian diagonal-form assembled per element
    auto newton_pieces = [&](const Eigen::VectorXd& w, double k, Eigen::VectorXd& res,
                             Eigen::MatrixXd* jac) {
        RadialFunction uw = from_dofs(w);
        res = A * w;
        if (jac) *jac = A;
        for (int e = 1; e <= M; ++e) {
            double lo = g.nodes[e - 1], hi = g.nodes[e];
            int act[2], na;
            hat.active_on(e, act, na);
            for (std::size_t q = 0; q < gl16.x.size(); ++q) {
                double r = lo + (hi - lo) * gl16.x[q];
                double wq = (hi - lo) * gl16.w[q] * Nw * std::pow(r, p.N - 1);
                double fk = std::min(F(r), k);
                double uval = uw(r) + 1.0 / k;
                double gval = fk * std::pow(uval, -gamma);
                for (int a = 0; a < na; ++a) res(act[a] - 1) -= wq * gval * hat.value(act[a], r);
                if (jac) {
                    double dval = gamma * fk * std::pow(uval, -gamma - 1.0);
                    for (int a = 0; a < na; ++a)
                        for (int b = 0; b < na; ++b)
                            (*jac)(act[a] - 1, act[b] - 1) +=
                                wq * dval * hat.value(act[a], r) * hat.value(act[b], r);
                }
            }
        }
    };

    RadialSingularResult out;
    SolveReport& rep = out.report;
    rep.monotonicity_margin = 1e300;
    Eigen::VectorXd bF = load(F);
    const double res_tol = 1e-13 * std::max(bF.norm(), 1e-300);

    Eigen::VectorXd w = Eigen::LLT<Eigen::MatrixXd>(A).solve(bF);
    for (int i = 0; i < nd; ++i) w(i) = std::pow(std::max(w(i), 1e-300), 1.0 / (1.0 + gamma));
    Eigen::VectorXd w_prev;

    for (double k : schedule) {
        int iters = 0;
        Eigen::VectorXd res;
        Eigen::MatrixXd jac;
        for (; iters < 50; ++iters) {
            newton_pieces(w, k, res, &jac);
            double rn = res.norm();
            if (rn <= res_tol) break;
            Eigen::LLT<Eigen::MatrixXd> llt(jac);
            if (llt.info() != Eigen::Success)
                throw numerical_error("solve_singular_radial: Jacobian factorization failed");
            Eigen::VectorXd d = llt.solve(-res);
            double alpha = 1.0;
            for (int h = 0; h < 60 && (w + alpha * d).minCoeff() <= 0.0; ++h) alpha *= 0.5;
            Eigen::VectorXd wn;
            for (int h = 0; h < 60; ++h) {
                wn = w + alpha * d;
                Eigen::VectorXd rtry;
                newton_pieces(wn, k, rtry, nullptr);
                if (rtry.norm() <= (1.0 - 1e-4 * alpha) * rn || alpha < 1e-10) break;
                alpha *= 0.5;
            }
            if (alpha < 1e-10)
                throw numerical_error("solve_singular_radial: line search stalled");
            w = wn;
        }
        if (iters == 50) throw numerical_error("solve_singular_radial: Newton did not converge");
        rep.k_used.push_back(k);
        rep.newton_iters.push_back(iters);
        out.iterates.push_back(from_dofs(w));
        double umax = w.maxCoeff();
        if (w_prev.size()) {
            double worst = ((w - w_prev) / umax).minCoeff();
            double diff = (w - w_prev).lpNorm<Eigen::Infinity>() / umax;
            rep.monotonicity_margin = std::min(rep.monotonicity_margin, worst);
            rep.last_sweep_diff = diff;
            if (worst < -1e-8)
                throw numerical_error("solve_singular_radial: k-monotonicity violated");
            if (diff <= 1e-6) {
                rep.converged = true;
                w_prev = w;
                break;
            }
        }
        w_prev = w;
    }
    if (schedule.size() <= 1) rep.converged = true;
    {
        Eigen::VectorXd res;
        newton_pieces(w, rep.k_used.back(), res, nullptr);
        rep.final_residual = res.norm();
    }
    out.solution = from_dofs(w);
    double imin = 1e300;
    for (int i = 0; i <= M; ++i)
        if (g.nodes[i] <= g.R * (1.0 - 4.0 / M)) imin = std::min(imin, out.solution.values[i]);
    rep.interior_min = (imin == 1e300) ? 0.0 : imin;
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

RadialFunction solve_linear_radial(std::shared_ptr<const RadialGrid> grid,
                                   const std::function<double(double)>& rhs, double c) {
    return RadialSystem(grid).solve_linear(rhs, c);
}

RadialSingularResult solve_singular_radial(std::shared_ptr<const RadialGrid> grid,
                                           const std::function<double(double)>& F, double gamma,
                                           double c, const std::vector<double>& schedule) {
    return RadialSystem(grid).solve_singular(F, gamma, c, schedule);
}

double integrated_inequality_lhs(const RadialFunction& u, double r, double power) {
    const RadialGrid& g = *u.grid;
    const KernelParams& p = g.params;
    if (!(r > 0 && r < g.R))
        throw std::domain_error("integrated_inequality_lhs: r must lie in (0,R)");
    if (power < 1.0) throw std::domain_error("integrated_inequality_lhs: power must be >= 1");
    ThetaEvaluator th(p);
    auto up = [&](double x) { return std::pow(u(x), power); };
    const GaussRule& gl8 = gauss_legendre(8);

    // interior block [0,r] x [r,R]; graded toward the corner (r,r)
    double acc = 0.0;
    auto ex = geometric_panels(r, r * 0x1.0p-22);
    auto ey = geometric_panels(g.R - r, (g.R - r) * 0x1.0p-22);
    for (std::size_t kx = 0; kx + 1 < ex.size(); ++kx)
        for (std::size_t ky = 0; ky + 1 < ey.size(); ++ky)
            for (std::size_t qx = 0; qx < gl8.x.size(); ++qx) {
                double x = ex[kx] + (ex[kx + 1] - ex[kx]) * gl8.x[qx];
                double tau = r - x;
                double wx = (ex[kx + 1] - ex[kx]) * gl8.w[qx];
                double upt = up(tau);
                for (std::size_t qy = 0; qy < gl8.x.size(); ++qy) {
                    double y = ey[ky] + (ey[ky + 1] - ey[ky]) * gl8.x[qy];
                    double rho = r + y;
                    if (rho - tau < 4e-16 * rho) continue;
                    double wy = (ey[ky + 1] - ey[ky]) * gl8.w[qy];
                    acc += wx * wy * (upt - up(rho)) * th(tau, rho) *
                           std::pow(tau, p.N - 1) * std::pow(rho, p.N - 1);
                }
            }

    // exterior part: u == 0 beyond R, so the integrand reduces to
    // u(tau)^power times the tail weight
    auto tail_term = [&](double tau) {
        return up(tau) * tail_weight(th, g.R, tau) * std::pow(tau, p.N - 1);
    };
    for (std::size_t kx = 0; kx + 1 < ex.size(); ++kx)
        acc += gl_integrate(tail_term, r - ex[kx + 1], r - ex[kx], 8);

    return frac_lap_constant(p) * acc;
}

double torsion_coefficient(const KernelParams& p) {
    return gamma_fn(p.N / 2.0) /
           (std::pow(4.0, p.s) * gamma_fn((p.N + 2.0 * p.s) / 2.0) * gamma_fn(1.0 + p.s));
}

ConcentrationCurve radial_concentration(const RadialFunction& u, double power,
                                        const std::vector<double>& sigma_grid) {
    const RadialGrid& g = *u.grid;
    const int N = g.params.N;
    const double omega = unit_ball_volume(N);
    const double total = omega * std::pow(g.R, N);
    std::vector<double> vols;
    for (double rn : g.nodes) vols.push_back(omega * std::pow(rn, N));
    for (double s : sigma_grid)
        if (s >= 0 && s <= total) vols.push_back(s);
    std::sort(vols.begin(), vols.end());
    vols.erase(std::unique(vols.begin(), vols.end()), vols.end());

    ConcentrationCurve c;
    c.volumes = vols;
    c.cumulative.resize(vols.size());
    const GaussRule& gl12 = gauss_legendre(12);
    double acc = 0.0, rprev = 0.0;
    for (std::size_t k = 0; k < vols.size(); ++k) {
        double rk = std::pow(vols[k] / omega, 1.0 / N);
        if (rk > rprev) {
            auto f = [&](double x) {
                return std::pow(u(x), power) * std::pow(x, N - 1) * N * omega;
            };
            acc += gl_integrate(f, rprev, rk, int(gl12.x.size()));
            rprev = rk;
        }
        c.cumulative[k] = acc;
    }
    return c;
}

}  // namespace fracsymm
