#include "fracsymm/planar.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>

#ifdef FRACSYMM_HAVE_FFTW
#include <fftw3.h>
#endif

#include "fracsymm/errors.hpp"
#include "fracsymm/specfun.hpp"
#include "fracsymm/util.hpp"

namespace fracsymm {

// ---------------------------------------------------------------- geometry

bool Shape::inside(double x, double y) const {
    switch (kind) {
        case ShapeKind::disk: return x * x + y * y < a * a;
        case ShapeKind::square: return std::max(std::abs(x), std::abs(y)) < a / 2;
        case ShapeKind::ellipse: return (x / a) * (x / a) + (y / b) * (y / b) < 1.0;
    }
    return false;
}

double Shape::analytic_area() const {
    switch (kind) {
        case ShapeKind::disk: return M_PI * a * a;
        case ShapeKind::square: return a * a;
        case ShapeKind::ellipse: return M_PI * a * b;
    }
    return 0.0;
}

double Shape::outer_radius() const {
    switch (kind) {
        case ShapeKind::disk: return a;
        case ShapeKind::square: return a / std::sqrt(2.0);
        case ShapeKind::ellipse: return std::max(a, b);
    }
    return 0.0;
}

double Shape::ray_to_boundary(double px, double py, double dx, double dy) const {
    switch (kind) {
        case ShapeKind::disk: {
            double pd = px * dx + py * dy;
            return -pd + std::sqrt(pd * pd + a * a - (px * px + py * py));
        }
        case ShapeKind::square: {
            double L2 = a / 2, t = 1e300;
            if (dx > 0) t = std::min(t, (L2 - px) / dx);
            if (dx < 0) t = std::min(t, (-L2 - px) / dx);
            if (dy > 0) t = std::min(t, (L2 - py) / dy);
            if (dy < 0) t = std::min(t, (-L2 - py) / dy);
            return t;
        }
        case ShapeKind::ellipse: {
            double A = (dx / a) * (dx / a) + (dy / b) * (dy / b);
            double B = px * dx / (a * a) + py * dy / (b * b);
            double C = (px / a) * (px / a) + (py / b) * (py / b) - 1.0;
            return (-B + std::sqrt(B * B - A * C)) / A;
        }
    }
    return 0.0;
}

double Shape::boundary_distance(double px, double py) const {
    switch (kind) {
        case ShapeKind::disk: return a - std::hypot(px, py);
        case ShapeKind::square: return a / 2 - std::max(std::abs(px), std::abs(py));
        case ShapeKind::ellipse: {
            double r = std::sqrt((px / a) * (px / a) + (py / b) * (py / b));
            return (1.0 - r) * std::min(a, b);
        }
    }
    return 0.0;
}

std::string Shape::describe() const {
    char buf[64];
    switch (kind) {
        case ShapeKind::disk: std::snprintf(buf, sizeof buf, "disk:%g", a); break;
        case ShapeKind::square: std::snprintf(buf, sizeof buf, "square:%g", a); break;
        case ShapeKind::ellipse: std::snprintf(buf, sizeof buf, "ellipse:%g,%g", a, b); break;
    }
    return buf;
}

std::shared_ptr<const PlanarDomain> build_domain(const Shape& shape, double h) {
    if (!(h > 0)) throw std::domain_error("build_domain: h must be positive");
    if (2 * shape.half_width() / h < 16.0 - 1e-12 || 2 * shape.half_height() / h < 16.0 - 1e-12)
        throw std::domain_error("build_domain: need at least 16 cells across each diameter");
    auto d = std::make_shared<PlanarDomain>();
    d->shape = shape;
    d->h = h;
    d->nx = std::max(16, int(std::llround(2 * shape.half_width() / h)));
    d->ny = std::max(16, int(std::llround(2 * shape.half_height() / h)));
    d->x0 = -0.5 * d->nx * h + 0.5 * h;
    d->y0 = -0.5 * d->ny * h + 0.5 * h;
    d->cell_of_node.assign(std::size_t(d->nx) * d->ny, -1);
    for (int iy = 0; iy < d->ny; ++iy)
        for (int ix = 0; ix < d->nx; ++ix) {
            double x = d->x0 + ix * h, y = d->y0 + iy * h;
            if (shape.inside(x, y)) {
                d->cell_of_node[std::size_t(iy) * d->nx + ix] = int(d->cx.size());
                d->node_of_cell.push_back(iy * d->nx + ix);
                d->cx.push_back(x);
                d->cy.push_back(y);
            }
        }
    if (d->cx.empty()) throw std::domain_error("build_domain: empty domain");
    return d;
}

// ---------------------------------------------------------------- operator

namespace {

// mean of |x|^{-2-2s} over the unit-offset cell (offset in units of h)
double cell_mean_kernel(double s, double h, int di, int dj) {
    const GaussRule& g = gauss_legendre(24);
    double acc = 0.0;
    for (std::size_t p = 0; p < g.x.size(); ++p)
        for (std::size_t q = 0; q < g.x.size(); ++q) {
            double x = (di - 0.5 + g.x[p]) * h;
            double y = (dj - 0.5 + g.x[q]) * h;
            acc += g.w[p] * g.w[q] * std::pow(x * x + y * y, -(1.0 + s));
        }
    return acc;
}

}  // namespace

Operator2D::Operator2D(std::shared_ptr<const PlanarDomain> dom, double s)
    : dom_(std::move(dom)), s_(s) {
    if (!(s > 0 && s < 1)) throw std::domain_error("Operator2D: s must lie in (0,1)");
    const PlanarDomain& d = *dom_;
    gamma_ns_ = frac_lap_constant({2, s});
    const int tx = 2 * d.nx - 1, ty = 2 * d.ny - 1;
    ktab_.assign(std::size_t(tx) * ty, 0.0);
    // the kernel mean depends only on (|di|,|dj|) up to swap; compute the
    // canonical representative so the table is exactly symmetric
    const double k10 = cell_mean_kernel(s, d.h, 1, 0);
    const double k11 = cell_mean_kernel(s, d.h, 1, 1);
    for (int dj = -(d.ny - 1); dj <= d.ny - 1; ++dj)
        for (int di = -(d.nx - 1); di <= d.nx - 1; ++di) {
            if (di == 0 && dj == 0) continue;  // P.V. cancellation on the self cell
            int ma = std::max(std::abs(di), std::abs(dj));
            int mi = std::min(std::abs(di), std::abs(dj));
            double v;
            if (ma <= 1)
                v = (mi == 0) ? k10 : k11;
            else {
                double dx = ma * d.h, dy = mi * d.h;
                v = std::pow(dx * dx + dy * dy, -(1.0 + s));
            }
            ktab_[std::size_t(dj + d.ny - 1) * tx + (di + d.nx - 1)] = v;
        }

    // exterior tail: closed form beyond the covering disk, polar-grid
    // quadrature (analytic radial integral, midpoint in angle) in between
    const int nth = 512;
    tails_.resize(d.size());
    parallel_for(d.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            double px = d.cx[i], py = d.cy[i];
            double Ri = d.shape.outer_radius() + std::hypot(px, py);
            double acc = 0.0;
            for (int k = 0; k < nth; ++k) {
                double th = (k + 0.5) * 2.0 * M_PI / nth;
                double rin = d.shape.ray_to_boundary(px, py, std::cos(th), std::sin(th));
                acc += std::pow(rin, -2 * s) - std::pow(Ri, -2 * s);
            }
            tails_[i] = M_PI / s * std::pow(Ri, -2 * s) + acc / (2 * s) * (2 * M_PI / nth);
        }
    });

    // self-cell curvature weight: the P.V. expansion of the skipped cell
    // gives -(Lap u / 2) m2 with m2 = (1/2) int_cell |y|^{-2s} dy; realized
    // as a graph 5-point Laplacian over existing neighbors (zero row sum,
    // M-matrix compatible).
    {
        const GaussRule& g32 = gauss_legendre(32);
        double ang = 0.0;
        for (std::size_t q = 0; q < g32.x.size(); ++q) {
            double thq = (M_PI / 4) * g32.x[q];
            double rho = (d.h / 2) / std::cos(thq);
            ang += (M_PI / 4) * g32.w[q] * std::pow(rho, 2 - 2 * s) / (2 - 2 * s);
        }
        m2_ = 0.5 * 8.0 * ang;
    }
    nbr_.assign(4 * d.size(), -1);
    for (std::size_t i = 0; i < d.size(); ++i) {
        int ni = d.node_of_cell[i];
        int ix = ni % d.nx, iy = ni / d.nx;
        const int off[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (int q = 0; q < 4; ++q) {
            int jx = ix + off[q][0], jy = iy + off[q][1];
            if (jx >= 0 && jx < d.nx && jy >= 0 && jy < d.ny)
                nbr_[4 * i + q] = d.cell_of_node[std::size_t(jy) * d.nx + jx];
        }
    }

    // row sums of K (constant-vector image is gamma * T)
    std::vector<double> ones(d.size(), 1.0);
    ksum_ = convolve(ones);
}

double Operator2D::diag(std::size_t i) const {
    int deg = 0;
    for (int q = 0; q < 4; ++q)
        if (nbr_[4 * i + q] >= 0) ++deg;
    const double h2 = dom_->h * dom_->h;
    return gamma_ns_ * (ksum_[i] + tails_[i] + deg * m2_ / (2 * h2));
}

Operator2D::~Operator2D() {
#ifdef FRACSYMM_HAVE_FFTW
    if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
#endif
}

double Operator2D::kernel_entry(std::size_t i, std::size_t j) const {
    const PlanarDomain& d = *dom_;
    int ni = d.node_of_cell[i], nj = d.node_of_cell[j];
    int di = ni % d.nx - nj % d.nx, dj = ni / d.nx - nj / d.nx;
    return ktab_[std::size_t(dj + d.ny - 1) * (2 * d.nx - 1) + (di + d.nx - 1)];
}

void Operator2D::build_fft() const {
#ifdef FRACSYMM_HAVE_FFTW
    const PlanarDomain& d = *dom_;
    px_ = 2 * d.nx;
    py_ = 2 * d.ny;
    rbuf_.assign(std::size_t(px_) * py_, 0.0);
    cbuf_.assign(std::size_t(py_) * (px_ / 2 + 1), {0, 0});
    plan_fwd_ = fftw_plan_dft_r2c_2d(py_, px_, rbuf_.data(),
                                     reinterpret_cast<fftw_complex*>(cbuf_.data()),
                                     FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_c2r_2d(py_, px_, reinterpret_cast<fftw_complex*>(cbuf_.data()),
                                     rbuf_.data(), FFTW_ESTIMATE);
    // kernel in circulant layout
    std::fill(rbuf_.begin(), rbuf_.end(), 0.0);
    for (int dj = -(d.ny - 1); dj <= d.ny - 1; ++dj)
        for (int di = -(d.nx - 1); di <= d.nx - 1; ++di) {
            double v = ktab_[std::size_t(dj + d.ny - 1) * (2 * d.nx - 1) + (di + d.nx - 1)];
            int ii = (di + px_) % px_, jj = (dj + py_) % py_;
            rbuf_[std::size_t(jj) * px_ + ii] = v;
        }
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    khat_ = cbuf_;
    fft_ready_ = true;
#endif
}

std::vector<double> Operator2D::convolve(const std::vector<double>& cell_vals) const {
    const PlanarDomain& d = *dom_;
    const std::size_t n = d.size();
    const double a = d.cell_area();
    std::vector<double> out(n, 0.0);
#ifdef FRACSYMM_HAVE_FFTW
    if (!fft_ready_) build_fft();
    std::fill(rbuf_.begin(), rbuf_.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        int nj = d.node_of_cell[j];
        rbuf_[std::size_t(nj / d.nx) * px_ + (nj % d.nx)] = cell_vals[j] * a;
    }
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    const double scale = 1.0 / (double(px_) * py_);
    for (std::size_t k = 0; k < cbuf_.size(); ++k) cbuf_[k] *= khat_[k] * scale;
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    for (std::size_t i = 0; i < n; ++i) {
        int ni = d.node_of_cell[i];
        out[i] = rbuf_[std::size_t(ni / d.nx) * px_ + (ni % d.nx)];
    }
#else
    const int tx = 2 * d.nx - 1;
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            int ni = d.node_of_cell[i];
            int ix = ni % d.nx, iy = ni / d.nx;
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                int nj = d.node_of_cell[j];
                acc += cell_vals[j] *
                       ktab_[std::size_t(iy - nj / d.nx + d.ny - 1) * tx + (ix - nj % d.nx + d.nx - 1)];
            }
            out[i] = acc * a;
        }
    });
#endif
    return out;
}

std::vector<double> Operator2D::apply(const std::vector<double>& u) const {
    const std::size_t n = dom_->size();
    std::vector<double> conv = convolve(u);
    std::vector<double> out(n);
    const double cw = m2_ / (2 * dom_->h * dom_->h);
    for (std::size_t i = 0; i < n; ++i) {
        double local = 0.0;
        for (int q = 0; q < 4; ++q) {
            int j = nbr_[4 * i + q];
            if (j >= 0) local += u[i] - u[j];
        }
        out[i] = gamma_ns_ * ((ksum_[i] + tails_[i]) * u[i] - conv[i] + cw * local);
    }
    return out;
}

double Operator2D::seminorm_squared(const std::vector<double>& u) const {
    // sum_{i!=j}(u_i-u_j)^2 K a a + 2 sum u_i^2 T a  ==  (2/gamma) u' A u a
    std::vector<double> au = apply(u);
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * au[i];
    return 2.0 / gamma_ns_ * acc * dom_->cell_area();
}

std::vector<double> Operator2D::solve_shifted(const std::vector<double>& rhs, double c,
                                              const std::vector<double>& diag_shift) const {
    const std::size_t n = dom_->size();
    const bool dense = n <= 5200;
    if (dense) {
        Eigen::MatrixXd A(n, n);
        const PlanarDomain& d = *dom_;
        const double a = d.cell_area();
        const double cw = gamma_ns_ * m2_ / (2 * d.h * d.h);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                A(i, j) = (i == j) ? 0.0 : -gamma_ns_ * kernel_entry(i, j) * a;
            for (int q = 0; q < 4; ++q)
                if (nbr_[4 * i + q] >= 0) A(i, nbr_[4 * i + q]) -= cw;
            A(i, i) = diag(i) + c + (diag_shift.empty() ? 0.0 : diag_shift[i]);
        }
        Eigen::Map<const Eigen::VectorXd> b(rhs.data(), n);
        Eigen::LLT<Eigen::MatrixXd> llt(A);
        if (llt.info() != Eigen::Success)
            throw numerical_error("solve_shifted: Cholesky factorization failed");
        Eigen::VectorXd x = llt.solve(b);
        return std::vector<double>(x.data(), x.data() + n);
    }
    // Jacobi-preconditioned CG on the shifted operator
    std::vector<double> x(n, 0.0), r = rhs, z(n), p(n), ap(n);
    auto applyS = [&](const std::vector<double>& v) {
        std::vector<double> av = apply(v);
        for (std::size_t i = 0; i < n; ++i)
            av[i] += (c + (diag_shift.empty() ? 0.0 : diag_shift[i])) * v[i];
        return av;
    };
    std::vector<double> dinv(n);
    for (std::size_t i = 0; i < n; ++i)
        dinv[i] = 1.0 / (diag(i) + c + (diag_shift.empty() ? 0.0 : diag_shift[i]));
    double bnorm = 0.0;
    for (double v : rhs) bnorm = std::max(bnorm, std::abs(v));
    if (bnorm == 0.0) return x;
    for (std::size_t i = 0; i < n; ++i) z[i] = dinv[i] * r[i];
    p = z;
    double rz = 0.0;
    for (std::size_t i = 0; i < n; ++i) rz += r[i] * z[i];
    for (int it = 0; it < 4000; ++it) {
        ap = applyS(p);
        double pap = 0.0;
        for (std::size_t i = 0; i < n; ++i) pap += p[i] * ap[i];
        double alpha = rz / pap;
        double rmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
            rmax = std::max(rmax, std::abs(r[i]));
        }
        if (rmax <= 1e-12 * bnorm) return x;
        double rz2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = dinv[i] * r[i];
            rz2 += r[i] * z[i];
        }
        double beta = rz2 / rz;
        rz = rz2;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
    throw numerical_error("solve_shifted: CG did not converge");
}

std::shared_ptr<Operator2D> assemble_operator_2d(std::shared_ptr<const PlanarDomain> dom,
                                                 double s) {
    return std::make_shared<Operator2D>(std::move(dom), s);
}

double seminorm_2d_squared(const GridFunction2D& u, double s) {
    Operator2D op(u.dom, s);
    return op.seminorm_squared(u.values);
}

GridFunction2D solve_linear_2d(const Operator2D& op, const GridFunction2D& f, double c) {
    GridFunction2D out(op.domain_ptr(), op.solve_shifted(f.values, c, {}));
    double mx = 0.0, mn = 0.0;
    for (double v : out.values) {
        mx = std::max(mx, v);
        mn = std::min(mn, v);
    }
    bool fpos = true;
    for (double v : f.values)
        if (v < 0) fpos = false;
    if (fpos && mn < -1e-10 * std::max(mx, 1e-300))
        throw numerical_error("solve_linear_2d: positivity violation");
    return out;
}

std::vector<double> default_k_schedule(double k_max) {
    std::vector<double> ks;
    for (double k = 1.0; k <= k_max * (1 + 1e-12); k *= 2.0) ks.push_back(k);
    return ks;
}

std::pair<GridFunction2D, SolveReport> solve_singular_2d(const Operator2D& op,
                                                         const GridFunction2D& f, double gamma,
                                                         double c,
                                                         const std::vector<double>& schedule) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = op.domain().size();
    for (double v : f.values)
        if (v < 0) throw std::domain_error("solve_singular_2d: f must be nonnegative");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (!(schedule[i] > schedule[i - 1]))
            throw std::domain_error("solve_singular_2d: schedule must increase");

    SolveReport rep;
    rep.monotonicity_margin = 1e300;
    double fnorm = 0.0;
    for (double v : f.values) fnorm = std::max(fnorm, std::abs(v));
    const double res_tol = 1e-12 * std::max(fnorm, 1e-300);

    // homogeneity-respecting initial guess
    std::vector<double> u = op.solve_shifted(f.values, c, {});
    for (double& v : u) v = std::pow(std::max(v, 1e-300), 1.0 / (1.0 + gamma));

    std::vector<double> u_prev;
    auto residual = [&](const std::vector<double>& w, double k) {
        std::vector<double> r = op.apply(w);
        for (std::size_t i = 0; i < n; ++i) {
            double fk = std::min(f.values[i], k);
            r[i] += c * w[i] - fk * std::pow(w[i] + 1.0 / k, -gamma);
        }
        return r;
    };
    auto norm2 = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };

    for (double k : schedule) {
        int iters = 0;
        for (; iters < 50; ++iters) {
            std::vector<double> r = residual(u, k);
            double rn = norm2(r);
            if (rn <= res_tol * std::sqrt(double(n))) break;
            std::vector<double> dshift(n);
            for (std::size_t i = 0; i < n; ++i) {
                double fk = std::min(f.values[i], k);
                dshift[i] = gamma * fk * std::pow(u[i] + 1.0 / k, -gamma - 1.0);
            }
            for (double& v : r) v = -v;
            std::vector<double> d = op.solve_shifted(r, c, dshift);
            double alpha = 1.0;
            for (int h = 0; h < 60; ++h) {
                bool pos = true;
                for (std::size_t i = 0; i < n; ++i)
                    if (u[i] + alpha * d[i] <= 0.0) {
                        pos = false;
                        break;
                    }
                if (pos) break;
                alpha *= 0.5;
            }
            std::vector<double> un(n);
            double rn_new = 0.0;
            for (int h = 0; h < 60; ++h) {
                for (std::size_t i = 0; i < n; ++i) un[i] = u[i] + alpha * d[i];
                rn_new = norm2(residual(un, k));
                if (rn_new <= (1.0 - 1e-4 * alpha) * rn || alpha < 1e-10) break;
                alpha *= 0.5;
            }
            u = un;
            if (alpha < 1e-10)
                throw numerical_error("solve_singular_2d: line search stalled");
        }
        if (iters == 50) throw numerical_error("solve_singular_2d: Newton did not converge");
        rep.k_used.push_back(k);
        rep.newton_iters.push_back(iters);
        double umax = 0.0;
        for (double v : u) umax = std::max(umax, v);
        if (!u_prev.empty()) {
            double worst = 1e300, diff = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                worst = std::min(worst, (u[i] - u_prev[i]) / umax);
                diff = std::max(diff, std::abs(u[i] - u_prev[i]) / umax);
            }
            rep.monotonicity_margin = std::min(rep.monotonicity_margin, worst);
            rep.last_sweep_diff = diff;
            if (worst < -1e-8)
                throw numerical_error("solve_singular_2d: k-monotonicity violated");
            if (diff <= 1e-6) {
                rep.converged = true;
                u_prev = u;
                break;
            }
        }
        u_prev = u;
    }
    if (schedule.size() <= 1) rep.converged = true;
    rep.final_residual = norm2(residual(u, rep.k_used.back()));

    // interior positivity: strictly positive away from the boundary
    const PlanarDomain& d = op.domain();
    double imin = 1e300;
    for (std::size_t i = 0; i < n; ++i)
        if (d.shape.boundary_distance(d.cx[i], d.cy[i]) >= 4 * d.h)
            imin = std::min(imin, u[i]);
    rep.interior_min = (imin == 1e300) ? 0.0 : imin;
    if (rep.interior_min <= 0.0)
        throw numerical_error("solve_singular_2d: interior positivity lost");

    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {GridFunction2D(op.domain_ptr(), std::move(u)), rep};
}

}  // namespace fracsymm
