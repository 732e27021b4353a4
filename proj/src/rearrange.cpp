#include "fracsymm/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fracsymm/specfun.hpp"
#include "fracsymm/util.hpp"

namespace fracsymm {

WeightedSample::WeightedSample(std::vector<double> v, std::vector<double> w)
    : values(std::move(v)), weights(std::move(w)) {
    if (values.size() != weights.size())
        throw std::invalid_argument("WeightedSample: length mismatch");
    for (double wi : weights)
        if (!(wi > 0.0)) throw std::invalid_argument("WeightedSample: weights must be positive");
}

double WeightedSample::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double StepRearrangement::value(double sigma) const {
    if (sigma < 0.0) throw std::domain_error("StepRearrangement: sigma < 0");
    if (sigma >= breakpoints.back()) return 0.0;
    // right-continuous: plateau j on [b_j, b_{j+1})
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), sigma);
    std::size_t j = std::size_t(it - breakpoints.begin()) - 1;
    return plateau_values[std::min(j, plateau_values.size() - 1)];
}

double StepRearrangement::integral(double sigma) const {
    double s = 0.0;
    for (std::size_t j = 0; j < plateau_values.size(); ++j) {
        double lo = breakpoints[j], hi = breakpoints[j + 1];
        if (sigma <= lo) break;
        s += plateau_values[j] * (std::min(sigma, hi) - lo);
    }
    return s;
}

double ConcentrationCurve::value(double sigma) const {
    if (sigma <= volumes.front()) return cumulative.front();
    if (sigma >= volumes.back()) return cumulative.back();
    auto it = std::upper_bound(volumes.begin(), volumes.end(), sigma);
    std::size_t j = std::size_t(it - volumes.begin());
    double t = (sigma - volumes[j - 1]) / (volumes[j] - volumes[j - 1]);
    return cumulative[j - 1] + t * (cumulative[j] - cumulative[j - 1]);
}

double SchwarzProfile::value(double r) const {
    if (r < 0.0) throw std::domain_error("SchwarzProfile: r < 0");
    if (r >= radii.back()) return 0.0;
    auto it = std::upper_bound(radii.begin(), radii.end(), r);
    std::size_t j = std::size_t(it - radii.begin()) - 1;
    return values[std::min(j, values.size() - 1)];
}

double distribution_function(const WeightedSample& u, double t) {
    if (t < 0.0) throw std::domain_error("distribution_function: t must be >= 0");
    double s = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i)
        if (std::abs(u.values[i]) > t) s += u.weights[i];
    return s;
}

StepRearrangement decreasing_rearrangement(const WeightedSample& u) {
    std::vector<std::size_t> idx(u.values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(u.values[a]) > std::abs(u.values[b]);
    });
    StepRearrangement r;
    r.breakpoints.push_back(0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        double v = std::abs(u.values[idx[k]]);
        acc += u.weights[idx[k]];
        if (!r.plateau_values.empty() && v == r.plateau_values.back()) {
            r.breakpoints.back() = acc;  // merge tie into the open plateau
        } else {
            r.plateau_values.push_back(v);
            r.breakpoints.push_back(acc);
        }
    }
    return r;
}

SchwarzProfile schwarz_profile(const StepRearrangement& ustar, int N) {
    if (N < 1) throw std::domain_error("schwarz_profile: N must be >= 1");
    SchwarzProfile p;
    p.N = N;
    double omega = unit_ball_volume(N);
    p.radii.reserve(ustar.breakpoints.size());
    for (double b : ustar.breakpoints) p.radii.push_back(std::pow(b / omega, 1.0 / N));
    p.values = ustar.plateau_values;
    return p;
}

double maximal_function(const StepRearrangement& ustar, double sigma) {
    if (!(sigma > 0.0 && sigma <= ustar.total_volume() * (1 + 1e-12)))
        throw std::domain_error("maximal_function: sigma outside (0, |Omega|]");
    return ustar.integral(sigma) / sigma;
}

ConcentrationCurve concentration_curve(const StepRearrangement& ustar,
                                       const std::vector<double>& grid) {
    std::vector<double> vols = ustar.breakpoints;
    for (double g : grid)
        if (g >= 0.0 && g <= ustar.total_volume()) vols.push_back(g);
    std::sort(vols.begin(), vols.end());
    vols.erase(std::unique(vols.begin(), vols.end()), vols.end());
    ConcentrationCurve c;
    c.volumes = vols;
    c.cumulative.resize(vols.size());
    // single sweep; exact for the step function
    std::size_t j = 0;
    double acc = 0.0, prev = 0.0;
    for (std::size_t k = 0; k < vols.size(); ++k) {
        double v = vols[k];
        while (j < ustar.plateau_values.size() && ustar.breakpoints[j + 1] <= v) {
            acc += ustar.plateau_values[j] * (ustar.breakpoints[j + 1] - std::max(prev, ustar.breakpoints[j]));
            prev = ustar.breakpoints[j + 1];
            ++j;
        }
        if (j < ustar.plateau_values.size() && v > prev) {
            acc += ustar.plateau_values[j] * (v - prev);
            prev = v;
        }
        c.cumulative[k] = acc;
    }
    return c;
}

ConcentrationCompare is_less_concentrated(const WeightedSample& u, const WeightedSample& v,
                                          double tol) {
    double wu = u.total_weight(), wv = v.total_weight();
    if (std::abs(wu - wv) > 1e-9 * std::max(wu, wv))
        throw std::invalid_argument("is_less_concentrated: measures differ");
    StepRearrangement su = decreasing_rearrangement(u), sv = decreasing_rearrangement(v);
    std::vector<double> vols = su.breakpoints;
    vols.insert(vols.end(), sv.breakpoints.begin(), sv.breakpoints.end());
    std::sort(vols.begin(), vols.end());
    vols.erase(std::unique(vols.begin(), vols.end()), vols.end());
    ConcentrationCurve cu = concentration_curve(su, vols), cv = concentration_curve(sv, vols);
    ConcentrationCompare out{true, -1e300, 0.0};
    for (std::size_t k = 0; k < cu.volumes.size(); ++k) {
        double m = cu.value(vols[k]) - cv.value(vols[k]);
        if (m > out.worst_margin) {
            out.worst_margin = m;
            out.worst_volume = vols[k];
        }
    }
    out.holds = out.worst_margin <= tol * std::max(1.0, cv.total_mass());
    return out;
}

HardyLittlewoodResult hardy_littlewood_check(const WeightedSample& u, const WeightedSample& v) {
    if (u.weights.size() != v.weights.size())
        throw std::invalid_argument("hardy_littlewood_check: different decompositions");
    for (std::size_t i = 0; i < u.weights.size(); ++i)
        if (u.weights[i] != v.weights[i])
            throw std::invalid_argument("hardy_littlewood_check: different decompositions");
    double lhs = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i)
        lhs += std::abs(u.values[i] * v.values[i]) * u.weights[i];
    // exact integral of the product of two step functions
    StepRearrangement su = decreasing_rearrangement(u), sv = decreasing_rearrangement(v);
    std::vector<double> vols = su.breakpoints;
    vols.insert(vols.end(), sv.breakpoints.begin(), sv.breakpoints.end());
    std::sort(vols.begin(), vols.end());
    vols.erase(std::unique(vols.begin(), vols.end()), vols.end());
    double rhs = 0.0;
    for (std::size_t k = 0; k + 1 < vols.size(); ++k) {
        double mid = 0.5 * (vols[k] + vols[k + 1]);
        rhs += su.value(mid) * sv.value(mid) * (vols[k + 1] - vols[k]);
    }
    return {lhs, rhs, lhs <= rhs + 1e-12 * rhs};
}

GridFunction2D::GridFunction2D(std::shared_ptr<const PlanarDomain> d, std::vector<double> v)
    : dom(std::move(d)), values(std::move(v)) {
    if (!dom || values.size() != dom->size())
        throw std::invalid_argument("GridFunction2D: size mismatch");
}

GridFunction2D schwarz_rearrange_grid(const GridFunction2D& u) {
    // rank cells by distance from the center and permute the sorted values
    // onto them; exactly equimeasurable with the input
    const PlanarDomain& d = *u.dom;
    const std::size_t n = d.size();
    std::vector<std::size_t> by_radius(n), by_value(n);
    std::iota(by_radius.begin(), by_radius.end(), 0);
    std::iota(by_value.begin(), by_value.end(), 0);
    std::sort(by_radius.begin(), by_radius.end(), [&](std::size_t a, std::size_t b) {
        double ra = d.cx[a] * d.cx[a] + d.cy[a] * d.cy[a];
        double rb = d.cx[b] * d.cx[b] + d.cy[b] * d.cy[b];
        return ra != rb ? ra < rb : a < b;
    });
    std::sort(by_value.begin(), by_value.end(), [&](std::size_t a, std::size_t b) {
        double va = std::abs(u.values[a]), vb = std::abs(u.values[b]);
        return va != vb ? va > vb : a < b;
    });
    GridFunction2D out(u.dom);
    for (std::size_t k = 0; k < n; ++k)
        out.values[by_radius[k]] = std::abs(u.values[by_value[k]]);
    return out;
}

RieszResult riesz_check(const GridFunction2D& u, const GridFunction2D& v, double alpha,
                        const std::function<double(double)>& G) {
    if (u.dom != v.dom) throw std::invalid_argument("riesz_check: functions on different grids");
    const PlanarDomain& d = *u.dom;
    const std::size_t n = d.size();
    const double a2 = d.cell_area() * d.cell_area();

    // W depends only on the lattice offset; tabulate once.
    std::vector<double> wtab((2 * d.nx - 1) * (2 * d.ny - 1));
    for (int dj = -(d.ny - 1); dj <= d.ny - 1; ++dj)
        for (int di = -(d.nx - 1); di <= d.nx - 1; ++di) {
            double dx = di * d.h, dy = dj * d.h;
            wtab[(dj + d.ny - 1) * (2 * d.nx - 1) + (di + d.nx - 1)] =
                std::exp(-alpha * (dx * dx + dy * dy));
        }

    GridFunction2D us = schwarz_rearrange_grid(u), vs = schwarz_rearrange_grid(v);
    auto pair_sum = [&](const std::vector<double>& fu, const std::vector<double>& fv) {
        std::vector<double> gu(n), gv(n);
        for (std::size_t i = 0; i < n; ++i) gu[i] = G(fu[i]);
        for (std::size_t i = 0; i < n; ++i) gv[i] = G(fv[i]);
        std::vector<double> row(n, 0.0);
        parallel_for(n, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                int ni = d.node_of_cell[i];
                int ix = ni % d.nx, iy = ni / d.nx;
                double ui = fu[i], gui = gu[i];
                double acc = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    int nj = d.node_of_cell[j];
                    int jx = nj % d.nx, jy = nj / d.nx;
                    double w = wtab[(iy - jy + d.ny - 1) * (2 * d.nx - 1) + (ix - jx + d.nx - 1)];
                    double vj = fv[j];
                    double f = ui * ui + vj * vj - (ui - vj) * (gui - gv[j]);
                    acc += f * w;
                }
                row[i] = acc;
            }
        });
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) total += row[i];
        return total * a2;
    };

    RieszResult r{};
    r.lhs = pair_sum(u.values, v.values);
    r.rhs = pair_sum(us.values, vs.values);
    r.violation_rel = std::max(0.0, r.lhs - r.rhs) / std::abs(r.rhs);
    return r;
}

}  // namespace fracsymm
