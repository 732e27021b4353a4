#pragma once

#include <functional>
#include <vector>

#include "fracsymm/grid2d.hpp"

namespace fracsymm {

// |u| sampled on cells with positive measures; the discrete substrate of
// every rearrangement operation.
struct WeightedSample {
    std::vector<double> values;
    std::vector<double> weights;

    WeightedSample() = default;
    WeightedSample(std::vector<double> v, std::vector<double> w);
    double total_weight() const;
};

// Decreasing rearrangement u*(sigma) as a right-continuous step function of
// volume. breakpoints[0] = 0, breakpoints[m] = |Omega|; plateau_values
// strictly decreasing (equal values merged).
struct StepRearrangement {
    std::vector<double> breakpoints;
    std::vector<double> plateau_values;

    double total_volume() const { return breakpoints.back(); }
    double value(double sigma) const;
    // int_0^sigma u*(t) dt, exact
    double integral(double sigma) const;
    double max_value() const { return plateau_values.empty() ? 0.0 : plateau_values.front(); }
};

// sigma -> int_0^sigma u*(t) dt sampled on a volume grid; piecewise linear
// and concave by construction.
struct ConcentrationCurve {
    std::vector<double> volumes;
    std::vector<double> cumulative;

    double value(double sigma) const;
    double total_mass() const { return cumulative.back(); }
};

// Schwarz rearrangement as a radial step profile r -> u*(omega_N r^N).
struct SchwarzProfile {
    int N = 2;
    std::vector<double> radii;  // plateau boundaries, radii[0] = 0
    std::vector<double> values;
    double outer_radius() const { return radii.back(); }
    double value(double r) const;
};

// |{ |u| > t }| as a weighted count; right-continuous, nonincreasing in t.
double distribution_function(const WeightedSample& u, double t);

StepRearrangement decreasing_rearrangement(const WeightedSample& u);

SchwarzProfile schwarz_profile(const StepRearrangement& ustar, int N);

// u**(sigma) = (1/sigma) int_0^sigma u*
double maximal_function(const StepRearrangement& ustar, double sigma);

// Exact cumulative integral on the union of the grid and the breakpoints.
ConcentrationCurve concentration_curve(const StepRearrangement& ustar,
                                       const std::vector<double>& grid = {});

struct ConcentrationCompare {
    bool holds;
    double worst_margin;  // max over breakpoints of C_u - C_v
    double worst_volume;
};

// u "less concentrated than" v up to tol * max(1, C_v(|Omega|)).
ConcentrationCompare is_less_concentrated(const WeightedSample& u, const WeightedSample& v,
                                          double tol);

struct HardyLittlewoodResult {
    double lhs, rhs;
    bool holds;
};

// int |u v| <= int_0^{|Omega|} u* v*  (same cell decomposition).
HardyLittlewoodResult hardy_littlewood_check(const WeightedSample& u, const WeightedSample& v);

struct RieszResult {
    double lhs, rhs;
    double violation_rel;  // max(0, lhs - rhs) / |rhs|
};

// Riesz rearrangement checker with W_alpha(x) = exp(-alpha |x|^2) and
// F(a,b) = a^2 + b^2 - (a-b)(G(a)-G(b)), G Lipschitz nondecreasing, G(0)=0.
// Compares the double sum for (u,v) against their discrete Schwarz
// rearrangements resampled onto the same grid.
RieszResult riesz_check(const GridFunction2D& u, const GridFunction2D& v, double alpha,
                        const std::function<double(double)>& G);

// Schwarz rearrangement of a grid function, resampled onto its own grid
// (cells ranked by distance from the domain center).
GridFunction2D schwarz_rearrange_grid(const GridFunction2D& u);

}  // namespace fracsymm
