#pragma once

#include <vector>

namespace fracsymm {

// Progress record of a k-regularized singular solve.
struct SolveReport {
    std::vector<double> k_used;
    std::vector<int> newton_iters;
    double final_residual = 0.0;
    // min over sweeps and nodes of (w_k - w_{k/2}) / ||w_k||_inf
    double monotonicity_margin = 0.0;
    // ||w_K - w_{K/2}||_inf / ||w_K||_inf at the last sweep
    double last_sweep_diff = 0.0;
    double wall_time_s = 0.0;
    double interior_min = 0.0;
    bool converged = false;
};

std::vector<double> default_k_schedule(double k_max = 1024.0);

}  // namespace fracsymm
