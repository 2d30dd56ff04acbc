#pragma once

#include "gsep/linalg.hpp"

#include <functional>

namespace gsep {

struct SimplexOptions {
    int max_iterations = 200;
    /// Hard cap on objective evaluations; 0 means no cap.
    int max_evaluations = 0;
    double initial_step = 0.1;
    /// Stop when the simplex characteristic size falls below this.
    double size_tolerance = 1e-12;
    /// Stop when the best value moved less than stall_tolerance over the
    /// last stall_window iterations; 0 disables the check.
    int stall_window = 0;
    double stall_tolerance = 0.0;
};

struct SimplexResult {
    Vector x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Derivative-free Nelder-Mead minimization (GSL nmsimplex2). The objective
/// must return finite values; non-finite returns are replaced by a large
/// constant so the simplex retreats from them.
SimplexResult minimize_simplex(const std::function<double(const Vector &)> &objective, const Vector &start,
                               const SimplexOptions &options);

}  // namespace gsep
