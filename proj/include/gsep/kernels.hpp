#pragma once

#include "gsep/covariance.hpp"

#include <span>
#include <vector>

// Data-parallel sweeps. Each OpenMP kernel has a plain serial reference
// next to it; tests check the two agree and bench/ compares their speed.
namespace gsep::kernels {

struct CriterionSample {
    double f_value = 0.0;
    double pt_min_eigenvalue = 0.0;
};

/// f(V) and the partial-transpose eigenvalue for every two-mode state.
std::vector<CriterionSample> evaluate_criteria(std::span<const CovarianceMatrix> states);
std::vector<CriterionSample> evaluate_criteria_reference(std::span<const CovarianceMatrix> states);

/// Uniform grid on [-half_width, half_width]^4 including both ends.
struct QuadratureGrid {
    double half_width = 10.0;
    double spacing = 0.1;

    int points_per_axis() const;
};

/// Riemann sum of W1(z) W2(z) over the grid (two-mode, zero means). The
/// OpenMP version skips grid lines where the integrand is below e^-60 of its peak.
double overlap_quadrature(const CovarianceMatrix &v1, const CovarianceMatrix &v2, const QuadratureGrid &grid);
double overlap_quadrature_reference(const CovarianceMatrix &v1, const CovarianceMatrix &v2, const QuadratureGrid &grid);

/// Riemann sum of wigner_eval for a two-mode state over the same pruned support.
double wigner_quadrature(const GaussianState &state, const QuadratureGrid &grid);

}  // namespace gsep::kernels
