#pragma once

#include "gsep/covariance.hpp"
#include "gsep/standard_form.hpp"

#include <cstdint>
#include <string>

namespace gsep {

/// Integral of W1 W2 over phase space: (2 pi)^-N det(V1 + V2)^-1/2.
double wigner_overlap(const CovarianceMatrix &v1, const CovarianceMatrix &v2);

struct DistanceReport {
    /// Integral of (W1 - W2)^2 over phase space.
    double wigner_l2_squared = 0.0;
    /// Tr[(rho1 - rho2)^2] = (2 pi)^N times the Wigner value.
    double hilbert_schmidt_squared = 0.0;
};

DistanceReport l2_distance_squared(const CovarianceMatrix &v1, const CovarianceMatrix &v2);

enum class QspClassification { strictly_separable, strictly_entangled, almost_separable, almost_entangled };

std::string to_string(QspClassification c);

/**
 * @brief Verdict at finite precision delta.
 *
 * A verdict is strict only when the Wigner-L2 distance to the boundary
 * surface exceeds the threshold 1/delta.
 */
struct QspVerdict {
    QspClassification classification = QspClassification::almost_separable;
    double boundary_distance = 0.0;          // sqrt of the minimal Wigner-L2 squared distance
    double hilbert_schmidt_distance = 0.0;   // same point, trace normalization
    double threshold = 0.0;                  // 1 / delta
    StandardForm boundary_point;             // argmin; transform maps it to standard form
    Matrix4 boundary_covariance = Matrix4::Zero();
    int starts_in_agreement = 0;             // feasible starts within 1e-6 of the best distance
};

struct BoundarySearchOptions {
    int starts = 32;
    int max_iterations_per_stage = 4000;
    std::uint64_t seed = 0;
};

QspVerdict distance_to_boundary(const CovarianceMatrix &v, double delta, const BoundarySearchOptions &options = {});

}  // namespace gsep
