#pragma once

#include "gsep/covariance.hpp"

#include <cstdint>
#include <optional>

namespace gsep {

inline constexpr double kSemigroupTolerance = 1e-12;

/// Diagonal scaling (x1, ..., x2N) with |x_{2k-1} x_{2k}| >= 1 in every mode.
class ScalingVector {
public:
    /// Throws Error(constraint) when some mode violates the semigroup bound.
    explicit ScalingVector(Vector x);

    static ScalingVector identity(int n_modes);
    /// (1, 1, 1, -1): the partial transpose of the second mode.
    static ScalingVector partial_transpose();

    const Vector &values() const noexcept { return x_; }
    int mode_count() const noexcept { return static_cast<int>(x_.size() / 2); }

private:
    Vector x_;
};

/// Lambda_x V Lambda_x.
CovarianceMatrix apply_scaling(const CovarianceMatrix &v, const ScalingVector &x);

struct ScalingTestResult {
    double min_eigenvalue = 0.0;  // of V^x + (i/2) Omega
    bool passes = true;
};

ScalingTestResult scaling_test(const CovarianceMatrix &v, const ScalingVector &x);

struct ScalingScanResult {
    std::optional<ScalingVector> violation;
    double min_eigenvalue = 0.0;  // lowest value seen over the scan
    int evaluations = 0;
    int patterns = 0;
};

/**
 * @brief Searches the scaling semigroup for an x with K^x not positive semidefinite.
 *
 * x_{2k-1} = s_k e^{t_k}, x_{2k} = sigma_k m_k e^{-t_k} with t_k in [-5, 5] and
 * m_k in [1, e^5]. All 4^N sign patterns are scanned for N <= 4, random
 * patterns beyond. An empty result does not certify separability.
 */
ScalingScanResult scaling_scan(const CovarianceMatrix &v, std::uint64_t seed, int budget);

}  // namespace gsep
