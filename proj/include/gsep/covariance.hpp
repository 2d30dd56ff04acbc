#pragma once

#include "gsep/linalg.hpp"

namespace gsep {

inline constexpr double kSymmetryTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kSingularDeterminant = 1e-300;

/**
 * @brief Real symmetric 2N x 2N second-moment matrix of an N-mode state.
 *
 * Quadrature ordering is (q1, p1, q2, p2, ...) with [q, p] = i, so the
 * vacuum is Identity / 2. Instances are immutable once built.
 */
class CovarianceMatrix {
public:
    /// Accepts square matrices of even dimension whose asymmetry is at most
    /// kSymmetryTolerance; the stored matrix is (M + M^T) / 2.
    static CovarianceMatrix validate(const Matrix &raw);

    /// For results of congruences of an already valid matrix: symmetrizes
    /// round-off without re-checking the tolerance.
    static CovarianceMatrix from_congruence(const Matrix &m);

    int mode_count() const noexcept { return static_cast<int>(entries_.rows() / 2); }
    int dimension() const noexcept { return static_cast<int>(entries_.rows()); }
    const Matrix &matrix() const noexcept { return entries_; }
    double operator()(int i, int j) const { return entries_(i, j); }

    /// The 4x4 matrix of a two-mode covariance.
    Matrix4 two_mode() const;

private:
    explicit CovarianceMatrix(Matrix m) : entries_(std::move(m)) {}

    Matrix entries_;
};

struct GaussianState {
    Vector mean;
    CovarianceMatrix covariance;
};

/// V = [[A, C], [C^T, B]] for two modes.
struct BlockDecomposition {
    Matrix2 a;
    Matrix2 b;
    Matrix2 c;

    Matrix4 reassemble() const;
};

/// Local-symplectic invariants of a two-mode covariance.
struct SymplecticInvariants {
    double det_a = 0.0;
    double det_b = 0.0;
    double det_c = 0.0;
    double cross_trace = 0.0;  // Tr(A J C J B J C^T J)
};

struct PhysicalityReport {
    bool is_physical = false;
    double min_eigenvalue = 0.0;  // of K = V + (i/2) Omega
};

BlockDecomposition blocks(const CovarianceMatrix &v);
SymplecticInvariants invariants(const CovarianceMatrix &v);

/// K = V + (i/2) Omega.
ComplexMatrix uncertainty_matrix(const CovarianceMatrix &v);

PhysicalityReport is_physical(const CovarianceMatrix &v);

/// det A det B - Tr(AJCJBJC^TJ) - (det A + det B)/4 + (1/4 - det C)^2.
/// Necessary for physicality; is_physical is the authoritative test.
double physicality_scalar(const CovarianceMatrix &v);
double physicality_scalar(const SymplecticInvariants &inv);

/// Gaussian Wigner function (2 pi)^-N (det V)^-1/2 exp(-(z-m)^T V^-1 (z-m) / 2).
double wigner_eval(const GaussianState &state, const Vector &z);

/// Throws Error(mode_count) unless v describes exactly `modes` modes.
void require_modes(const CovarianceMatrix &v, int modes, const char *operation);

/// Throws Error(unphysical) when v fails is_physical.
void require_physical(const CovarianceMatrix &v, const char *operation);

}  // namespace gsep
