#pragma once

#include <Eigen/Dense>

namespace gsep {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Matrix2 = Eigen::Matrix2d;
using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;
using ComplexMatrix = Eigen::MatrixXcd;

/// J = [[0, 1], [-1, 0]].
inline Matrix2 symplectic_unit() {
    Matrix2 j;
    j << 0.0, 1.0, -1.0, 0.0;
    return j;
}

/**
 * @brief The symplectic form for n modes in (q1, p1, q2, p2, ...) ordering.
 *
 * Block diagonal with one copy of J per mode; antisymmetric by construction.
 */
class SymplecticForm {
public:
    explicit SymplecticForm(int modes);

    int mode_count() const noexcept { return modes_; }
    int dimension() const noexcept { return 2 * modes_; }
    const Matrix &matrix() const noexcept { return omega_; }

private:
    int modes_;
    Matrix omega_;
};

/// Rotation by angle theta in one mode's (q, p) plane.
inline Matrix2 rotation(double theta) {
    Matrix2 r;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    r << c, -s, s, c;
    return r;
}

/// diag(e^r, e^-r).
inline Matrix2 squeeze(double r) {
    return Eigen::Vector2d(std::exp(r), std::exp(-r)).asDiagonal();
}

/// Smallest eigenvalue of the Hermitian matrix m + (i/2) * omega.
double min_eigenvalue_with_commutator(const Matrix &m, const Matrix &omega);

/// Same quantity via the real 2d x 2d embedding [[M, -W], [W, M]] with W = omega / 2.
double min_eigenvalue_real_embedding(const Matrix &m, const Matrix &omega);

/// Symmetric part (M + M^T) / 2.
inline Matrix symmetrize(const Matrix &m) { return 0.5 * (m + m.transpose()); }

}  // namespace gsep
