#pragma once

#include "gsep/covariance.hpp"

#include <cstdint>

namespace gsep {

/// Element of Sp(2,R) x Sp(2,R): one 2x2 symplectic per mode.
struct LocalSymplectic {
    Matrix2 s1 = Matrix2::Identity();
    Matrix2 s2 = Matrix2::Identity();

    Matrix4 assembled() const;
    LocalSymplectic inverse() const;
};

/// Parameters of a single-mode symplectic written as rotation(theta) * squeeze(r) * rotation(phi).
struct SingleModeParameters {
    double theta = 0.0;
    double r = 0.0;
    double phi = 0.0;
};

Matrix2 single_mode_symplectic(const SingleModeParameters &p);

/// Inverse of single_mode_symplectic for any 2x2 matrix with unit determinant.
SingleModeParameters decompose_single_mode(const Matrix2 &s);

/**
 * @brief Canonical two-mode covariance reachable by local symplectics.
 *
 * Diagonal (a, a, b, b), cross entries V13 = c and V24 = d, with c >= |d|.
 * `transform` maps the reduced input onto this form: S V S^T.
 */
struct StandardForm {
    double a = 0.5;
    double b = 0.5;
    double c = 0.0;
    double d = 0.0;
    LocalSymplectic transform;
};

Matrix4 standard_form_matrix(double a, double b, double c, double d);

/// Reduces a physical two-mode covariance to standard form.
StandardForm reduce(const CovarianceMatrix &v);

/// The matrix of the standard form, as a covariance.
CovarianceMatrix assemble(const StandardForm &sf);

/// S V S^T.
CovarianceMatrix conjugate(const CovarianceMatrix &v, const Matrix &s);
CovarianceMatrix conjugate(const CovarianceMatrix &v, const LocalSymplectic &s);

/// Seed-deterministic random local symplectic: angles uniform on [0, 2 pi), squeeze uniform on [-1, 1].
LocalSymplectic random_local_symplectic(std::uint64_t seed);

}  // namespace gsep
