#include "gsep/covariance.hpp"

#include "gsep/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gsep {

CovarianceMatrix CovarianceMatrix::validate(const Matrix &raw) {
    if (raw.rows() != raw.cols()) {
        throw Error(ErrorKind::dimension, "covariance matrix must be square");
    }
    if (raw.rows() < 2 || raw.rows() % 2 != 0) {
        std::ostringstream msg;
        msg << "covariance dimension must be even and at least 2, got " << raw.rows();
        throw Error(ErrorKind::dimension, msg.str());
    }
    if (!raw.allFinite()) {
        throw Error(ErrorKind::parameter, "covariance matrix has non-finite entries");
    }
    const double asymmetry = (raw - raw.transpose()).cwiseAbs().maxCoeff();
    if (asymmetry > kSymmetryTolerance) {
        std::ostringstream msg;
        msg << "covariance matrix is not symmetric: max |M_ij - M_ji| = " << asymmetry;
        throw Error(ErrorKind::asymmetry, msg.str());
    }
    return CovarianceMatrix(symmetrize(raw));
}

CovarianceMatrix CovarianceMatrix::from_congruence(const Matrix &m) {
    return CovarianceMatrix(symmetrize(m));
}

Matrix4 CovarianceMatrix::two_mode() const {
    require_modes(*this, 2, "two_mode");
    return entries_;
}

void require_modes(const CovarianceMatrix &v, int modes, const char *operation) {
    if (v.mode_count() != modes) {
        std::ostringstream msg;
        msg << operation << " requires " << modes << " modes, got " << v.mode_count();
        throw Error(ErrorKind::mode_count, msg.str());
    }
}

void require_physical(const CovarianceMatrix &v, const char *operation) {
    const PhysicalityReport report = is_physical(v);
    if (!report.is_physical) {
        std::ostringstream msg;
        msg << operation << ": covariance is unphysical (min eigenvalue of V + i/2 Omega = "
            << report.min_eigenvalue << ")";
        throw Error(ErrorKind::unphysical, msg.str());
    }
}

Matrix4 BlockDecomposition::reassemble() const {
    Matrix4 v;
    v << a, c, c.transpose(), b;
    return v;
}

BlockDecomposition blocks(const CovarianceMatrix &v) {
    require_modes(v, 2, "blocks");
    const Matrix &m = v.matrix();
    return {m.block<2, 2>(0, 0), m.block<2, 2>(2, 2), m.block<2, 2>(0, 2)};
}

SymplecticInvariants invariants(const CovarianceMatrix &v) {
    const BlockDecomposition bd = blocks(v);
    const Matrix2 j = symplectic_unit();
    const Matrix2 product = bd.a * j * bd.c * j * bd.b * j * bd.c.transpose() * j;
    return {bd.a.determinant(), bd.b.determinant(), bd.c.determinant(), product.trace()};
}

ComplexMatrix uncertainty_matrix(const CovarianceMatrix &v) {
    const SymplecticForm omega(v.mode_count());
    return v.matrix().cast<std::complex<double>>() +
           std::complex<double>(0.0, 0.5) * omega.matrix().cast<std::complex<double>>();
}

PhysicalityReport is_physical(const CovarianceMatrix &v) {
    const SymplecticForm omega(v.mode_count());
    const double lambda = min_eigenvalue_with_commutator(v.matrix(), omega.matrix());
    return {lambda >= -kPsdTolerance, lambda};
}

double physicality_scalar(const SymplecticInvariants &inv) {
    const double t = 0.25 - inv.det_c;
    return inv.det_a * inv.det_b - inv.cross_trace - 0.25 * (inv.det_a + inv.det_b) + t * t;
}

double physicality_scalar(const CovarianceMatrix &v) { return physicality_scalar(invariants(v)); }

double wigner_eval(const GaussianState &state, const Vector &z) {
    const Matrix &v = state.covariance.matrix();
    if (z.size() != v.rows() || state.mean.size() != v.rows()) {
        throw Error(ErrorKind::dimension, "wigner_eval: phase-space point and mean must have dimension 2N");
    }
    const Eigen::PartialPivLU<Matrix> lu(v);
    const double det = lu.determinant();
    if (!(det > kSingularDeterminant)) {
        throw Error(ErrorKind::singular, "wigner_eval: covariance is singular");
    }
    const Vector delta = z - state.mean;
    const double quad = delta.dot(lu.solve(delta));
    const double norm = std::pow(2.0 * std::numbers::pi, -0.5 * static_cast<double>(v.rows()));
    return norm / std::sqrt(det) * std::exp(-0.5 * quad);
}

}  // namespace gsep
