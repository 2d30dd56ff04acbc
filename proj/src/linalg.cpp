#include "gsep/linalg.hpp"

#include "gsep/error.hpp"

#include <complex>

namespace gsep {

SymplecticForm::SymplecticForm(int modes) : modes_(modes), omega_(Matrix::Zero(2 * modes, 2 * modes)) {
    if (modes < 1) {
        throw Error(ErrorKind::dimension, "symplectic form needs at least one mode");
    }
    for (int k = 0; k < modes; ++k) {
        omega_(2 * k, 2 * k + 1) = 1.0;
        omega_(2 * k + 1, 2 * k) = -1.0;
    }
}

double min_eigenvalue_with_commutator(const Matrix &m, const Matrix &omega) {
    const ComplexMatrix k = m.cast<std::complex<double>>() + std::complex<double>(0.0, 0.5) * omega.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(k, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double min_eigenvalue_real_embedding(const Matrix &m, const Matrix &omega) {
    const Eigen::Index d = m.rows();
    Matrix big(2 * d, 2 * d);
    const Matrix w = 0.5 * omega;
    big.topLeftCorner(d, d) = m;
    big.topRightCorner(d, d) = -w;
    big.bottomLeftCorner(d, d) = w;
    big.bottomRightCorner(d, d) = m;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(big, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace gsep
