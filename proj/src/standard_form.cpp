#include "gsep/standard_form.hpp"

#include "gsep/error.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace gsep {

namespace {

// Rotation followed by a squeeze that maps a positive definite 2x2 block
// onto sqrt(det) * Identity. Squeeze is computed from the eigenvalue ratio
// in log space.
Matrix2 normalize_block(const Matrix2 &block) {
    Eigen::SelfAdjointEigenSolver<Matrix2> solver(block);
    const Eigen::Vector2d lambda = solver.eigenvalues();
    if (!(lambda(0) > 0.0)) {
        throw Error(ErrorKind::singular, "reduce: diagonal block is not positive definite");
    }
    Matrix2 axes = solver.eigenvectors();
    if (axes.determinant() < 0.0) {
        axes.col(1) *= -1.0;
    }
    const double r = 0.25 * (std::log(lambda(1)) - std::log(lambda(0)));
    return squeeze(r) * axes.transpose();
}

}  // namespace

Matrix4 LocalSymplectic::assembled() const {
    Matrix4 s = Matrix4::Zero();
    s.block<2, 2>(0, 0) = s1;
    s.block<2, 2>(2, 2) = s2;
    return s;
}

LocalSymplectic LocalSymplectic::inverse() const {
    // For det = 1, inv(S) = -J S^T J.
    const Matrix2 j = symplectic_unit();
    return {-j * s1.transpose() * j, -j * s2.transpose() * j};
}

Matrix2 single_mode_symplectic(const SingleModeParameters &p) {
    return rotation(p.theta) * squeeze(p.r) * rotation(p.phi);
}

SingleModeParameters decompose_single_mode(const Matrix2 &s) {
    Eigen::JacobiSVD<Matrix2> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix2 u = svd.matrixU();
    Matrix2 w = svd.matrixV();
    if (u.determinant() < 0.0) {
        // det S = 1 forces det U = det W; flipping the same column of each keeps U Sigma W^T.
        u.col(1) *= -1.0;
        w.col(1) *= -1.0;
    }
    const Eigen::Vector2d sigma = svd.singularValues();
    SingleModeParameters p;
    p.theta = std::atan2(u(1, 0), u(0, 0));
    p.r = 0.5 * (std::log(sigma(0)) - std::log(sigma(1)));
    // W^T = rotation(phi) means W = rotation(-phi).
    p.phi = -std::atan2(w(1, 0), w(0, 0));
    return p;
}

Matrix4 standard_form_matrix(double a, double b, double c, double d) {
    Matrix4 v;
    v << a, 0, c, 0,
         0, a, 0, d,
         c, 0, b, 0,
         0, d, 0, b;
    return v;
}

StandardForm reduce(const CovarianceMatrix &v) {
    require_modes(v, 2, "reduce");
    require_physical(v, "reduce");

    const BlockDecomposition bd = blocks(v);
    const Matrix2 n1 = normalize_block(bd.a);
    const Matrix2 n2 = normalize_block(bd.b);
    const Matrix2 cross = n1 * bd.c * n2.transpose();

    // Rotations leave a * I invariant; a signed SVD with proper rotations
    // diagonalizes the cross block with c = sigma_max >= 0 and
    // d = sign(det C) * sigma_min, hence c >= |d|.
    Matrix2 r1 = Matrix2::Identity();
    Matrix2 r2 = Matrix2::Identity();
    Eigen::Vector2d sigma = Eigen::Vector2d::Zero();
    if (cross.cwiseAbs().maxCoeff() > 0.0) {
        Eigen::JacobiSVD<Matrix2> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
        Matrix2 u = svd.matrixU();
        Matrix2 w = svd.matrixV();
        sigma = svd.singularValues();
        if (u.determinant() < 0.0) {
            u.col(1) *= -1.0;
            sigma(1) = -sigma(1);
        }
        if (w.determinant() < 0.0) {
            w.col(1) *= -1.0;
            sigma(1) = -sigma(1);
        }
        r1 = u.transpose();
        r2 = w.transpose();
    }

    StandardForm sf;
    sf.transform = {r1 * n1, r2 * n2};
    sf.a = std::sqrt(bd.a.determinant());
    sf.b = std::sqrt(bd.b.determinant());
    sf.c = sigma(0);
    sf.d = sigma(1);
    // Exact zero cross block: keep d = 0 rather than -0.
    if (sf.d == 0.0) {
        sf.d = 0.0;
    }
    return sf;
}

CovarianceMatrix assemble(const StandardForm &sf) {
    return CovarianceMatrix::from_congruence(standard_form_matrix(sf.a, sf.b, sf.c, sf.d));
}

CovarianceMatrix conjugate(const CovarianceMatrix &v, const Matrix &s) {
    if (s.rows() != v.dimension() || s.cols() != v.dimension()) {
        throw Error(ErrorKind::dimension, "conjugate: transform dimension mismatch");
    }
    return CovarianceMatrix::from_congruence(s * v.matrix() * s.transpose());
}

CovarianceMatrix conjugate(const CovarianceMatrix &v, const LocalSymplectic &s) {
    return conjugate(v, Matrix(s.assembled()));
}

LocalSymplectic random_local_symplectic(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> sq(-1.0, 1.0);
    auto draw = [&] {
        SingleModeParameters p;
        p.theta = angle(rng);
        p.r = sq(rng);
        p.phi = angle(rng);
        return single_mode_symplectic(p);
    };
    LocalSymplectic s;
    s.s1 = draw();
    s.s2 = draw();
    return s;
}

}  // namespace gsep
