#include "gsep/kernels.hpp"

#include "gsep/error.hpp"
#include "gsep/separability.hpp"

#include <cmath>
#include <numbers>

namespace gsep::kernels {

namespace {

constexpr double kPruneExponent = 60.0;

CriterionSample sample(const CovarianceMatrix &v) {
    return {f_functional(v), pt_min_eigenvalue(v)};
}

struct GaussianProduct {
    Matrix4 precision;   // V1^-1 + V2^-1
    double prefactor;    // (2 pi)^-4 (det V1 det V2)^-1/2
};

GaussianProduct product_of(const CovarianceMatrix &v1, const CovarianceMatrix &v2) {
    require_modes(v1, 2, "overlap_quadrature");
    require_modes(v2, 2, "overlap_quadrature");
    const Matrix4 m1 = v1.two_mode();
    const Matrix4 m2 = v2.two_mode();
    const double det1 = m1.determinant();
    const double det2 = m2.determinant();
    if (!(det1 > kSingularDeterminant) || !(det2 > kSingularDeterminant)) {
        throw Error(ErrorKind::singular, "overlap_quadrature: singular covariance");
    }
    const double norm = 1.0 / std::pow(2.0 * std::numbers::pi, 4);
    return {m1.inverse() + m2.inverse(), norm / std::sqrt(det1 * det2)};
}

}  // namespace

int QuadratureGrid::points_per_axis() const {
    return static_cast<int>(std::floor(2.0 * half_width / spacing + 0.5)) + 1;
}

std::vector<CriterionSample> evaluate_criteria(std::span<const CovarianceMatrix> states) {
    std::vector<CriterionSample> out(states.size());
    const auto count = static_cast<long long>(states.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = sample(states[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<CriterionSample> evaluate_criteria_reference(std::span<const CovarianceMatrix> states) {
    std::vector<CriterionSample> out;
    out.reserve(states.size());
    for (const auto &v : states) {
        out.push_back(sample(v));
    }
    return out;
}

double overlap_quadrature_reference(const CovarianceMatrix &v1, const CovarianceMatrix &v2, const QuadratureGrid &grid) {
    const GaussianState s1{Vector::Zero(4), v1};
    const GaussianState s2{Vector::Zero(4), v2};
    const int n = grid.points_per_axis();
    double sum = 0.0;
    Vector z(4);
    for (int i0 = 0; i0 < n; ++i0) {
        z(0) = -grid.half_width + i0 * grid.spacing;
        for (int i1 = 0; i1 < n; ++i1) {
            z(1) = -grid.half_width + i1 * grid.spacing;
            for (int i2 = 0; i2 < n; ++i2) {
                z(2) = -grid.half_width + i2 * grid.spacing;
                for (int i3 = 0; i3 < n; ++i3) {
                    z(3) = -grid.half_width + i3 * grid.spacing;
                    sum += wigner_eval(s1, z) * wigner_eval(s2, z);
                }
            }
        }
    }
    return sum * std::pow(grid.spacing, 4);
}

double overlap_quadrature(const CovarianceMatrix &v1, const CovarianceMatrix &v2, const QuadratureGrid &grid) {
    const GaussianProduct g = product_of(v1, v2);
    const Matrix4 &m = g.precision;
    const int n = grid.points_per_axis();
    const double h = grid.spacing;
    const double lo = -grid.half_width;
    const double m33 = m(3, 3);

    double sum = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(+ : sum)
    for (int i0 = 0; i0 < n; ++i0) {
        const double x0 = lo + i0 * h;
        double partial = 0.0;
        for (int i1 = 0; i1 < n; ++i1) {
            const double x1 = lo + i1 * h;
            for (int i2 = 0; i2 < n; ++i2) {
                const double x2 = lo + i2 * h;
                // z^T M z = m33 x3^2 + 2 beta x3 + gamma
                const double beta = m(3, 0) * x0 + m(3, 1) * x1 + m(3, 2) * x2;
                const double gamma = m(0, 0) * x0 * x0 + m(1, 1) * x1 * x1 + m(2, 2) * x2 * x2 +
                                     2.0 * (m(0, 1) * x0 * x1 + m(0, 2) * x0 * x2 + m(1, 2) * x1 * x2);
                const double disc = beta * beta - m33 * (gamma - 2.0 * kPruneExponent);
                if (disc < 0.0) {
                    continue;
                }
                const double root = std::sqrt(disc);
                const double x3_lo = (-beta - root) / m33;
                const double x3_hi = (-beta + root) / m33;
                const int j_lo = std::max(0, static_cast<int>(std::floor((x3_lo - lo) / h)));
                const int j_hi = std::min(n - 1, static_cast<int>(std::ceil((x3_hi - lo) / h)));
                for (int i3 = j_lo; i3 <= j_hi; ++i3) {
                    const double x3 = lo + i3 * h;
                    const double q = m33 * x3 * x3 + 2.0 * beta * x3 + gamma;
                    partial += std::exp(-0.5 * q);
                }
            }
        }
        sum += partial;
    }
    return sum * g.prefactor * std::pow(h, 4);
}

double wigner_quadrature(const GaussianState &state, const QuadratureGrid &grid) {
    require_modes(state.covariance, 2, "wigner_quadrature");
    const Matrix4 v = state.covariance.two_mode();
    if (!(v.determinant() > kSingularDeterminant)) {
        throw Error(ErrorKind::singular, "wigner_quadrature: singular covariance");
    }
    // The precision matrix only bounds the support; every kept point goes through wigner_eval.
    const Matrix4 m = v.inverse();
    const Vector &mu = state.mean;
    const int n = grid.points_per_axis();
    const double h = grid.spacing;
    const double lo = -grid.half_width;
    const double m33 = m(3, 3);

    double sum = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(+ : sum)
    for (int i0 = 0; i0 < n; ++i0) {
        Vector z(4);
        z(0) = lo + i0 * h;
        double partial = 0.0;
        for (int i1 = 0; i1 < n; ++i1) {
            z(1) = lo + i1 * h;
            for (int i2 = 0; i2 < n; ++i2) {
                z(2) = lo + i2 * h;
                const double y0 = z(0) - mu(0), y1 = z(1) - mu(1), y2 = z(2) - mu(2);
                const double beta = m(3, 0) * y0 + m(3, 1) * y1 + m(3, 2) * y2;
                const double gamma = m(0, 0) * y0 * y0 + m(1, 1) * y1 * y1 + m(2, 2) * y2 * y2 +
                                     2.0 * (m(0, 1) * y0 * y1 + m(0, 2) * y0 * y2 + m(1, 2) * y1 * y2);
                const double disc = beta * beta - m33 * (gamma - 2.0 * kPruneExponent);
                if (disc < 0.0) {
                    continue;
                }
                const double root = std::sqrt(disc);
                const double x3_lo = mu(3) + (-beta - root) / m33;
                const double x3_hi = mu(3) + (-beta + root) / m33;
                const int j_lo = std::max(0, static_cast<int>(std::floor((x3_lo - lo) / h)));
                const int j_hi = std::min(n - 1, static_cast<int>(std::ceil((x3_hi - lo) / h)));
                for (int i3 = j_lo; i3 <= j_hi; ++i3) {
                    z(3) = lo + i3 * h;
                    partial += wigner_eval(state, z);
                }
            }
        }
        sum += partial;
    }
    return sum * std::pow(h, 4);
}

}  // namespace gsep::kernels
