#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's numerical routines.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

/// Determinant by cofactor expansion along the first row.
inline double laplace_det(const Eigen::MatrixXd &m) {
    const Eigen::Index n = m.rows();
    if (n == 1) {
        return m(0, 0);
    }
    double det = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::MatrixXd minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        det += ((j % 2 == 0) ? 1.0 : -1.0) * m(0, j) * laplace_det(minor);
    }
    return det;
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a) {
    const Eigen::Index n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30) break;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline Eigen::MatrixXd omega(int modes) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
    for (int k = 0; k < modes; ++k) {
        w(2 * k, 2 * k + 1) = 1.0;
        w(2 * k + 1, 2 * k) = -1.0;
    }
    return w;
}

/// Smallest eigenvalue of V + (i/2) Omega through the real embedding
/// [[V, -Omega/2], [Omega/2, V]], whose spectrum doubles the Hermitian one.
inline double min_eig_uncertainty(const Eigen::MatrixXd &v) {
    const Eigen::Index d = v.rows();
    const Eigen::MatrixXd w = 0.5 * omega(static_cast<int>(d / 2));
    Eigen::MatrixXd big(2 * d, 2 * d);
    big << v, -w, w, v;
    return jacobi_eigenvalues(big).front();
}

/// Standard-form expansion of the separability functional.
inline double f_standard(double a, double b, double c, double d) {
    const double t = 0.25 - std::abs(c * d);
    return a * a * b * b + t * t - a * b * (c * c + d * d) - 0.25 * (a * a + b * b);
}

}  // namespace oracle
