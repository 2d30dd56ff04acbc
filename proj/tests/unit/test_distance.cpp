#include "doctest.h"
#include "oracles.hpp"

#include "gsep/distance.hpp"
#include "gsep/error.hpp"
#include "gsep/separability.hpp"
#include "gsep/standard_form.hpp"
#include "gsep/states.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace gsep;

namespace {

constexpr double kPi = std::numbers::pi;

CovarianceMatrix thermal(double n1, double n2) {
    const std::vector<double> nu{n1, n2};
    return states::thermal(nu).covariance;
}

double oracle_overlap(const Matrix &v1, const Matrix &v2) {
    const double n = static_cast<double>(v1.rows() / 2);
    return std::pow(2.0 * kPi, -n) / std::sqrt(oracle::laplace_det(v1 + v2));
}

// A point with boundary_function = 0 built from (a, b, |cd|, branch).
CovarianceMatrix boundary_point(double a, double b, double prod, double branch, std::uint64_t seed) {
    const double s = (4 * a * a * b * b + 4 * prod * prod - 2 * prod - (a * a + b * b) + 0.25) / (4 * a * b);
    const double disc = std::sqrt(s * s - 4 * prod * prod);
    const double c = std::sqrt(0.5 * (s + disc));
    const double d = branch * std::sqrt(0.5 * (s - disc));
    return conjugate(CovarianceMatrix::validate(Matrix(standard_form_matrix(a, b, c, d))), random_local_symplectic(seed));
}

// Distance from TMSV(r) to the symmetric boundary slice a = b, d = -c, where
// f = 0 reduces to c = a - 1/2. Golden-section search over a with cofactor determinants.
double symmetric_slice_distance(double r) {
    const Matrix t = states::tmsv(r).covariance.matrix();
    const auto l2 = [&](double a) {
        const Matrix s = standard_form_matrix(a, a, a - 0.5, 0.5 - a);
        const double n = 1.0 / (4 * kPi * kPi);
        return n / std::sqrt(oracle::laplace_det(2 * t)) + n / std::sqrt(oracle::laplace_det(2 * s)) -
               2 * n / std::sqrt(oracle::laplace_det(t + s));
    };
    double lo = 0.5, hi = 4.0;
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int i = 0; i < 200; ++i) {
        const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        if (l2(x1) < l2(x2)) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    return std::sqrt(l2(0.5 * (lo + hi)));
}

}  // namespace

TEST_CASE("wigner_overlap") {
    const CovarianceMatrix vac = states::vacuum(2).covariance;
    CHECK(wigner_overlap(vac, vac) == doctest::Approx(1.0 / (4 * kPi * kPi)).epsilon(1e-14));
    CHECK(wigner_overlap(vac, thermal(3, 3)) == doctest::Approx(1.0 / (16 * kPi * kPi)).epsilon(1e-14));
    // Pure states: integral of W^2 is (2 pi)^-N.
    CHECK(wigner_overlap(states::tmsv(0.7).covariance, states::tmsv(0.7).covariance) ==
          doctest::Approx(1.0 / (4 * kPi * kPi)).epsilon(1e-12));
    CHECK(wigner_overlap(states::vacuum(1).covariance, states::vacuum(1).covariance) ==
          doctest::Approx(1.0 / (2 * kPi)).epsilon(1e-14));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const CovarianceMatrix a = states::random_physical(2, seed).covariance;
        const CovarianceMatrix b = states::random_physical(2, seed + 1000).covariance;
        CHECK(wigner_overlap(a, b) == doctest::Approx(oracle_overlap(a.matrix(), b.matrix())).epsilon(1e-11));
        CHECK(wigner_overlap(a, b) == doctest::Approx(wigner_overlap(b, a)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(wigner_overlap(vac, states::vacuum(3).covariance), Error);
}

TEST_CASE("l2_distance_squared") {
    SUBCASE("vacuum against thermal(3,3)") {
        const DistanceReport r = l2_distance_squared(states::vacuum(2).covariance, thermal(3, 3));
        CHECK(r.wigner_l2_squared == doctest::Approx(11.0 / (72.0 * kPi * kPi)).epsilon(1e-13));
        CHECK(r.wigner_l2_squared == doctest::Approx(0.015480).epsilon(1e-4));
        CHECK(r.hilbert_schmidt_squared == doctest::Approx(11.0 / 18.0).epsilon(1e-13));
    }
    SUBCASE("identical inputs") {
        const CovarianceMatrix v = states::random_physical(2, 5).covariance;
        const DistanceReport r = l2_distance_squared(v, v);
        CHECK(r.wigner_l2_squared == 0.0);
        CHECK(r.hilbert_schmidt_squared == 0.0);
    }
    SUBCASE("symmetric and non-negative") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const CovarianceMatrix a = states::random_physical(2, seed).covariance;
            const CovarianceMatrix b = states::random_physical(2, seed + 500).covariance;
            const DistanceReport ab = l2_distance_squared(a, b);
            const DistanceReport ba = l2_distance_squared(b, a);
            CHECK(ab.wigner_l2_squared >= 0.0);
            CHECK(ab.wigner_l2_squared == doctest::Approx(ba.wigner_l2_squared).epsilon(1e-12));
            CHECK(ab.hilbert_schmidt_squared == doctest::Approx(4 * kPi * kPi * ab.wigner_l2_squared).epsilon(1e-13));
        }
    }
    SUBCASE("two pure states") {
        // Tr(rho1 - rho2)^2 = 2 - 2 |<psi1|psi2>|^2 for pure states.
        const DistanceReport r = l2_distance_squared(states::vacuum(2).covariance, states::tmsv(0.5).covariance);
        const double fidelity = 1.0 / (std::cosh(0.5) * std::cosh(0.5));
        CHECK(r.hilbert_schmidt_squared == doctest::Approx(2.0 - 2.0 * fidelity).epsilon(1e-13));
    }
    SUBCASE("unphysical input") {
        CHECK_THROWS_AS(l2_distance_squared(states::vacuum(2).covariance,
                                            CovarianceMatrix::validate(0.25 * Matrix::Identity(4, 4))),
                        Error);
    }
}

TEST_CASE("distance_to_boundary examples") {
    SUBCASE("vacuum lies on the boundary") {
        const QspVerdict r = distance_to_boundary(states::vacuum(2).covariance, 10.0);
        CHECK(r.boundary_distance < 1e-6);
        CHECK(r.classification == QspClassification::almost_separable);
        CHECK(r.threshold == doctest::Approx(0.1));
    }
    SUBCASE("tmsv(1.0) at delta = 10") {
        const QspVerdict r = distance_to_boundary(states::tmsv(1.0).covariance, 10.0);
        CHECK(r.classification == QspClassification::strictly_entangled);
        // Regression value; 128-start runs under four seeds agree to 1e-12.
        CHECK(r.boundary_distance == doctest::Approx(0.126278860062).epsilon(1e-9));
        CHECK(r.boundary_distance == doctest::Approx(symmetric_slice_distance(1.0)).epsilon(1e-8));
        CHECK(r.hilbert_schmidt_distance == doctest::Approx(2 * kPi * r.boundary_distance).epsilon(1e-14));
        CHECK(std::abs(f_functional(CovarianceMatrix::validate(Matrix(r.boundary_covariance)))) < 1e-6);
        CHECK(r.starts_in_agreement >= 8);
    }
    SUBCASE("thermal(3,3)") {
        const QspVerdict coarse = distance_to_boundary(thermal(3, 3), 1e-9);
        CHECK(coarse.classification == QspClassification::almost_separable);
        const QspVerdict fine = distance_to_boundary(thermal(3, 3), 1e6);
        CHECK(fine.classification == QspClassification::strictly_separable);
        CHECK(fine.boundary_distance == doctest::Approx(coarse.boundary_distance).epsilon(1e-12));
        // Vacuum lies on the boundary, so it bounds the distance from above.
        CHECK(fine.boundary_distance <= std::sqrt(11.0 / (72.0 * kPi * kPi)) + 1e-12);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(distance_to_boundary(states::vacuum(2).covariance, 0.0), Error);
        CHECK_THROWS_AS(distance_to_boundary(states::vacuum(2).covariance, -1.0), Error);
        CHECK_THROWS_AS(distance_to_boundary(states::vacuum(3).covariance, 1.0), Error);
    }
}

TEST_CASE("distance_to_boundary properties") {
    BoundarySearchOptions opt;
    opt.starts = 16;
    SUBCASE("boundary points have zero distance") {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 10;) {
            const double a = 0.5 + u(rng), b = 0.5 + u(rng), prod = 0.2 * u(rng);
            const double s = (4 * a * a * b * b + 4 * prod * prod - 2 * prod - (a * a + b * b) + 0.25) / (4 * a * b);
            if (s < 2 * prod) continue;
            ++i;
            const CovarianceMatrix v = boundary_point(a, b, prod, i % 2 ? 1.0 : -1.0, static_cast<std::uint64_t>(i));
            REQUIRE(std::abs(f_functional(v)) < 1e-9);
            CAPTURE(i);
            CHECK(distance_to_boundary(v, 1.0, opt).boundary_distance < 1e-5);
        }
    }
    SUBCASE("argmin is consistent and no farther than the vacuum") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const CovarianceMatrix v = states::random_physical(2, seed).covariance;
            const QspVerdict r = distance_to_boundary(v, 1.0, opt);
            const CovarianceMatrix p = CovarianceMatrix::validate(Matrix(r.boundary_covariance));
            CHECK(std::abs(f_functional(p)) < 1e-6);
            CHECK(is_physical(p).min_eigenvalue > -1e-6);
            CHECK(r.boundary_distance * r.boundary_distance ==
                  doctest::Approx(l2_distance_squared(v, p).wigner_l2_squared).epsilon(1e-9));
            CHECK(r.boundary_distance <=
                  std::sqrt(l2_distance_squared(v, states::vacuum(2).covariance).wigner_l2_squared) + 1e-9);
        }
    }
    SUBCASE("no randomly sampled boundary point is closer") {
        const CovarianceMatrix v = states::tmsv(1.0).covariance;
        const double best = distance_to_boundary(v, 1.0).boundary_distance;
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double sampled = 1.0;
        for (int i = 0; i < 20000;) {
            const double a = 0.5 + 2 * u(rng), b = 0.5 + 2 * u(rng), prod = 1.5 * u(rng);
            const double s = (4 * a * a * b * b + 4 * prod * prod - 2 * prod - (a * a + b * b) + 0.25) / (4 * a * b);
            if (s < 2 * prod) continue;
            const CovarianceMatrix p = boundary_point(a, b, prod, u(rng) < 0.5 ? -1.0 : 1.0, static_cast<std::uint64_t>(i));
            ++i;
            if (!is_physical(p).is_physical) continue;
            sampled = std::min(sampled, std::sqrt(l2_distance_squared(v, p).wigner_l2_squared));
        }
        CHECK(best <= sampled);
    }
    SUBCASE("invariant under local symplectics") {
        const CovarianceMatrix v = states::tmsv(0.6).covariance;
        const double base = distance_to_boundary(v, 1.0, opt).boundary_distance;
        const CovarianceMatrix w = conjugate(v, random_local_symplectic(4));
        // The Wigner-L2 distance is preserved by symplectic maps (unit Jacobian).
        CHECK(distance_to_boundary(w, 1.0, opt).boundary_distance == doctest::Approx(base).epsilon(1e-5));
    }
    SUBCASE("deterministic") {
        const CovarianceMatrix v = states::random_physical(2, 77).covariance;
        const QspVerdict a = distance_to_boundary(v, 1.0, opt);
        const QspVerdict b = distance_to_boundary(v, 1.0, opt);
        CHECK(a.boundary_distance == b.boundary_distance);
        CHECK(a.boundary_covariance == b.boundary_covariance);
    }
}
