#include "doctest.h"
#include "oracles.hpp"

#include "gsep/error.hpp"
#include "gsep/separability.hpp"
#include "gsep/states.hpp"

#include <cmath>

using namespace gsep;

TEST_CASE("vacuum and thermal") {
    CHECK(states::vacuum(3).covariance.matrix() == 0.5 * Matrix::Identity(6, 6));
    CHECK(states::vacuum(3).mean == Vector::Zero(6));
    const std::vector<double> nu{1.0, 3.0};
    CHECK(states::thermal(nu).covariance.matrix() == Vector4(0.5, 0.5, 1.5, 1.5).asDiagonal().toDenseMatrix());
    const std::vector<double> bad{0.9};
    try {
        states::thermal(bad);
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::parameter);
    }
    CHECK_THROWS_AS(states::thermal(std::vector<double>{}), Error);
    CHECK_THROWS_AS(states::vacuum(0), Error);
}

TEST_CASE("tmsv") {
    const CovarianceMatrix v = states::tmsv(0.5).covariance;
    const double ch = std::cosh(1.0) / 2, sh = std::sinh(1.0) / 2;
    CHECK(v(0, 0) == doctest::Approx(ch));
    CHECK(v(3, 3) == doctest::Approx(ch));
    CHECK(v(0, 2) == doctest::Approx(sh));
    CHECK(v(1, 3) == doctest::Approx(-sh));
    // Pure: det V = (1/2)^4.
    CHECK(oracle::laplace_det(v.matrix()) == doctest::Approx(1.0 / 16).epsilon(1e-12));
    CHECK(states::tmsv(0.0).covariance.matrix() == 0.5 * Matrix::Identity(4, 4));
    CHECK_NOTHROW(states::tmsv(20.0));
    CHECK_THROWS_AS(states::tmsv(20.5), Error);
    CHECK_THROWS_AS(states::tmsv(std::nan("")), Error);
}

TEST_CASE("random families") {
    SUBCASE("physical and deterministic") {
        for (int n = 1; n <= 5; ++n) {
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const CovarianceMatrix v = states::random_physical(n, seed).covariance;
                CHECK(is_physical(v).is_physical);
                CHECK(v.matrix() == states::random_physical(n, seed).covariance.matrix());
                CHECK(is_physical(states::random_product(n, seed).covariance).is_physical);
            }
        }
        CHECK(states::random_physical(2, 1).covariance.matrix() != states::random_physical(2, 2).covariance.matrix());
    }
    SUBCASE("random_physical covers both classes") {
        int entangled = 0;
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            entangled += f_functional(states::random_physical(2, seed).covariance) < 0 ? 1 : 0;
        }
        CHECK(entangled > 50);
        CHECK(entangled < 450);
    }
    SUBCASE("random_product has no cross correlations") {
        const CovarianceMatrix v = states::random_product(3, 4).covariance;
        CHECK(v.matrix().block(0, 2, 2, 4).norm() == 0.0);
        CHECK(v.matrix().block(2, 4, 2, 2).norm() == 0.0);
    }
}

TEST_CASE("families") {
    CHECK(states::parse_family("random-physical") == states::FamilyKind::random_physical);
    CHECK(states::family_name(states::FamilyKind::tmsv) == "tmsv");
    for (auto k : {states::FamilyKind::vacuum, states::FamilyKind::thermal, states::FamilyKind::tmsv,
                   states::FamilyKind::random_physical, states::FamilyKind::random_product}) {
        CHECK(states::parse_family(states::family_name(k)) == k);
    }
    CHECK_THROWS_AS(states::parse_family("squeezed"), Error);

    states::StateFamily f;
    CHECK(states::generate(f).covariance.mode_count() == 2);
    f.parameters = {3};
    CHECK(states::generate(f).covariance.mode_count() == 3);
    f.parameters = {2.5};
    CHECK_THROWS_AS(states::generate(f), Error);
    f.kind = states::FamilyKind::tmsv;
    f.parameters = {};
    CHECK_THROWS_AS(states::generate(f), Error);
    f.parameters = {0.5};
    CHECK(states::generate(f).covariance.matrix() == states::tmsv(0.5).covariance.matrix());
    f.kind = states::FamilyKind::random_physical;
    f.parameters = {};
    f.seed = 11;
    CHECK(states::generate(f).covariance.matrix() == states::random_physical(2, 11).covariance.matrix());
}
