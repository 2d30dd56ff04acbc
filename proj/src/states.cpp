#include "gsep/states.hpp"

#include "gsep/error.hpp"
#include "gsep/standard_form.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace gsep::states {

namespace {

void check_modes(int n_modes) {
    if (n_modes < 1) {
        throw Error(ErrorKind::parameter, "number of modes must be positive");
    }
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    return std::mt19937_64(seq);
}

Matrix2 random_single_mode(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> sq(-1.0, 1.0);
    SingleModeParameters p;
    p.theta = angle(rng);
    p.r = sq(rng);
    p.phi = angle(rng);
    return single_mode_symplectic(p);
}

Matrix random_local(int n_modes, std::mt19937_64 &rng) {
    Matrix s = Matrix::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        s.block<2, 2>(2 * k, 2 * k) = random_single_mode(rng);
    }
    return s;
}

// Beam splitter of angle theta between modes j and j + 1; orthogonal and symplectic.
Matrix beam_splitter(int n_modes, int j, double theta) {
    Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
    const double c = std::cos(theta);
    const double t = std::sin(theta);
    const Matrix2 id = Matrix2::Identity();
    s.block<2, 2>(2 * j, 2 * j) = c * id;
    s.block<2, 2>(2 * j, 2 * j + 2) = t * id;
    s.block<2, 2>(2 * j + 2, 2 * j) = -t * id;
    s.block<2, 2>(2 * j + 2, 2 * j + 2) = c * id;
    return s;
}

Matrix random_thermal_diagonal(int n_modes, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> nu(1.0, 5.0);
    Vector diag(2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        const double x = nu(rng);
        diag(2 * k) = 0.5 * x;
        diag(2 * k + 1) = 0.5 * x;
    }
    return diag.asDiagonal();
}

}  // namespace

GaussianState vacuum(int n_modes) {
    check_modes(n_modes);
    return {Vector::Zero(2 * n_modes), CovarianceMatrix::validate(0.5 * Matrix::Identity(2 * n_modes, 2 * n_modes))};
}

GaussianState thermal(std::span<const double> nu) {
    if (nu.empty()) {
        throw Error(ErrorKind::parameter, "thermal: at least one mode is required");
    }
    const int n = static_cast<int>(nu.size());
    Vector diag(2 * n);
    for (int k = 0; k < n; ++k) {
        const double x = nu[static_cast<std::size_t>(k)];
        if (!(x >= 1.0) || !std::isfinite(x)) {
            std::ostringstream msg;
            msg << "thermal: symplectic eigenvalue nu = " << x << " is below the vacuum value 1";
            throw Error(ErrorKind::parameter, msg.str());
        }
        diag(2 * k) = 0.5 * x;
        diag(2 * k + 1) = 0.5 * x;
    }
    return {Vector::Zero(2 * n), CovarianceMatrix::validate(diag.asDiagonal().toDenseMatrix())};
}

GaussianState tmsv(double r) {
    if (!(std::abs(r) <= kMaxSqueezing)) {
        std::ostringstream msg;
        msg << "tmsv: squeezing |r| = " << std::abs(r) << " exceeds the overflow guard " << kMaxSqueezing;
        throw Error(ErrorKind::parameter, msg.str());
    }
    const double a = 0.5 * std::cosh(2.0 * r);
    const double c = 0.5 * std::sinh(2.0 * r);
    return {Vector::Zero(4), CovarianceMatrix::validate(Matrix(standard_form_matrix(a, a, c, -c)))};
}

GaussianState random_physical(int n_modes, std::uint64_t seed) {
    check_modes(n_modes);
    auto rng = seeded(seed, 0x5eed0001u);
    const Matrix diag = random_thermal_diagonal(n_modes, rng);
    Matrix s = random_local(n_modes, rng);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int j = 0; j + 1 < n_modes; ++j) {
        s = beam_splitter(n_modes, j, angle(rng)) * s;
    }
    s = random_local(n_modes, rng) * s;
    return {Vector::Zero(2 * n_modes), CovarianceMatrix::from_congruence(s * diag * s.transpose())};
}

GaussianState random_product(int n_modes, std::uint64_t seed) {
    check_modes(n_modes);
    auto rng = seeded(seed, 0x5eed0002u);
    const Matrix diag = random_thermal_diagonal(n_modes, rng);
    const Matrix s = random_local(n_modes, rng);
    return {Vector::Zero(2 * n_modes), CovarianceMatrix::from_congruence(s * diag * s.transpose())};
}

FamilyKind parse_family(const std::string &name) {
    if (name == "vacuum") return FamilyKind::vacuum;
    if (name == "thermal") return FamilyKind::thermal;
    if (name == "tmsv") return FamilyKind::tmsv;
    if (name == "random-physical") return FamilyKind::random_physical;
    if (name == "random-product") return FamilyKind::random_product;
    throw Error(ErrorKind::parameter, "unknown state family '" + name + "'");
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::vacuum: return "vacuum";
        case FamilyKind::thermal: return "thermal";
        case FamilyKind::tmsv: return "tmsv";
        case FamilyKind::random_physical: return "random-physical";
        case FamilyKind::random_product: return "random-product";
    }
    return "unknown";
}

namespace {

int mode_parameter(const StateFamily &family) {
    if (family.parameters.empty()) {
        return 2;
    }
    if (family.parameters.size() > 1) {
        throw Error(ErrorKind::parameter, family_name(family.kind) + " takes at most one parameter (mode count)");
    }
    const double n = family.parameters.front();
    if (!(n >= 1.0) || n != std::floor(n) || n > 64.0) {
        throw Error(ErrorKind::parameter, "mode count must be a positive integer");
    }
    return static_cast<int>(n);
}

}  // namespace

GaussianState generate(const StateFamily &family) {
    switch (family.kind) {
        case FamilyKind::vacuum: return vacuum(mode_parameter(family));
        case FamilyKind::thermal: return thermal(family.parameters);
        case FamilyKind::tmsv:
            if (family.parameters.size() != 1) {
                throw Error(ErrorKind::parameter, "tmsv takes exactly one parameter (squeezing r)");
            }
            return tmsv(family.parameters.front());
        case FamilyKind::random_physical: return random_physical(mode_parameter(family), family.seed);
        case FamilyKind::random_product: return random_product(mode_parameter(family), family.seed);
    }
    throw Error(ErrorKind::parameter, "unknown state family");
}

}  // namespace gsep::states
