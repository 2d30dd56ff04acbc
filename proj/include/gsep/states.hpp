#pragma once

#include "gsep/covariance.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gsep::states {

inline constexpr double kMaxSqueezing = 20.0;

GaussianState vacuum(int n_modes);

/// Product of thermal modes with symplectic eigenvalues nu_k = 2 nbar_k + 1 >= 1.
GaussianState thermal(std::span<const double> nu);

/// Two-mode squeezed vacuum: a = b = cosh(2r)/2, c = -d = sinh(2r)/2.
GaussianState tmsv(double r);

/// S diag(nu_k/2) S^T with nu_k in [1, 5]; S mixes local symplectics with
/// beam-splitter rotations between neighbouring modes.
GaussianState random_physical(int n_modes, std::uint64_t seed);

/// Local symplectics applied to a random thermal product; always separable.
GaussianState random_product(int n_modes, std::uint64_t seed);

enum class FamilyKind { vacuum, thermal, tmsv, random_physical, random_product };

struct StateFamily {
    FamilyKind kind = FamilyKind::vacuum;
    std::vector<double> parameters;
    std::uint64_t seed = 0;
};

/// vacuum [n], thermal nu..., tmsv r, random-physical [n], random-product [n].
GaussianState generate(const StateFamily &family);

FamilyKind parse_family(const std::string &name);
std::string family_name(FamilyKind kind);

}  // namespace gsep::states
