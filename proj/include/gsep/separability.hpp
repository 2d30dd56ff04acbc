#pragma once

#include "gsep/covariance.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace gsep {

/// Dead-band around f = 0; states inside it count as separable.
inline constexpr double kSeparabilityTolerance = 1e-10;

/**
 * @brief Coefficients of the local quadrature combinations
 *
 *   u = a1 q1 + a3 p1 + a2 q2 + a4 p2,
 *   v = b3 q1 + b1 p1 + b4 q2 + b2 p2.
 *
 * a[0] holds a1, ..., a[3] holds a4; likewise for b.
 */
struct WitnessCoefficients {
    std::array<double, 4> a{};
    std::array<double, 4> b{};

    /// Coefficients of u in (q1, p1, q2, p2) ordering.
    Vector4 u_vector() const { return {a[0], a[2], a[1], a[3]}; }
    /// Coefficients of v in (q1, p1, q2, p2) ordering.
    Vector4 v_vector() const { return {b[2], b[0], b[3], b[1]}; }

    /// a1 b1 - a3 b3, i.e. -i [u1, v1] restricted to mode 1.
    double mode1_commutator() const { return a[0] * b[0] - a[2] * b[2]; }
    double mode2_commutator() const { return a[1] * b[1] - a[3] * b[3]; }

    bool is_valid() const;

    /// u -> t u, v -> v / t.
    WitnessCoefficients rescaled(double t) const;

    static WitnessCoefficients from_vectors(const Vector4 &u, const Vector4 &v);
};

enum class Classification { separable, entangled };

struct SeparabilityVerdict {
    Classification classification = Classification::separable;
    double f_value = 0.0;
    double pt_min_eigenvalue = 0.0;  // of Lambda V Lambda + (i/2) Omega
    std::optional<WitnessCoefficients> witness;
};

struct ProductConditionReport {
    double lhs = 0.0;
    double separable_bound = 0.0;
    double uncertainty_bound = 0.0;
    bool violated = false;
};

struct SumConditionReport {
    double lhs = 0.0;
    double separable_bound = 0.0;
    bool violated = false;
};

struct WitnessSearchOptions {
    int starts = 64;
    int iterations = 200;
    std::uint64_t seed = 0;
};

struct DecideOptions {
    bool attach_witness = true;
    WitnessSearchOptions witness;
};

/// Lambda V Lambda with Lambda = diag(1, 1, 1, -1): mirror of p2.
CovarianceMatrix partial_transpose(const CovarianceMatrix &v);

/// f(V) = det A det B + (1/4 - |det C|)^2 - Tr(AJCJBJC^TJ) - (det A + det B)/4.
double f_functional(const CovarianceMatrix &v);
double f_functional(const SymplecticInvariants &inv);

/// 4 f(V) written in standard-form parameters:
/// 4(ab - c^2)(ab - d^2) - (a^2 + b^2) - 2|cd| + 1/4. Its zero set is the
/// separability boundary surface.
double boundary_function(double a, double b, double c, double d);

/// Smallest eigenvalue of the partially transposed uncertainty matrix.
double pt_min_eigenvalue(const CovarianceMatrix &v);

SeparabilityVerdict decide(const CovarianceMatrix &v, const DecideOptions &options = {});

/// coeff^T V coeff, the variance of coeff . (q1, p1, ...) for zero mean.
double variance_of(const CovarianceMatrix &v, const Vector &coeff);

ProductConditionReport product_condition(const CovarianceMatrix &v, const WitnessCoefficients &w);
SumConditionReport sum_condition(const CovarianceMatrix &v, const WitnessCoefficients &w);

/// Multistart search for coefficients violating the sum condition.
/// Returns a unit-norm certificate, or nothing when no violation was found.
std::optional<WitnessCoefficients> witness_search(const CovarianceMatrix &v, const WitnessSearchOptions &options = {});

}  // namespace gsep
