#include "gsep/scaling.hpp"

#include "gsep/error.hpp"
#include "gsep/parallel.hpp"
#include "gsep/simplex.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace gsep {

namespace {

constexpr int kMaxEnumeratedModes = 4;
constexpr int kSampledPatterns = 256;
constexpr double kLogRange = 5.0;

void check_dimensions(const CovarianceMatrix &v, const ScalingVector &x) {
    if (x.values().size() != v.dimension()) {
        throw Error(ErrorKind::dimension, "scaling vector dimension does not match the covariance");
    }
}

// Signs (s_k, sigma_k) for every mode packed two bits per mode.
std::vector<std::uint32_t> sign_patterns(int n_modes, std::uint64_t seed) {
    std::vector<std::uint32_t> patterns;
    if (n_modes <= kMaxEnumeratedModes) {
        const std::uint32_t count = 1u << (2 * n_modes);
        for (std::uint32_t p = 0; p < count; ++p) {
            patterns.push_back(p);
        }
        return patterns;
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    patterns.push_back(0);
    while (static_cast<int>(patterns.size()) < kSampledPatterns) {
        patterns.push_back(static_cast<std::uint32_t>(rng()));
    }
    return patterns;
}

// Bounded reparameterization: t = 5 sin(y), log m = 5 sin^2(y').
Vector scaling_from_parameters(const Vector &y, std::uint64_t pattern, int n_modes, const std::vector<int> &bits) {
    Vector x(2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        const double t = kLogRange * std::sin(y(2 * k));
        const double s = std::sin(y(2 * k + 1));
        const double log_m = kLogRange * s * s;
        const double sign_q = ((pattern >> bits[2 * k]) & 1u) ? -1.0 : 1.0;
        const double sign_p = ((pattern >> bits[2 * k + 1]) & 1u) ? -1.0 : 1.0;
        x(2 * k) = sign_q * std::exp(t);
        x(2 * k + 1) = sign_p * std::exp(log_m - t);
    }
    return x;
}

double scaled_min_eigenvalue(const Matrix &v, const Matrix &omega, const Vector &x) {
    const Matrix vx = x.asDiagonal() * v * x.asDiagonal();
    return min_eigenvalue_with_commutator(vx, omega);
}

}  // namespace

ScalingVector::ScalingVector(Vector x) : x_(std::move(x)) {
    if (x_.size() < 2 || x_.size() % 2 != 0) {
        throw Error(ErrorKind::dimension, "scaling vector must have even length 2N");
    }
    for (Eigen::Index k = 0; k < x_.size() / 2; ++k) {
        const double product = std::abs(x_(2 * k) * x_(2 * k + 1));
        if (!(product >= 1.0 - kSemigroupTolerance)) {
            std::ostringstream msg;
            msg << "scaling vector violates |x_" << 2 * k + 1 << " x_" << 2 * k + 2 << "| >= 1 (got " << product << ")";
            throw Error(ErrorKind::constraint, msg.str());
        }
    }
}

ScalingVector ScalingVector::identity(int n_modes) { return ScalingVector(Vector::Ones(2 * n_modes)); }

ScalingVector ScalingVector::partial_transpose() { return ScalingVector(Vector4(1.0, 1.0, 1.0, -1.0)); }

CovarianceMatrix apply_scaling(const CovarianceMatrix &v, const ScalingVector &x) {
    check_dimensions(v, x);
    const auto d = x.values().asDiagonal();
    return CovarianceMatrix::from_congruence(d * v.matrix() * d);
}

ScalingTestResult scaling_test(const CovarianceMatrix &v, const ScalingVector &x) {
    check_dimensions(v, x);
    const SymplecticForm omega(v.mode_count());
    ScalingTestResult result;
    result.min_eigenvalue = scaled_min_eigenvalue(v.matrix(), omega.matrix(), x.values());
    result.passes = result.min_eigenvalue >= -kPsdTolerance;
    return result;
}

ScalingScanResult scaling_scan(const CovarianceMatrix &v, std::uint64_t seed, int budget) {
    require_physical(v, "scaling_scan");
    const int n = v.mode_count();
    const SymplecticForm omega(n);
    const std::vector<std::uint32_t> patterns = sign_patterns(n, seed);
    const int pattern_count = static_cast<int>(patterns.size());
    const int per_pattern = std::max(1, budget / std::max(1, pattern_count));

    // Bit positions of (s_k, sigma_k); for N > 4 the pattern is a random 32-bit word.
    std::vector<int> bits(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) {
        bits[static_cast<std::size_t>(i)] = i % 32;
    }

    struct PatternOutcome {
        double value;
        Vector x;
        int evaluations;
    };

    const std::vector<PatternOutcome> outcomes = indexed_map(
        pattern_count,
        [&](int i) {
            const std::uint32_t pattern = patterns[static_cast<std::size_t>(i)];
            const auto objective = [&](const Vector &y) {
                return scaled_min_eigenvalue(v.matrix(), omega.matrix(), scaling_from_parameters(y, pattern, n, bits));
            };
            // Start on the semigroup boundary m_k = 1 with t_k = 0.
            const Vector start = Vector::Zero(2 * n);
            PatternOutcome out{objective(start), scaling_from_parameters(start, pattern, n, bits), 1};
            // The simplex needs dim + 1 evaluations before its first step.
            if (per_pattern > 2 * n + 2) {
                SimplexOptions options;
                options.max_iterations = per_pattern;
                options.max_evaluations = per_pattern - 1;
                options.initial_step = 0.3;
                options.size_tolerance = 1e-10;
                const SimplexResult r = minimize_simplex(objective, start, options);
                out.evaluations += r.evaluations;
                if (r.value < out.value) {
                    out.value = r.value;
                    out.x = scaling_from_parameters(r.x, pattern, n, bits);
                }
            }
            return out;
        },
        Execution::parallel);

    ScalingScanResult result;
    result.patterns = pattern_count;
    std::size_t best = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        result.evaluations += outcomes[i].evaluations;
        if (outcomes[i].value < outcomes[best].value) {
            best = i;
        }
    }
    result.min_eigenvalue = outcomes[best].value;
    if (result.min_eigenvalue < -kPsdTolerance) {
        result.violation = ScalingVector(outcomes[best].x);
    }
    return result;
}

}  // namespace gsep
