#include "gsep/distance.hpp"

#include "gsep/error.hpp"
#include "gsep/parallel.hpp"
#include "gsep/separability.hpp"
#include "gsep/simplex.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace gsep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::array<double, 3> kPenaltySchedule = {1e2, 1e4, 1e6};
constexpr double kBoundaryResidualTolerance = 1e-6;
constexpr double kAgreementTolerance = 1e-6;
constexpr std::size_t kRestarts = 4;

void check_pair(const CovarianceMatrix &v1, const CovarianceMatrix &v2, const char *operation) {
    if (v1.dimension() != v2.dimension()) {
        throw Error(ErrorKind::dimension, std::string(operation) + ": covariances have different dimensions");
    }
    require_physical(v1, operation);
    require_physical(v2, operation);
}

double overlap_unchecked(const Matrix &v1, const Matrix &v2) {
    const double n = static_cast<double>(v1.rows() / 2);
    return std::pow(kTwoPi, -n) / std::sqrt((v1 + v2).determinant());
}

// Squared Wigner-L2 distance from target to a candidate. det V' is taken from the
// standard form, since local symplectics preserve it and large squeezings would
// otherwise cancel it away.
double l2_to_candidate(const Matrix4 &target, double target_det, const Matrix4 &candidate, double candidate_det) {
    const double norm = 1.0 / (kTwoPi * kTwoPi);
    const double self1 = norm / (4.0 * std::sqrt(target_det));
    const double self2 = norm / (4.0 * std::sqrt(candidate_det));
    const double cross = norm / std::sqrt((target + candidate).determinant());
    return self1 + self2 - 2.0 * cross;
}

// Boundary candidate parameterization:
//   p = (alpha, beta, d, theta1, r1, phi1, theta2, r2, phi2),
//   a = 1/2 + alpha^2, b = 1/2 + beta^2,
// with c >= 0 solved from boundary_function(a, b, c, d) = 0, which is the quadratic
//   4 q c^2 + 2 |d| c - (4 a b q - (a^2 + b^2 - 1/4)) = 0,  q = ab - d^2.
// The root is smooth across c = |d|, where the symmetric optima sit.
struct Candidate {
    double a = 0.5;
    double b = 0.5;
    double c = 0.0;
    double d = 0.0;
    double deficit = 0.0;        // > 0 when no real c >= 0 solves the constraint
    LocalSymplectic local;       // maps standard form to the candidate
};

Candidate build_candidate(const Vector &p) {
    Candidate cand;
    cand.a = 0.5 + p(0) * p(0);
    cand.b = 0.5 + p(1) * p(1);
    cand.d = p(2);
    const double a = cand.a;
    const double b = cand.b;
    const double q = a * b - cand.d * cand.d;
    const double rhs = 4.0 * a * b * q - (a * a + b * b - 0.25);
    if (q > 0.0 && rhs >= 0.0) {
        const double ad = std::abs(cand.d);
        // Equivalent to (-|d| + sqrt(d^2 + 4 q rhs)) / (4 q) without cancellation.
        cand.c = rhs / (ad + std::sqrt(ad * ad + 4.0 * q * rhs));
    } else {
        cand.deficit = std::max(-rhs, 0.0) + std::max(-q, 0.0);
    }
    cand.local.s1 = single_mode_symplectic({p(3), p(4), p(5)});
    cand.local.s2 = single_mode_symplectic({p(6), p(7), p(8)});
    return cand;
}

double candidate_det(const Candidate &cand) {
    const double ab = cand.a * cand.b;
    return (ab - cand.c * cand.c) * (ab - cand.d * cand.d);
}

Matrix4 candidate_matrix(const Candidate &cand) {
    const Matrix4 l = cand.local.assembled();
    const Matrix4 v = l * standard_form_matrix(cand.a, cand.b, cand.c, cand.d) * l.transpose();
    return 0.5 * (v + v.transpose());
}

double candidate_min_eigenvalue(const Candidate &cand) {
    static const SymplecticForm omega(2);
    return min_eigenvalue_with_commutator(Matrix(standard_form_matrix(cand.a, cand.b, cand.c, cand.d)), omega.matrix());
}

std::vector<Vector> boundary_starts(const CovarianceMatrix &v, const BoundarySearchOptions &options) {
    const StandardForm sf = reduce(v);
    const LocalSymplectic back = sf.transform.inverse();
    const SingleModeParameters m1 = decompose_single_mode(back.s1);
    const SingleModeParameters m2 = decompose_single_mode(back.s2);

    Vector base(9);
    base << std::sqrt(std::max(0.0, sf.a - 0.5)), std::sqrt(std::max(0.0, sf.b - 0.5)), sf.d, m1.theta, m1.r,
        m1.phi, m2.theta, m2.r, m2.phi;

    // Start 0 keeps the input's d, start 1 mirrors it onto the other sign of det C.
    std::vector<Vector> starts;
    starts.push_back(base);
    Vector mirrored = base;
    mirrored(2) = -base(2);
    starts.push_back(mirrored);
    for (int i = 2; i < options.starts; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> jitter(0.0, 0.3);
        Vector p = starts[static_cast<std::size_t>(i % 2)];
        for (Eigen::Index k = 0; k < p.size(); ++k) {
            p(k) += jitter(rng);
        }
        starts.push_back(p);
    }
    starts.resize(static_cast<std::size_t>(std::max(options.starts, 0)));
    return starts;
}

struct StartOutcome {
    bool feasible = false;
    double distance_squared = std::numeric_limits<double>::infinity();
    Candidate candidate;
};

}  // namespace

double wigner_overlap(const CovarianceMatrix &v1, const CovarianceMatrix &v2) {
    check_pair(v1, v2, "wigner_overlap");
    return overlap_unchecked(v1.matrix(), v2.matrix());
}

DistanceReport l2_distance_squared(const CovarianceMatrix &v1, const CovarianceMatrix &v2) {
    check_pair(v1, v2, "l2_distance_squared");
    const Matrix &m1 = v1.matrix();
    const Matrix &m2 = v2.matrix();
    const double n = static_cast<double>(v1.mode_count());
    DistanceReport report;
    if (m1 == m2) {
        return report;
    }
    const double value = overlap_unchecked(m1, m1) + overlap_unchecked(m2, m2) - 2.0 * overlap_unchecked(m1, m2);
    report.wigner_l2_squared = std::max(0.0, value);
    report.hilbert_schmidt_squared = std::pow(kTwoPi, n) * report.wigner_l2_squared;
    return report;
}

std::string to_string(QspClassification c) {
    switch (c) {
        case QspClassification::strictly_separable: return "strictly_separable";
        case QspClassification::strictly_entangled: return "strictly_entangled";
        case QspClassification::almost_separable: return "almost_separable";
        case QspClassification::almost_entangled: return "almost_entangled";
    }
    return "unknown";
}

QspVerdict distance_to_boundary(const CovarianceMatrix &v, double delta, const BoundarySearchOptions &options) {
    require_modes(v, 2, "distance_to_boundary");
    require_physical(v, "distance_to_boundary");
    if (!(delta > 0.0)) {
        throw Error(ErrorKind::parameter, "distance_to_boundary: precision delta must be positive");
    }
    const Matrix4 target = v.two_mode();
    const double target_det = target.determinant();
    const std::vector<Vector> starts = boundary_starts(v, options);

    SimplexOptions simplex;
    simplex.max_iterations = options.max_iterations_per_stage;
    simplex.initial_step = 0.05;
    simplex.size_tolerance = 1e-12;
    simplex.stall_window = 50;
    simplex.stall_tolerance = 1e-10;

    const std::vector<StartOutcome> outcomes = indexed_map(
        static_cast<int>(starts.size()),
        [&](int i) {
            Vector p = starts[static_cast<std::size_t>(i)];
            for (std::size_t stage = 0; stage < kPenaltySchedule.size() + kRestarts; ++stage) {
                const double weight = kPenaltySchedule[std::min(stage, kPenaltySchedule.size() - 1)];
                const auto objective = [&](const Vector &x) {
                    const Candidate cand = build_candidate(x);
                    const double unphysical = std::max(0.0, -candidate_min_eigenvalue(cand));
                    // Unsquared so the stall test still resolves distances near zero; abs, not
                    // max(0, .), so a NaN reaches the simplex.
                    const double l2 = l2_to_candidate(target, target_det, candidate_matrix(cand), candidate_det(cand));
                    return std::sqrt(std::abs(l2)) +
                           weight * (cand.deficit * cand.deficit + unphysical * unphysical);
                };
                const double before = objective(p);
                const SimplexResult r = minimize_simplex(objective, p, simplex);
                if (r.value < before) {
                    p = r.x;
                }
                // Restarts at the final weight rebuild a collapsed simplex.
                if (stage >= kPenaltySchedule.size() - 1 && before - r.value < 1e-15) {
                    break;
                }
            }
            StartOutcome out;
            out.candidate = build_candidate(p);
            const Candidate &cand = out.candidate;
            const double residual = boundary_function(cand.a, cand.b, cand.c, cand.d);
            const double l2 = l2_to_candidate(target, target_det, candidate_matrix(cand), candidate_det(cand));
            out.feasible = std::abs(residual) <= kBoundaryResidualTolerance &&
                           candidate_min_eigenvalue(cand) >= -kBoundaryResidualTolerance && std::isfinite(l2);
            out.distance_squared = std::max(0.0, l2);
            return out;
        },
        Execution::parallel);

    std::size_t best = outcomes.size();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].feasible) {
            continue;
        }
        if (best == outcomes.size() || outcomes[i].distance_squared < outcomes[best].distance_squared) {
            best = i;
        }
    }
    if (best == outcomes.size()) {
        throw Error(ErrorKind::optimization, "distance_to_boundary: no feasible boundary point found");
    }

    const StartOutcome &winner = outcomes[best];
    QspVerdict verdict;
    verdict.boundary_distance = std::sqrt(winner.distance_squared);
    verdict.hilbert_schmidt_distance = kTwoPi * verdict.boundary_distance;
    verdict.threshold = 1.0 / delta;
    verdict.boundary_point = {winner.candidate.a, winner.candidate.b, winner.candidate.c, winner.candidate.d,
                              winner.candidate.local.inverse()};
    verdict.boundary_covariance = candidate_matrix(winner.candidate);
    for (const auto &o : outcomes) {
        if (o.feasible && std::abs(std::sqrt(o.distance_squared) - verdict.boundary_distance) <= kAgreementTolerance) {
            ++verdict.starts_in_agreement;
        }
    }

    const bool separable = f_functional(v) >= -kSeparabilityTolerance;
    const bool strict = verdict.boundary_distance > verdict.threshold;
    if (separable) {
        verdict.classification = strict ? QspClassification::strictly_separable : QspClassification::almost_separable;
    } else {
        verdict.classification = strict ? QspClassification::strictly_entangled : QspClassification::almost_entangled;
    }
    return verdict;
}

}  // namespace gsep
