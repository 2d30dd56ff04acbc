#include "gsep/separability.hpp"

#include "gsep/error.hpp"
#include "gsep/parallel.hpp"
#include "gsep/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>

namespace gsep {

namespace {

const Vector4 kPartialTransposeDiagonal(1.0, 1.0, 1.0, -1.0);

double sum_margin(const Matrix4 &v, const WitnessCoefficients &w) {
    const Vector4 u = w.u_vector();
    const Vector4 s = w.v_vector();
    const double lhs = u.dot(v * u) + s.dot(v * s);
    return lhs - (std::abs(w.mode1_commutator()) + std::abs(w.mode2_commutator()));
}

WitnessCoefficients unpack(const Vector &w) {
    WitnessCoefficients c;
    for (int k = 0; k < 4; ++k) {
        c.a[static_cast<std::size_t>(k)] = w(k);
        c.b[static_cast<std::size_t>(k)] = w(k + 4);
    }
    return c;
}

Vector pack(const WitnessCoefficients &c) {
    Vector w(8);
    for (int k = 0; k < 4; ++k) {
        w(k) = c.a[static_cast<std::size_t>(k)];
        w(k + 4) = c.b[static_cast<std::size_t>(k)];
    }
    return w;
}

// Both conditions are homogeneous of degree two, so the search runs on the unit sphere.
double sphere_margin(const Matrix4 &v, const Vector &w) {
    const double n = w.norm();
    if (!(n > 1e-150)) {
        return 1.0;
    }
    return sum_margin(v, unpack(w / n));
}

// Eigenvector z = x + i y of the negative eigenvalue of the partially
// transposed K yields u = Lambda x, v = Lambda y with sum margin <= lambda |z|^2.
std::optional<Vector> eigenvector_start(const Matrix4 &v) {
    const Matrix4 lambda = kPartialTransposeDiagonal.asDiagonal();
    const Matrix4 vt = lambda * v * lambda;
    const SymplecticForm omega(2);
    const ComplexMatrix k =
        Matrix(vt).cast<std::complex<double>>() + std::complex<double>(0.0, 0.5) * omega.matrix().cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(k);
    if (!(solver.eigenvalues()(0) < 0.0)) {
        return std::nullopt;
    }
    const Eigen::VectorXcd z = solver.eigenvectors().col(0);
    const Vector4 x = lambda * Vector4(z.real());
    const Vector4 y = lambda * Vector4(z.imag());
    return pack(WitnessCoefficients::from_vectors(x, y));
}

std::vector<Vector> witness_starts(const Matrix4 &v, const WitnessSearchOptions &options) {
    std::vector<Vector> starts;
    starts.reserve(static_cast<std::size_t>(options.starts));
    if (auto eig = eigenvector_start(v)) {
        starts.push_back(*eig);
    }
    // EPR-type patterns: u = q1 +- q2, v = p1 +- p2 and the same with q <-> p.
    for (int swap = 0; swap < 2; ++swap) {
        for (int s1 = -1; s1 <= 1; s1 += 2) {
            for (int s2 = -1; s2 <= 1; s2 += 2) {
                WitnessCoefficients c;
                const std::size_t off = swap == 0 ? 0 : 2;
                c.a[off] = 1.0;
                c.a[off + 1] = s1;
                c.b[off] = 1.0;
                c.b[off + 1] = s2;
                starts.push_back(pack(c));
            }
        }
    }
    for (std::size_t i = starts.size(); i < static_cast<std::size_t>(options.starts); ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal;
        Vector w(8);
        for (int k = 0; k < 8; ++k) {
            w(k) = normal(rng);
        }
        starts.push_back(w);
    }
    starts.resize(static_cast<std::size_t>(options.starts));
    for (auto &w : starts) {
        w.normalize();
    }
    return starts;
}

}  // namespace

bool WitnessCoefficients::is_valid() const {
    const auto nonzero = [](double x) { return x != 0.0 && std::isfinite(x); };
    return std::any_of(a.begin(), a.end(), nonzero) && std::any_of(b.begin(), b.end(), nonzero);
}

WitnessCoefficients WitnessCoefficients::rescaled(double t) const {
    WitnessCoefficients out = *this;
    for (auto &x : out.a) {
        x *= t;
    }
    for (auto &x : out.b) {
        x /= t;
    }
    return out;
}

WitnessCoefficients WitnessCoefficients::from_vectors(const Vector4 &u, const Vector4 &v) {
    WitnessCoefficients c;
    c.a = {u(0), u(2), u(1), u(3)};
    c.b = {v(1), v(3), v(0), v(2)};
    return c;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix &v) {
    require_modes(v, 2, "partial_transpose");
    const Matrix4 lambda = kPartialTransposeDiagonal.asDiagonal();
    return CovarianceMatrix::from_congruence(lambda * v.two_mode() * lambda);
}

double f_functional(const SymplecticInvariants &inv) {
    const double t = 0.25 - std::abs(inv.det_c);
    return inv.det_a * inv.det_b + t * t - inv.cross_trace - 0.25 * (inv.det_a + inv.det_b);
}

double f_functional(const CovarianceMatrix &v) { return f_functional(invariants(v)); }

double boundary_function(double a, double b, double c, double d) {
    return 4.0 * (a * b - c * c) * (a * b - d * d) - (a * a + b * b) - 2.0 * std::abs(c * d) + 0.25;
}

double pt_min_eigenvalue(const CovarianceMatrix &v) {
    const CovarianceMatrix vt = partial_transpose(v);
    return is_physical(vt).min_eigenvalue;
}

SeparabilityVerdict decide(const CovarianceMatrix &v, const DecideOptions &options) {
    require_modes(v, 2, "decide");
    require_physical(v, "decide");
    SeparabilityVerdict verdict;
    verdict.f_value = f_functional(v);
    verdict.pt_min_eigenvalue = pt_min_eigenvalue(v);
    verdict.classification =
        verdict.f_value >= -kSeparabilityTolerance ? Classification::separable : Classification::entangled;
    if (verdict.classification == Classification::entangled && options.attach_witness) {
        verdict.witness = witness_search(v, options.witness);
    }
    return verdict;
}

double variance_of(const CovarianceMatrix &v, const Vector &coeff) {
    if (coeff.size() != v.dimension()) {
        throw Error(ErrorKind::dimension, "variance_of: coefficient vector must have dimension 2N");
    }
    return coeff.dot(v.matrix() * coeff);
}

namespace {

void check_witness_inputs(const CovarianceMatrix &v, const WitnessCoefficients &w, const char *operation) {
    require_modes(v, 2, operation);
    require_physical(v, operation);
    if (!w.is_valid()) {
        throw Error(ErrorKind::parameter, std::string(operation) + ": witness needs a nonzero a_j and a nonzero b_j");
    }
}

}  // namespace

ProductConditionReport product_condition(const CovarianceMatrix &v, const WitnessCoefficients &w) {
    check_witness_inputs(v, w, "product_condition");
    const Matrix4 m = v.two_mode();
    const Vector4 u = w.u_vector();
    const Vector4 s = w.v_vector();
    const double local = std::abs(w.mode1_commutator()) + std::abs(w.mode2_commutator());
    const double global = std::abs(w.mode1_commutator() + w.mode2_commutator());

    ProductConditionReport report;
    report.lhs = u.dot(m * u) * s.dot(m * s);
    report.separable_bound = 0.25 * local * local;
    report.uncertainty_bound = 0.25 * global * global;
    report.violated = report.lhs < report.separable_bound - kSeparabilityTolerance;
    return report;
}

SumConditionReport sum_condition(const CovarianceMatrix &v, const WitnessCoefficients &w) {
    check_witness_inputs(v, w, "sum_condition");
    const Matrix4 m = v.two_mode();
    const Vector4 u = w.u_vector();
    const Vector4 s = w.v_vector();

    SumConditionReport report;
    report.lhs = u.dot(m * u) + s.dot(m * s);
    report.separable_bound = std::abs(w.mode1_commutator()) + std::abs(w.mode2_commutator());
    report.violated = report.lhs < report.separable_bound - kSeparabilityTolerance;
    return report;
}

std::optional<WitnessCoefficients> witness_search(const CovarianceMatrix &v, const WitnessSearchOptions &options) {
    require_modes(v, 2, "witness_search");
    require_physical(v, "witness_search");
    if (options.starts < 1) {
        return std::nullopt;
    }
    const Matrix4 m = v.two_mode();
    const std::vector<Vector> starts = witness_starts(m, options);

    SimplexOptions simplex;
    simplex.max_iterations = options.iterations;
    simplex.initial_step = 0.1;
    simplex.size_tolerance = 1e-10;
    const auto objective = [&m](const Vector &w) { return sphere_margin(m, w); };

    struct Candidate {
        Vector w;
        double margin;
    };
    const std::vector<Candidate> results = indexed_map(
        static_cast<int>(starts.size()),
        [&](int i) {
            const auto &start = starts[static_cast<std::size_t>(i)];
            const double initial = objective(start);
            SimplexResult r = minimize_simplex(objective, start, simplex);
            if (initial <= r.value) {
                return Candidate{start, initial};
            }
            return Candidate{r.x, r.value};
        },
        Execution::parallel);

    // Lowest margin wins; ties go to the lower start index.
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].margin < results[best].margin) {
            best = i;
        }
    }
    if (!(results[best].margin < -kSeparabilityTolerance)) {
        return std::nullopt;
    }
    const Vector w = results[best].w / results[best].w.norm();
    WitnessCoefficients certificate = unpack(w);
    if (!certificate.is_valid() || !sum_condition(v, certificate).violated) {
        return std::nullopt;
    }
    return certificate;
}

}  // namespace gsep
