#include "gsep/simplex.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <cmath>
#include <deque>
#include <memory>
#include <mutex>

namespace gsep {

namespace {

constexpr double kNonFiniteValue = 1e300;

struct Callback {
    const std::function<double(const Vector &)> *objective;
    Vector scratch;
    int evaluations = 0;
};

double trampoline(const gsl_vector *x, void *params) {
    auto *cb = static_cast<Callback *>(params);
    for (Eigen::Index i = 0; i < cb->scratch.size(); ++i) {
        cb->scratch(i) = gsl_vector_get(x, static_cast<std::size_t>(i));
    }
    ++cb->evaluations;
    const double value = (*cb->objective)(cb->scratch);
    return std::isfinite(value) ? value : kNonFiniteValue;
}

struct VectorDeleter {
    void operator()(gsl_vector *v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
    void operator()(gsl_multimin_fminimizer *m) const { gsl_multimin_fminimizer_free(m); }
};

void disable_gsl_abort() {
    static std::once_flag flag;
    std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

}  // namespace

SimplexResult minimize_simplex(const std::function<double(const Vector &)> &objective, const Vector &start,
                               const SimplexOptions &options) {
    disable_gsl_abort();
    const auto n = static_cast<std::size_t>(start.size());
    Callback cb{&objective, start, 0};

    SimplexResult result;
    result.x = start;
    if (n == 0) {
        result.value = objective(start);
        result.evaluations = 1;
        result.converged = true;
        return result;
    }

    std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
    std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(n));
    for (std::size_t i = 0; i < n; ++i) {
        gsl_vector_set(x.get(), i, start(static_cast<Eigen::Index>(i)));
    }
    gsl_vector_set_all(step.get(), options.initial_step);

    gsl_multimin_function fn;
    fn.n = n;
    fn.f = &trampoline;
    fn.params = &cb;

    std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> minimizer(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
    gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), step.get());

    std::deque<double> history;
    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        if (options.max_evaluations > 0 && cb.evaluations >= options.max_evaluations) {
            break;
        }
        if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) {
            break;
        }
        const double size = gsl_multimin_fminimizer_size(minimizer.get());
        if (gsl_multimin_test_size(size, options.size_tolerance) == GSL_SUCCESS) {
            result.converged = true;
            ++iter;
            break;
        }
        if (options.stall_window > 0) {
            history.push_back(minimizer->fval);
            if (static_cast<int>(history.size()) > options.stall_window) {
                history.pop_front();
                if (std::abs(history.front() - history.back()) < options.stall_tolerance) {
                    result.converged = true;
                    ++iter;
                    break;
                }
            }
        }
    }

    const gsl_vector *best = gsl_multimin_fminimizer_x(minimizer.get());
    for (std::size_t i = 0; i < n; ++i) {
        result.x(static_cast<Eigen::Index>(i)) = gsl_vector_get(best, i);
    }
    result.value = gsl_multimin_fminimizer_minimum(minimizer.get());
    result.iterations = iter;
    result.evaluations = cb.evaluations;
    return result;
}

}  // namespace gsep
