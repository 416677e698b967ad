#include "neqr/fit.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include "neqr/error.hpp"

namespace neqr {

namespace {

size_t param_count(FitFamily family) { return family == FitFamily::GrowthExp ? 2 : 4; }

bool in_valid_region(FitFamily family, std::span<const double> p) {
    if (family == FitFamily::GrowthExp) {
        return p[0] > 1.0;
    }
    return p[0] > 1.0 && p[1] > 0.0;
}

// Solves A x = rhs in place by Gaussian elimination with partial pivoting.
// A is k x k row-major. Returns false when a pivot vanishes.
bool solve_dense(std::vector<double>& a, std::vector<double>& rhs, size_t k) {
    for (size_t col = 0; col < k; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < k; ++r) {
            if (std::fabs(a[r * k + col]) > std::fabs(a[pivot * k + col])) {
                pivot = r;
            }
        }
        if (a[pivot * k + col] == 0.0) {
            return false;
        }
        if (pivot != col) {
            for (size_t c = 0; c < k; ++c) {
                std::swap(a[pivot * k + c], a[col * k + c]);
            }
            std::swap(rhs[pivot], rhs[col]);
        }
        for (size_t r = col + 1; r < k; ++r) {
            const double factor = a[r * k + col] / a[col * k + col];
            for (size_t c = col; c < k; ++c) {
                a[r * k + c] -= factor * a[col * k + c];
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    for (size_t col = k; col-- > 0;) {
        double sum = rhs[col];
        for (size_t c = col + 1; c < k; ++c) {
            sum -= a[col * k + c] * rhs[c];
        }
        rhs[col] = sum / a[col * k + col];
    }
    return true;
}

double cost_of(const FitModel& model, std::span<const FitPoint> points) {
    double cost = 0.0;
    for (const FitPoint& pt : points) {
        const double r = pt.y - model_eval(model, pt.m);
        cost += r * r;
    }
    return cost;
}

} // namespace

double model_eval(const FitModel& model, double m) {
    const std::span<const double> p = model.params;
    if (p.size() != param_count(model.family)) {
        raise(ErrorKind::InvalidParams, "expected " + std::to_string(param_count(model.family)) +
                                            " params, got " + std::to_string(p.size()));
    }
    if (!(p[0] > 0.0)) {
        raise(ErrorKind::InvalidParams, "base must be positive, got " + std::to_string(p[0]));
    }
    if (model.family == FitFamily::GrowthExp) {
        return std::pow(p[0], m) + p[1];
    }
    return model.amplitude_sign * std::pow(p[0], -(p[1] * m - p[2])) + p[3];
}

std::vector<double> default_initial(FitFamily family, std::span<const FitPoint> points) {
    if (family == FitFamily::GrowthExp) {
        return {1.5, 0.0};
    }
    double asymptote = 0.0;
    double best_m = -std::numeric_limits<double>::infinity();
    for (const FitPoint& pt : points) {
        if (pt.m >= best_m) {
            best_m = pt.m;
            asymptote = pt.y;
        }
    }
    return {1.5, 0.5, 0.0, asymptote};
}

FitResult fit(std::span<const FitPoint> points, FitFamily family,
              std::span<const double> initial_params, double amplitude_sign) {
    const size_t k = param_count(family);
    if (points.size() < k + 1) {
        raise(ErrorKind::InsufficientPoints, std::to_string(points.size()) + " points for " +
                                                 std::to_string(k) + " parameters");
    }
    for (const FitPoint& pt : points) {
        if (!std::isfinite(pt.m) || !std::isfinite(pt.y)) {
            raise(ErrorKind::NonFiniteInput, "point (" + std::to_string(pt.m) + ", " +
                                                 std::to_string(pt.y) + ")");
        }
    }
    if (initial_params.size() != k) {
        raise(ErrorKind::InvalidParams, "expected " + std::to_string(k) + " initial params");
    }
    if (!in_valid_region(family, initial_params)) {
        raise(ErrorKind::InvalidParams, "initial params outside valid region");
    }

    // Canonical point order makes the result independent of caller order.
    std::vector<FitPoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](const FitPoint& a, const FitPoint& b) {
        return a.m != b.m ? a.m < b.m : a.y < b.y;
    });

    FitModel model{family, {initial_params.begin(), initial_params.end()}, amplitude_sign};
    double cost = cost_of(model, pts);
    if (!std::isfinite(cost)) {
        raise(ErrorKind::NonFiniteInput, "initial parameters give non-finite residuals");
    }

    const size_t npts = pts.size();
    std::vector<double> jac(npts * k);       // d f / d p
    std::vector<double> residual(npts);      // y - f
    std::vector<double> hessian(k * k);      // J^T J + lambda diag
    std::vector<double> gradient(k);         // J^T r
    double lambda = 1e-3;
    unsigned iterations = 0;
    bool converged = false;

    while (iterations < 200) {
        ++iterations;
#ifndef NDEBUG
        const double cost_before = cost;
#endif
        for (size_t i = 0; i < npts; ++i) {
            residual[i] = pts[i].y - model_eval(model, pts[i].m);
        }
        FitModel probe = model;
        for (size_t p = 0; p < k; ++p) {
            const double h = 1e-6 * std::max(std::fabs(model.params[p]), 1.0);
            probe.params[p] = model.params[p] + h;
            for (size_t i = 0; i < npts; ++i) {
                jac[i * k + p] = model_eval(probe, pts[i].m);
            }
            probe.params[p] = model.params[p] - h;
            for (size_t i = 0; i < npts; ++i) {
                jac[i * k + p] = (jac[i * k + p] - model_eval(probe, pts[i].m)) / (2.0 * h);
            }
            probe.params[p] = model.params[p];
        }

        // Step loop: inflate lambda until a step is accepted or damping
        // saturates.
        while (true) {
            for (size_t r = 0; r < k; ++r) {
                gradient[r] = 0.0;
                for (size_t i = 0; i < npts; ++i) {
                    gradient[r] += jac[i * k + r] * residual[i];
                }
                for (size_t c = 0; c < k; ++c) {
                    double sum = 0.0;
                    for (size_t i = 0; i < npts; ++i) {
                        sum += jac[i * k + r] * jac[i * k + c];
                    }
                    hessian[r * k + c] = sum;
                }
            }
            for (size_t d = 0; d < k; ++d) {
                hessian[d * k + d] *= 1.0 + lambda;
            }

            std::vector<double> lhs = hessian;
            std::vector<double> step = gradient;
            bool solved = solve_dense(lhs, step, k);

            FitModel trial = model;
            double new_cost = std::numeric_limits<double>::infinity();
            if (solved) {
                for (size_t p = 0; p < k; ++p) {
                    trial.params[p] = model.params[p] + step[p];
                }
                if (in_valid_region(family, trial.params)) {
                    new_cost = cost_of(trial, pts);
                }
            }

            if (new_cost <= cost) {
                const double decrease = (cost - new_cost) / std::max(cost, 1e-300);
                model = trial;
                cost = new_cost;
                lambda = std::max(lambda / 10.0, 1e-12);
                if (decrease < 1e-10) {
                    converged = true;
                }
                break;
            }
            lambda *= 10.0;
            if (lambda > 1e12) {
                raise(ErrorKind::SingularNormalEquations,
                      "damping saturated at lambda > 1e12 without progress");
            }
        }
        assert(cost <= cost_before);
        if (converged) {
            break;
        }
    }

    return FitResult{model, cost, iterations, converged};
}

} // namespace neqr
