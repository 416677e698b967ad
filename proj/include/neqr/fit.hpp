#pragma once

#include <span>
#include <vector>

namespace neqr {

// GrowthExp: f(m) = b^m + c, params {b, c}.
// DecayExp:  f(m) = sign * b^(-(c*m - d)) + e, params {b, c, d, e}; sign is
// +1 or -1 (the rate curves use +1, the ratio-percent curve rises toward its
// asymptote from below with sign -1).
enum class FitFamily { GrowthExp, DecayExp };

struct FitModel {
    FitFamily family = FitFamily::GrowthExp;
    std::vector<double> params;
    double amplitude_sign = 1.0;
};

double model_eval(const FitModel& model, double m);

struct FitPoint {
    double m = 0.0;
    double y = 0.0;
};

struct FitResult {
    FitModel model;
    double residual_sum_squares = 0.0;
    unsigned iterations = 0;
    bool converged = false;
};

// Family defaults: GrowthExp {1.5, 0}; DecayExp {1.5, 0.5, 0, y at largest m}.
std::vector<double> default_initial(FitFamily family, std::span<const FitPoint> points);

// Levenberg-Marquardt least squares. Jacobian by central differences with
// step 1e-6 * max(|p|, 1); damping starts at 1e-3, x10 on a rejected step,
// /10 on an accepted one; stops when the relative cost decrease drops below
// 1e-10 or after 200 iterations. Steps leaving the family's valid region
// (GrowthExp b > 1; DecayExp b > 1, c > 0) are rejected. Points are sorted
// internally, so the result is independent of input order.
FitResult fit(std::span<const FitPoint> points, FitFamily family,
              std::span<const double> initial_params, double amplitude_sign = 1.0);

} // namespace neqr
