#include "nlkg/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "nlkg/errors.hpp"

namespace nlkg {
namespace {

// Beyond |t| = 4.5 the abscissae exceed 1e30 and any integrand decaying at
// least like 1/x^2 contributes below double precision.
constexpr double kTMax = 4.5;
constexpr double kInitialStep = 0.5;
constexpr int kMinLevels = 2;

}  // namespace

QuadratureResult integrate_real_line(const std::function<double(double)>& f, double scale,
                                     double rel_tol, int max_levels) {
    if (!(scale > 0.0)) throw NumericalError("integrate_real_line: scale must be positive");
    constexpr double half_pi = std::numbers::pi / 2.0;
    QuadratureResult result;

    auto term = [&](double t) {
        const double s = half_pi * std::sinh(t);
        const double x = scale * std::sinh(s);
        const double weight = scale * half_pi * std::cosh(t) * std::cosh(s);
        ++result.evaluations;
        const double v = f(x) * weight;
        if (!std::isfinite(v)) throw NumericalError("integrate_real_line: non-finite integrand");
        return v;
    };

    double h = kInitialStep;
    double sum = term(0.0);
    for (int j = 1; j * h <= kTMax; ++j) sum += term(j * h) + term(-j * h);
    double estimate = h * sum;

    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        for (int j = 1; j * h <= kTMax; j += 2) sum += term(j * h) + term(-j * h);
        const double next = h * sum;
        result.last_change = std::abs(next - estimate);
        result.levels = level;
        estimate = next;
        if (level >= kMinLevels && result.last_change <= rel_tol * std::abs(estimate)) {
            result.value = estimate;
            return result;
        }
    }
    throw NumericalError("integrate_real_line: no convergence");
}

}  // namespace nlkg
