#pragma once

#include <cstddef>
#include <functional>

namespace nlkg {

struct QuadratureResult {
    double value = 0.0;
    double last_change = 0.0;  // |I_h - I_2h|
    int levels = 0;
    std::size_t evaluations = 0;
};

// Double-exponential (sinh-sinh) quadrature over the whole real line,
// x = scale * sinh(pi/2 sinh t), trapezoid in t with step halving until the
// relative change drops below rel_tol. Throws NumericalError otherwise.
[[nodiscard]] QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                                   double scale = 1.0, double rel_tol = 1e-9,
                                                   int max_levels = 12);

}  // namespace nlkg
