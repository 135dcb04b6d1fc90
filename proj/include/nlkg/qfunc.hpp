#pragma once

#include <complex>

namespace nlkg {

using Complex = std::complex<double>;

// |q - 1| below this is treated as the undeformed exponential.
inline constexpr double kStandardQTolerance = 1e-12;

[[nodiscard]] inline bool is_standard_q(double q) noexcept {
    return q - 1.0 < kStandardQTolerance && 1.0 - q < kStandardQTolerance;
}

// Principal-branch power exp(exponent * Log(base)), Im Log in (-pi, pi].
// Integer real exponents use repeated multiplication so that i^2 == -1 exactly.
// Throws PoleError for 0^w with Re w < 0, DomainError for 0^(i y), y != 0.
[[nodiscard]] Complex complex_pow(Complex base, Complex exponent);

// Tsallis q-exponential [1 + (1-q) z]^(1/(1-q)) continued to complex z with
// the principal power; exp(z) when q is standard.
[[nodiscard]] Complex q_exp(Complex z, double q);

// e_q(z)^r evaluated as the single principal power [1 + (1-q) z]^(r/(1-q)).
// Products of such powers at the same z combine exponents exactly, which is
// what keeps the field algebra on one sheet along a travelling wave.
[[nodiscard]] Complex q_exp_power(Complex z, double q, double r);

// n-th z-derivative of e_q(z)^r from d/dz e_q^s = s e_q^(s + q - 1).
[[nodiscard]] Complex q_exp_power_deriv(Complex z, double q, double r, unsigned n);

}  // namespace nlkg
