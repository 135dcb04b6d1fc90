#include "nlkg/qfunc.hpp"

#include <cmath>

#include "nlkg/errors.hpp"

namespace nlkg {
namespace {

constexpr double kMaxIntegerExponent = 64.0;

Complex integer_pow(Complex base, long n) {
    const bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Complex result{1.0, 0.0};
    while (e != 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1;
    }
    return invert ? Complex{1.0, 0.0} / result : result;
}

// Denominator of the q-exponential exponent; caller guarantees q is deformed.
double one_minus(double q) { return 1.0 - q; }

}  // namespace

Complex complex_pow(Complex base, Complex exponent) {
    if (base == Complex{0.0, 0.0}) {
        if (exponent.real() > 0.0) return {0.0, 0.0};
        if (exponent.real() < 0.0) throw PoleError("complex_pow: zero base with negative exponent");
        if (exponent.imag() != 0.0) throw DomainError("complex_pow: 0^(iy) is undefined");
        return {1.0, 0.0};
    }
    if (exponent.imag() == 0.0) {
        const double r = exponent.real();
        if (std::abs(r) <= kMaxIntegerExponent && r == std::trunc(r)) {
            return integer_pow(base, static_cast<long>(r));
        }
        if (base.imag() == 0.0 && base.real() > 0.0) return {std::pow(base.real(), r), 0.0};
    }
    // -0.0 imaginary parts would put Log on the -pi side of the cut.
    if (base.imag() == 0.0) base = Complex{base.real(), 0.0};
    return std::exp(exponent * std::log(base));
}

Complex q_exp(Complex z, double q) {
    return q_exp_power(z, q, 1.0);
}

Complex q_exp_power(Complex z, double q, double r) {
    if (r == 0.0) return {1.0, 0.0};
    if (is_standard_q(q)) return std::exp(r * z);
    const Complex base = 1.0 + one_minus(q) * z;
    const double exponent = r / one_minus(q);
    if (base == Complex{0.0, 0.0} && exponent < 0.0) {
        throw PoleError("q_exp: pole at z = 1/(q-1)");
    }
    return complex_pow(base, exponent);
}

Complex q_exp_power_deriv(Complex z, double q, double r, unsigned n) {
    const double shift = is_standard_q(q) ? 0.0 : q - 1.0;
    double coefficient = 1.0;
    double power = r;
    for (unsigned j = 0; j < n; ++j) {
        coefficient *= power;
        power += shift;
    }
    if (coefficient == 0.0) return {0.0, 0.0};
    return coefficient * q_exp_power(z, q, power);
}

}  // namespace nlkg
