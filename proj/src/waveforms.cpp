#include "nlkg/waveforms.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "nlkg/errors.hpp"
#include "nlkg/io.hpp"

namespace nlkg {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

bool is_integer(double v) { return v == std::trunc(v); }

double real_pow(double base, double s) {
    if (base > 0.0 || is_integer(s)) {
        if (base == 0.0 && s < 0.0) throw SingularityError("zero base raised to a negative power");
        return std::pow(base, s);
    }
    throw DomainError("fractional power of a non-positive profile value");
}

void require_class(const ModelParams& p, bool real, const char* who) {
    if (p.is_real() != real) {
        throw ConstraintError(std::string(who) + ": parameter set belongs to the wrong class");
    }
}

double trig_base(Branch branch, double u) { return branch == Branch::Cos ? std::cos(u) : std::sin(u); }

}  // namespace

ExponentPair exponent_pair(double alpha, double q, double a1) {
    if (alpha == 0.0) throw PoleError("exponent_pair: pole at alpha = 0");
    // Grouped so that alpha = 1, a1 = 0 gives (1 - 2q, q) without rounding.
    return {(1.0 - 2.0 * q) + (1.0 - alpha), q + (alpha - 1.0) + 2.0 * a1 / alpha};
}

ExponentDeltas exponent_deltas(double alpha, double q, double a1) {
    const auto r = exponent_pair(alpha, q, a1);
    return {r.r1 + 2.0 * q + alpha - 2.0, 3.0 * (q - 1.0) + 2.0 * (a1 / alpha) + 2.0 * alpha};
}

double phase(const WaveVector& w, std::span<const double> x, double t) {
    if (x.size() != w.k.size()) throw DomainError("phase: position and wave vector dimensions differ");
    double kx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) kx += w.k[i] * x[i];
    return w.omega * t - kx;
}

bool real_window_contains(const ModelParams& p, Branch branch, double z, bool fractional_only) {
    const double u = p.b * z;
    if (fractional_only && is_integer(p.theta)) {
        return p.theta >= 0.0 || trig_base(branch, u) != 0.0;
    }
    if (branch == Branch::Cos) return std::abs(u) < kHalfPi;
    return u > 0.0 && u < std::numbers::pi;
}

Jet<double> real_profile_jet(const ModelParams& p, Branch branch, double z) {
    require_class(p, true, "real_profile_jet");
    if (!real_window_contains(p, branch, z)) throw DomainError("real profile evaluated outside its window");
    const double u = p.b * z;
    const double th = p.theta;
    const double b2 = p.b * p.b;
    // Cos: f' = -theta b C^(theta-1) S. Sin swaps the roles and the sign.
    const double base = trig_base(branch, u);
    const double other = branch == Branch::Cos ? std::sin(u) : std::cos(u);
    const double sign = branch == Branch::Cos ? -1.0 : 1.0;

    Jet<double> f;
    f.value = real_pow(base, th);
    f.d1 = th == 0.0 ? 0.0 : sign * th * p.b * real_pow(base, th - 1.0) * other;
    f.d2 = -th * b2 * f.value;
    if (th * (th - 1.0) != 0.0) f.d2 += th * (th - 1.0) * b2 * real_pow(base, th - 2.0) * other * other;
    return f;
}

Jet<double> case2_aux_jet(const ModelParams& p, double chi1, double chi2, double z) {
    if (p.model != ModelClass::RealCaseII) throw ConstraintError("case2_aux_jet: Case II parameters required");
    const double u = p.b * z;
    if (!(std::abs(u) < kHalfPi)) throw DomainError("Case II auxiliary field outside |bz| < pi/2");
    const double C = std::cos(u);
    const double S = std::sin(u);
    if (S == 1.0 || C <= 0.0) throw SingularityError("Case II auxiliary field singular at sin(bz) = 1");
    const double n = p.alpha * p.theta;

    // g = P(u) h(u) with P = C^(-1-n); derivatives in u, rescaled by b below.
    const double P = std::pow(C, -1.0 - n);
    const double dP = (1.0 + n) * std::pow(C, -2.0 - n) * S;
    const double ddP = (1.0 + n) * ((2.0 + n) * std::pow(C, -3.0 - n) * S * S + P);

    const double A = std::atan(C / (-1.0 + S));
    const double dA = (S - 1.0) / ((S - 1.0) * (S - 1.0) + C * C);
    const double h = chi1 * S + chi2 * (C - 2.0 * S * A);
    const double dh = chi1 * C + chi2 * (-S - 2.0 * C * A - 2.0 * S * dA);
    // dA is constant on the window, so d2A = 0.
    const double ddh = -chi1 * S + chi2 * (-C + 2.0 * S * A - 4.0 * C * dA);

    Jet<double> g;
    g.value = P * h;
    g.d1 = p.b * (dP * h + P * dh);
    g.d2 = p.b * p.b * (ddP * h + 2.0 * dP * dh + P * ddh);
    return g;
}

Jet<Complex> complex_profile_jet(double q, double zhat) {
    const Complex z{0.0, zhat};
    return {q_exp(z, q), q_exp_power_deriv(z, q, 1.0, 1), q_exp_power_deriv(z, q, 1.0, 2)};
}

Complex phi1_complex(const ModelParams& p, const WaveVector& w, std::span<const double> x, double t) {
    require_class(p, false, "phi1_complex");
    const Complex z{0.0, phase(w, x, t)};
    return std::pow(p.m, p.delta) * p.c * q_exp(z, p.q);
}

Complex phi2_complex(const ModelParams& p, const WaveVector& w, double kappa1, double kappa2,
                     std::span<const double> x, double t, double c2) {
    require_class(p, false, "phi2_complex");
    const auto r = exponent_pair(p.alpha, p.q, p.a1);
    const Complex z{0.0, phase(w, x, t)};
    Complex g{0.0, 0.0};
    if (kappa1 != 0.0) g += kappa1 * q_exp_power(z, p.q, r.r1);
    if (kappa2 != 0.0) g += kappa2 * q_exp_power(z, p.q, r.r2);
    return c2 * std::pow(p.m, p.delta) * g;
}

double phi1_real(const ModelParams& p, const WaveVector& w, Branch branch, std::span<const double> x,
                 double t) {
    require_class(p, true, "phi1_real");
    const double z = phase(w, x, t);
    if (!real_window_contains(p, branch, z)) throw DomainError("phi1_real: outside the positivity window");
    return p.c * std::pow(p.m, p.delta) * real_pow(trig_base(branch, p.b * z), p.theta);
}

double phi2_real_case2(const ModelParams& p, const WaveVector& w, double chi1, double chi2,
                       std::span<const double> x, double t, double c2) {
    if (chi1 == 0.0 && chi2 == 0.0) return 0.0;
    return c2 * std::pow(p.m, p.delta) * case2_aux_jet(p, chi1, chi2, phase(w, x, t)).value;
}

FieldSolution::FieldSolution(ModelParams p, WaveVector w, FieldKind kind, Branch branch,
                             double coeff1, double coeff2, double c2)
    : params_(std::move(p)),
      wave_(std::move(w)),
      kind_(kind),
      branch_(branch),
      coeff1_(coeff1),
      coeff2_(coeff2),
      c2_(c2) {}

FieldSolution FieldSolution::phi1(ModelParams p, WaveVector w, Branch branch) {
    return {std::move(p), std::move(w), FieldKind::Phi1, branch, 0.0, 0.0, 1.0};
}

FieldSolution FieldSolution::phi2_complex(ModelParams p, WaveVector w, double kappa1, double kappa2,
                                          double c2) {
    require_class(p, false, "FieldSolution::phi2_complex");
    return {std::move(p), std::move(w), FieldKind::Phi2, Branch::Cos, kappa1, kappa2, c2};
}

FieldSolution FieldSolution::phi2_real(ModelParams p, WaveVector w, double chi1, double chi2,
                                       double c2) {
    if (p.model != ModelClass::RealCaseII) {
        throw ConstraintError("FieldSolution::phi2_real: Case II parameters required");
    }
    return {std::move(p), std::move(w), FieldKind::Phi2, Branch::Cos, chi1, chi2, c2};
}

Complex FieldSolution::operator()(std::span<const double> x, double t) const {
    if (kind_ == FieldKind::Phi1) {
        if (!params_.is_real()) return phi1_complex(params_, wave_, x, t);
        return phi1_real(params_, wave_, branch_, x, t);
    }
    if (!params_.is_real()) return nlkg::phi2_complex(params_, wave_, coeff1_, coeff2_, x, t, c2_);
    return phi2_real_case2(params_, wave_, coeff1_, coeff2_, x, t, c2_);
}

Complex FieldSolution::power(std::span<const double> x, double t, double s) const {
    if (kind_ == FieldKind::Phi2) return complex_pow((*this)(x, t), s);
    const double amplitude = std::pow(params_.c * std::pow(params_.m, params_.delta), s);
    const double z = phase(wave_, x, t);
    if (!params_.is_real()) return amplitude * q_exp_power(Complex{0.0, z}, params_.q, s);
    if (!real_window_contains(params_, branch_, z)) throw DomainError("power: outside the positivity window");
    return amplitude * real_pow(trig_base(branch_, params_.b * z), params_.theta * s);
}

bool FieldSolution::in_window(std::span<const double> x, double t) const {
    if (!params_.is_real()) return true;
    const double z = phase(wave_, x, t);
    return real_window_contains(params_, branch_, z, kind_ == FieldKind::Phi1);
}

void write_samples_csv(std::ostream& out, const FieldSolution& field,
                       std::span<const SpacetimePoint> points) {
    const std::size_t dim = field.wave().k.size();
    if (dim == 1) {
        out << "x";
    } else {
        for (std::size_t i = 0; i < dim; ++i) out << (i ? ",x" : "x") << (i + 1);
    }
    out << ",t,re,im\n";
    for (const auto& pt : points) {
        const Complex v = field(pt.x, pt.t);
        for (double xi : pt.x) out << io::format_17g(xi) << ',';
        out << io::format_17g(pt.t) << ',' << io::format_17g(v.real()) << ','
            << io::format_17g(v.imag()) << '\n';
    }
}

}  // namespace nlkg
