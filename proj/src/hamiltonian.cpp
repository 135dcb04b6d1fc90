#include "nlkg/hamiltonian.hpp"

#include <cmath>

#include "nlkg/errors.hpp"

namespace nlkg {

double hamiltonian_density_real1(double phi, double dphi_dt, double dphi_dx, const ModelParams& p) {
    if (p.model != ModelClass::RealCaseI || !p.lagrangian) {
        throw ConstraintError("hamiltonian_density_real1: Lagrangian Case I parameters required");
    }
    const double a = p.alpha;
    const double momentum = a * std::pow(phi, a - 1.0) * dphi_dt;
    return std::pow(phi, 1.0 - a) * momentum * momentum / (2.0 * a) +
           0.5 * a * std::pow(phi, a - 1.0) * dphi_dx * dphi_dx +
           a * p.theta * p.b * p.b / (a + 1.0) * p.m * p.m * std::pow(phi, a + 1.0);
}

double hamiltonian_density_complex(const ModelParams& p, const WaveVector& w, double kappa1,
                                   double kappa2, std::span<const double> x, double t, double c2) {
    if (p.is_real()) throw ConstraintError("hamiltonian_density_complex: complex parameters required");
    const double a = p.alpha;
    const auto phi1 = FieldSolution::phi1(p, w);
    const auto phi2 = FieldSolution::phi2_complex(p, w, kappa1, kappa2, c2);
    const Complex z{0.0, phase(w, x, t)};
    const Complex iu{0.0, 1.0};

    const double amp1 = p.c * std::pow(p.m, p.delta);
    const double amp2 = c2 * std::pow(p.m, p.delta);
    const auto r = exponent_pair(a, p.q, p.a1);

    const Complex f2 = phi2(x, t);
    const Complex dz1 = amp1 * q_exp_power_deriv(z, p.q, 1.0, 1);
    Complex dz2{0.0, 0.0};
    if (kappa1 != 0.0) dz2 += kappa1 * q_exp_power_deriv(z, p.q, r.r1, 1);
    if (kappa2 != 0.0) dz2 += kappa2 * q_exp_power_deriv(z, p.q, r.r2, 1);
    dz2 *= amp2;

    // d/dt = i omega d/dz, grad = -i k d/dz, so grad A . grad B = -|k|^2 A' B'.
    const Complex dot1 = iu * w.omega * dz1;
    const Complex dot2 = iu * w.omega * dz2;
    const double k2 = w.k_squared();
    const Complex grad12 = -k2 * dz1 * dz2;
    const Complex grad11 = -k2 * dz1 * dz1;

    const Complex pow_am1 = phi1.power(x, t, a - 1.0);
    const Complex pow_am2 = phi1.power(x, t, a - 2.0);
    const Complex pi1 = a * pow_am1 * dot2 - 2.0 * p.a1 * pow_am2 * f2 * dot1;
    const Complex pi2 = a * pow_am1 * dot1;

    const Complex h = phi1.power(x, t, 1.0 - a) * pi1 * pi2 / a +
                      p.a1 / (a * a) * phi1.power(x, t, -a) * f2 * pi2 * pi2 +
                      a * pow_am1 * grad12 - p.a1 * pow_am2 * f2 * grad11 +
                      p.a2 * std::pow(p.m, p.beta) * phi1.power(x, t, p.gamma) * f2;
    return 2.0 * h.real();
}

Case2Fields case2_fields(const ModelParams& p, const WaveVector& w, double chi1, double chi2,
                         std::span<const double> x, double t, double c2) {
    if (p.model != ModelClass::RealCaseII) throw ConstraintError("case2_fields: Case II parameters required");
    const double z = phase(w, x, t);
    const double md = std::pow(p.m, p.delta);
    const auto f = real_profile_jet(p, Branch::Cos, z);
    const auto g = case2_aux_jet(p, chi1, chi2, z);
    Case2Fields out;
    out.phi1 = p.c * md * f.value;
    out.phi2 = c2 * md * g.value;
    out.dphi1_dt = p.c * md * f.d1 * w.omega;
    out.dphi2_dt = c2 * md * g.d1 * w.omega;
    for (double kj : w.k) {
        out.grad_phi1.push_back(-p.c * md * f.d1 * kj);
        out.grad_phi2.push_back(-c2 * md * g.d1 * kj);
    }
    return out;
}

double hamiltonian_density_real2(const Case2Fields& f, const ModelParams& p) {
    if (p.model != ModelClass::RealCaseII) {
        throw ConstraintError("hamiltonian_density_real2: Case II parameters required");
    }
    if (f.grad_phi1.size() != f.grad_phi2.size()) throw DomainError("gradient dimensions differ");
    const double a = p.alpha;
    const double coupling = std::pow(p.c, 2.0 / p.theta) * p.theta * p.b * p.b * std::pow(p.m, p.beta);
    const double pi1 = std::pow(f.phi1, a - 1.0) * f.dphi2_dt + 2.0 * a * std::pow(f.phi1, a - 2.0) * f.phi2 * f.dphi1_dt;
    const double pi2 = std::pow(f.phi1, a - 1.0) * f.dphi1_dt;
    double grad12 = 0.0;
    double grad11 = 0.0;
    for (std::size_t j = 0; j < f.grad_phi1.size(); ++j) {
        grad12 += f.grad_phi1[j] * f.grad_phi2[j];
        grad11 += f.grad_phi1[j] * f.grad_phi1[j];
    }
    return std::pow(f.phi1, 1.0 - a) * pi1 * pi2 - a * f.phi2 * std::pow(f.phi1, -a) * pi2 * pi2 +
           std::pow(f.phi1, a - 1.0) * grad12 + a * std::pow(f.phi1, a - 2.0) * grad11 * f.phi2 +
           coupling * f.phi2 * std::pow(f.phi1, p.gamma);
}

}  // namespace nlkg
