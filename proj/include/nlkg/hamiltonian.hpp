#pragma once

#include <span>
#include <vector>

#include "nlkg/params.hpp"
#include "nlkg/waveforms.hpp"

namespace nlkg {

// Case I density in momentum form, Pi = alpha Phi^(alpha-1) dPhi/dt:
//   Pi^2 Phi^(1-alpha)/(2 alpha) + (alpha/2) Phi^(alpha-1) Phi_x^2
//   + alpha theta b^2/(alpha+1) m^2 Phi^(alpha+1)
// Requires a Lagrangian-consistent Case I set.
[[nodiscard]] double hamiltonian_density_real1(double phi, double dphi_dt, double dphi_dx,
                                               const ModelParams& p);

// Complex-class density (momentum form) of the closed-form pair (Phi1, Phi2),
// including the complex-conjugate terms, i.e. 2 Re H. Not renormalized.
[[nodiscard]] double hamiltonian_density_complex(const ModelParams& p, const WaveVector& w,
                                                 double kappa1, double kappa2,
                                                 std::span<const double> x, double t,
                                                 double c2 = 1.0);

// Field values and first derivatives of the Case II pair at one point.
struct Case2Fields {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double dphi1_dt = 0.0;
    double dphi2_dt = 0.0;
    std::vector<double> grad_phi1;
    std::vector<double> grad_phi2;
};

[[nodiscard]] Case2Fields case2_fields(const ModelParams& p, const WaveVector& w, double chi1,
                                       double chi2, std::span<const double> x, double t,
                                       double c2 = 1.0);

// Case II density in momentum form with coupling c^(2/theta) theta b^2 m^beta.
[[nodiscard]] double hamiltonian_density_real2(const Case2Fields& f, const ModelParams& p);

}  // namespace nlkg
