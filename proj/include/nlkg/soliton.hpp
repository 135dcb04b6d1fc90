#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlkg/hamiltonian.hpp"
#include "nlkg/params.hpp"

namespace nlkg {

// Complex-class subclass carrying the Lorentzian soliton:
// a1 = alpha(1-q) - alpha^2, |kappa2| = 1/(omega^2 + k^2) with
// sgn(kappa2) = sgn(alpha) sgn(1-q), and lambda chosen to cancel the
// kappa1 sector of the energy density.
struct SolitonSetup {
    ModelParams params;  // complex class; params.c is c1
    WaveVector wave;     // one spatial dimension
    double kappa1 = 1.0;
    double kappa2 = 0.0;
    double lambda = 0.0;
    double c2 = 1.0;

    [[nodiscard]] double alpha() const noexcept { return params.alpha; }
    [[nodiscard]] double q() const noexcept { return params.q; }
    [[nodiscard]] double a1() const noexcept { return params.a1; }
};

// ConstraintError for q = 1, alpha = 0, omega = k = 0 or a multi-dimensional k.
[[nodiscard]] SolitonSetup make_soliton_setup(double alpha, double q, const WaveVector& w,
                                              double c1 = 1.0, double c2 = 1.0,
                                              int nu = kDefaultSpacetimeDimension,
                                              double kappa1 = 1.0);

// -[(a1 - alpha r1)(omega^2 + k^2) + (alpha q + a1 + alpha(alpha-1)) m^2]
[[nodiscard]] double renormalization_lambda(const ModelParams& p, const WaveVector& w);

// c1^alpha c2 m^(delta(alpha+1)); divides every density below.
[[nodiscard]] double density_normalization(const SolitonSetup& s);

// 2|q-1||alpha| / (1 + (1-q)^2 zhat^2)
[[nodiscard]] double density_closed_form(const SolitonSetup& s, double zhat);

// Renormalized density assembled from the field samplers:
// 2 Re H / normalization + 2 Re[lambda (kappa1 e_q^D1 + kappa2 e_q^D2)].
[[nodiscard]] double density_from_hamiltonian(const SolitonSetup& s, double x, double t);

enum class EnergyMethod { ClosedForm, AdaptiveQuadrature };

// Integral of the density over zhat. ClosedForm gives 2|alpha| pi.
[[nodiscard]] double soliton_energy(const SolitonSetup& s, EnergyMethod method);

struct PeakSample {
    double t = 0.0;
    double height = 0.0;
    std::optional<double> position;  // empty when the profile does not move (k = 0)
    bool stationary = false;
};

// Locates the density maximum in x at each time: coarse scan over
// [-half_width, half_width] followed by golden-section refinement.
[[nodiscard]] std::vector<PeakSample> peak_trajectory(const SolitonSetup& s,
                                                      std::span<const double> times,
                                                      double half_width = 50.0);

struct DensityProfile {
    std::vector<double> zhat;
    std::vector<double> density;
};

// Closed-form profile on zhat = i/per_unit for |zhat| <= zhat_max.
[[nodiscard]] DensityProfile density_profile(const SolitonSetup& s, double zhat_max = 10.0,
                                             int per_unit = 100);

void write_profile_csv(std::ostream& out, const DensityProfile& profile);

// Line plot in the layout of the published figure (zhat horizontal,
// normalized density vertical). The exact series is embedded in the
// polyline's data-zhat / data-density attributes.
void write_profile_svg(std::ostream& out, const DensityProfile& profile, std::string_view title);
[[nodiscard]] DensityProfile read_svg_series(std::string_view svg);

}  // namespace nlkg
