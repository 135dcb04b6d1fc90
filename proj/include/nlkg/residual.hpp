#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlkg/waveforms.hpp"

namespace nlkg {

// One evaluation of a governing equation: the summed left-hand side and the
// magnitude of its largest term, so that near-zero fields do not pass trivially.
struct ResidualPoint {
    Complex residual{0.0, 0.0};
    double scale = 0.0;

    [[nodiscard]] double absolute() const noexcept { return std::abs(residual); }
    // 0 when every term vanishes.
    [[nodiscard]] double relative() const noexcept;
};

struct ResidualReport {
    std::string equation;
    std::vector<std::string> coordinates;     // e.g. {"x1","x2","x3","t"} or {"z"}
    std::vector<std::vector<double>> points;
    std::vector<double> residual_abs;
    std::vector<double> scale;
    std::vector<double> residual_rel;
    double max_rel = 0.0;

    void add(std::vector<double> point, const ResidualPoint& r);
};

// Signature used when contracting derivatives. MostlyPlus exists only to show
// that a wrong convention does not verify.
enum class Metric { MostlyMinus, MostlyPlus };

// Reduced travelling-wave equation sign. The complex class takes the minus
// branch of the reduction, the real classes the plus branch; Flipped swaps it.
enum class Reduction { Natural, Flipped };

inline constexpr std::size_t kDefaultSamplePoints = 50;

// 1e-3 over the largest frequency in the problem (b-scaled for real classes).
[[nodiscard]] double default_step(const FieldSolution& field);

// Left-hand side of the generalized field equation for Phi1 using 4th-order
// central differences in t and in every spatial coordinate. Phi^alpha is
// sampled and differenced directly. DomainError if a stencil point leaves the
// sampler's window.
[[nodiscard]] ResidualPoint pde_residual(const FieldSolution& phi1, std::span<const double> x,
                                         double t, double h, Metric metric = Metric::MostlyMinus);

// Reduced one-variable equation
//   a2 c^(gamma-alpha) f^(gamma-alpha+2) -+ [alpha f f'' + (a1 + alpha(alpha-1)) f'^2]
// with exact derivatives. z is the real phase; the complex class evaluates at i z.
[[nodiscard]] ResidualPoint travelwave_ode_residual(const ModelParams& p, Branch branch, double z,
                                                    Reduction reduction = Reduction::Natural);

// -alpha g'' + A e_q^(q-1) g' + B e_q^(2q-2) g with g = kappa1 e_q^r1 + kappa2 e_q^r2.
[[nodiscard]] ResidualPoint aux_residual_complex(const ModelParams& p, double kappa1, double kappa2,
                                                 double zhat);

// Case II auxiliary ODE for g(z) in its cos(bz) form.
[[nodiscard]] ResidualPoint aux_residual_real2(const ModelParams& p, double chi1, double chi2,
                                               double z);

// Reproducible Halton (bases 2, 3, 5) sample points inside the field's window.
[[nodiscard]] std::vector<SpacetimePoint> halton_points(const FieldSolution& field, std::size_t n);
// Halton phases z inside the reduced-equation window of the class.
[[nodiscard]] std::vector<double> halton_phases(const ModelParams& p, Branch branch, std::size_t n);

[[nodiscard]] ResidualReport verify_pde(const FieldSolution& phi1,
                                        std::size_t n_points = kDefaultSamplePoints,
                                        std::optional<double> h = std::nullopt);
[[nodiscard]] ResidualReport verify_travelwave(const ModelParams& p, Branch branch = Branch::Cos,
                                               std::size_t n_points = kDefaultSamplePoints);
[[nodiscard]] ResidualReport verify_aux_complex(const ModelParams& p, double kappa1, double kappa2,
                                                std::size_t n_points = kDefaultSamplePoints);
[[nodiscard]] ResidualReport verify_aux_real2(const ModelParams& p, double chi1, double chi2,
                                              std::size_t n_points = kDefaultSamplePoints);

[[nodiscard]] std::string to_json(const ResidualReport& report);
[[nodiscard]] ResidualReport report_from_json(const std::string& text);

}  // namespace nlkg
