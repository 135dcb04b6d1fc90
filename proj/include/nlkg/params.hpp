#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nlkg {

enum class ModelClass { Complex, RealCaseI, RealCaseII };

[[nodiscard]] std::string_view to_string(ModelClass c) noexcept;
// Accepts "complex", "case1"/"real1", "case2"/"real2". Throws ConstraintError.
[[nodiscard]] ModelClass parse_model_class(std::string_view text);

// Fully resolved coefficient set of
//   d_mu d^mu Phi^alpha + a1 Phi^(alpha-2) d_mu Phi d^mu Phi + a2 m^beta Phi^gamma = 0
// for one of the three solution classes. Fields that do not apply to the
// class (q for the real classes, theta and b for the complex class) are NaN.
struct ModelParams {
    ModelClass model = ModelClass::Complex;
    double alpha = 1.0;
    double q = 1.0;
    double theta = 1.0;
    double b = 1.0;
    double a1 = 0.0;
    double a2 = 1.0;
    double beta = 2.0;
    double gamma = 1.0;
    double delta = 1.0;
    int nu = 4;
    double c = 1.0;
    double m = 1.0;
    // False only for Case I sets built with a free theta; those solve the
    // field equation but have no single-field Lagrangian.
    bool lagrangian = true;

    [[nodiscard]] bool is_real() const noexcept { return model != ModelClass::Complex; }
};

// (omega, k, m); k has one entry per spatial dimension.
struct WaveVector {
    double omega = 1.0;
    std::vector<double> k;
    double m = 1.0;

    // omega = sqrt(|k|^2 + m^2).
    [[nodiscard]] static WaveVector on_shell(std::vector<double> k, double m);
    [[nodiscard]] double k_squared() const noexcept;
    [[nodiscard]] double dispersion_residual() const noexcept;
};

inline constexpr int kDefaultSpacetimeDimension = 4;
inline constexpr double kConstraintTolerance = 1e-12;

[[nodiscard]] double dispersion_residual(const WaveVector& w) noexcept;

// delta = (nu - 2)/(1 + alpha). PoleError at alpha = -1.
[[nodiscard]] double mass_dimension(int nu, double alpha);

// Complex class: alpha, q, a1, c free; gamma, a2, beta, delta derived.
[[nodiscard]] ModelParams solve_complex_class(double alpha, double q, double a1, double c,
                                              int nu = kDefaultSpacetimeDimension,
                                              double m = 1.0);

// Case I with the Lagrangian-consistent theta = 2/(1+alpha).
[[nodiscard]] ModelParams solve_real_case1(double alpha, double b, double c,
                                           int nu = kDefaultSpacetimeDimension,
                                           double m = 1.0);

// Case I with theta left free. The result solves the field equation but is
// flagged lagrangian = false; the Hamiltonian and lattice modules reject it.
[[nodiscard]] ModelParams make_real_case1_free_theta(double alpha, double theta, double b,
                                                     double c,
                                                     int nu = kDefaultSpacetimeDimension,
                                                     double m = 1.0);

[[nodiscard]] ModelParams solve_real_case2(double alpha, double theta, double b, double c,
                                           int nu = kDefaultSpacetimeDimension,
                                           double m = 1.0);

struct ValidationReport {
    bool ok = true;
    double max_residual = 0.0;
    std::vector<std::string> violations;
};

// Re-derives every class relation from the stored numbers.
[[nodiscard]] ValidationReport validate(const ModelParams& p);
// Throws ConstraintError listing the violations.
void require_valid(const ModelParams& p);

// Flat "name = value" record. Doubles are written in shortest round-trip
// form so that parse(format(p)) reproduces every bit.
[[nodiscard]] std::string to_record(const ModelParams& p);
[[nodiscard]] ModelParams from_record(std::string_view text);
void write_record(std::ostream& out, const ModelParams& p);

}  // namespace nlkg
