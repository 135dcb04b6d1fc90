#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "nlkg/params.hpp"
#include "nlkg/qfunc.hpp"

namespace nlkg {

enum class FieldKind { Phi1, Phi2 };

// Which trigonometric profile the real ansatz uses: cos(bz)^theta or sin(bz)^theta.
enum class Branch { Cos, Sin };

struct ExponentPair {
    double r1 = 0.0;
    double r2 = 0.0;
};

struct ExponentDeltas {
    double delta1 = 0.0;
    double delta2 = 0.0;
};

// Powers of e_q solving the complex auxiliary equation. PoleError at alpha = 0.
[[nodiscard]] ExponentPair exponent_pair(double alpha, double q, double a1);
// Energy-density exponents r_i + 2q + alpha - 2; delta1 vanishes identically.
[[nodiscard]] ExponentDeltas exponent_deltas(double alpha, double q, double a1);

// Real travelling-wave variable omega t - k.x. Throws DomainError when the
// dimensions of k and x differ.
[[nodiscard]] double phase(const WaveVector& w, std::span<const double> x, double t);

// Value and first two derivatives with respect to the travelling-wave variable.
template <class T>
struct Jet {
    T value{};
    T d1{};
    T d2{};
};

// f(z) = cos(bz)^theta or sin(bz)^theta for a real-class parameter set.
[[nodiscard]] Jet<double> real_profile_jet(const ModelParams& p, Branch branch, double z);
// g(z) of the Case II auxiliary field (cos branch only).
[[nodiscard]] Jet<double> case2_aux_jet(const ModelParams& p, double chi1, double chi2, double z);
// f(z) = e_q(z) at z = i zhat.
[[nodiscard]] Jet<Complex> complex_profile_jet(double q, double zhat);

[[nodiscard]] Complex phi1_complex(const ModelParams& p, const WaveVector& w,
                                   std::span<const double> x, double t);
[[nodiscard]] Complex phi2_complex(const ModelParams& p, const WaveVector& w, double kappa1,
                                   double kappa2, std::span<const double> x, double t,
                                   double c2 = 1.0);
[[nodiscard]] double phi1_real(const ModelParams& p, const WaveVector& w, Branch branch,
                               std::span<const double> x, double t);
[[nodiscard]] double phi2_real_case2(const ModelParams& p, const WaveVector& w, double chi1,
                                     double chi2, std::span<const double> x, double t,
                                     double c2 = 1.0);

// True when b z lies in the principal window of the real profile: |bz| < pi/2
// for Cos, 0 < bz < pi for Sin. Integer theta is unrestricted for Phi1.
[[nodiscard]] bool real_window_contains(const ModelParams& p, Branch branch, double z,
                                        bool fractional_only = true);

struct SpacetimePoint {
    std::vector<double> x;
    double t = 0.0;
};

// Closed-form sampler for one field of one class.
class FieldSolution {
public:
    [[nodiscard]] static FieldSolution phi1(ModelParams p, WaveVector w,
                                            Branch branch = Branch::Cos);
    [[nodiscard]] static FieldSolution phi2_complex(ModelParams p, WaveVector w, double kappa1,
                                                    double kappa2, double c2 = 1.0);
    [[nodiscard]] static FieldSolution phi2_real(ModelParams p, WaveVector w, double chi1,
                                                 double chi2, double c2 = 1.0);

    [[nodiscard]] Complex operator()(std::span<const double> x, double t) const;

    // Phi^s continued along the travelling wave: for the complex Phi1 this is
    // (m^delta c)^s e_q(z)^s with a single principal power, which agrees with
    // the naive principal power only near z = 0.
    [[nodiscard]] Complex power(std::span<const double> x, double t, double s) const;

    [[nodiscard]] bool in_window(std::span<const double> x, double t) const;

    [[nodiscard]] const ModelParams& params() const noexcept { return params_; }
    [[nodiscard]] const WaveVector& wave() const noexcept { return wave_; }
    [[nodiscard]] FieldKind kind() const noexcept { return kind_; }
    [[nodiscard]] Branch branch() const noexcept { return branch_; }
    [[nodiscard]] double coeff1() const noexcept { return coeff1_; }
    [[nodiscard]] double coeff2() const noexcept { return coeff2_; }
    [[nodiscard]] double amplitude2() const noexcept { return c2_; }

private:
    FieldSolution(ModelParams p, WaveVector w, FieldKind kind, Branch branch, double coeff1,
                  double coeff2, double c2);

    ModelParams params_;
    WaveVector wave_;
    FieldKind kind_;
    Branch branch_;
    double coeff1_;  // kappa1 or chi1
    double coeff2_;  // kappa2 or chi2
    double c2_;
};

// Columns x (or x1..xn), t, re, im; 17 significant digits, '\n' endings.
void write_samples_csv(std::ostream& out, const FieldSolution& field,
                       std::span<const SpacetimePoint> points);

}  // namespace nlkg
