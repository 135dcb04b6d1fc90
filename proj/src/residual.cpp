#include "nlkg/residual.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "nlkg/errors.hpp"

namespace nlkg {
namespace {

constexpr double kComplexPhaseHalfWidth = 3.0;
constexpr double kRealPhaseHalfWidth = 1.2;  // in units of b z, inside pi/2
constexpr std::array<unsigned, 6> kHaltonBases{2, 3, 5, 7, 11, 13};

double radical_inverse(std::size_t index, unsigned base) {
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f /= base;
    }
    return result;
}

double max_term(std::initializer_list<Complex> terms) {
    double s = 0.0;
    for (const auto& t : terms) s = std::max(s, std::abs(t));
    return s;
}

// 4th-order central stencils.
template <class F>
Complex second_difference(F&& f, double h) {
    return (-f(2.0 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2.0 * h)) / (12.0 * h * h);
}

template <class F>
Complex first_difference(F&& f, double h) {
    return (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h);
}

double characteristic_frequency(const FieldSolution& field) {
    const auto& w = field.wave();
    double freq = std::max({std::abs(w.omega), std::sqrt(w.k_squared()), w.m});
    if (field.params().is_real()) freq *= std::max(1.0, std::abs(field.params().b));
    return freq;
}

}  // namespace

double ResidualPoint::relative() const noexcept {
    const double a = absolute();
    if (a == 0.0) return 0.0;
    return a / scale;
}

void ResidualReport::add(std::vector<double> point, const ResidualPoint& r) {
    points.push_back(std::move(point));
    residual_abs.push_back(r.absolute());
    scale.push_back(r.scale);
    residual_rel.push_back(r.relative());
    max_rel = std::max(max_rel, residual_rel.back());
}

double default_step(const FieldSolution& field) { return 1e-3 / characteristic_frequency(field); }

ResidualPoint pde_residual(const FieldSolution& phi1, std::span<const double> x, double t, double h,
                           Metric metric) {
    if (phi1.kind() != FieldKind::Phi1) throw ConstraintError("pde_residual: expects the Phi1 sampler");
    const auto& p = phi1.params();
    const std::size_t dim = x.size();
    std::vector<double> xs(x.begin(), x.end());

    auto guarded = [&](const std::vector<double>& xp, double tp) {
        if (!phi1.in_window(xp, tp)) throw DomainError("pde_residual: stencil leaves the validity window");
    };
    auto along_t = [&](auto&& g) {
        return [&, g](double s) {
            guarded(xs, t + s);
            return g(xs, t + s);
        };
    };
    auto along_x = [&](std::size_t i, auto&& g) {
        return [&, i, g](double s) {
            auto xp = xs;
            xp[i] += s;
            guarded(xp, t);
            return g(xp, t);
        };
    };
    auto field = [&](const std::vector<double>& xp, double tp) { return phi1(xp, tp); };
    auto field_alpha = [&](const std::vector<double>& xp, double tp) { return phi1.power(xp, tp, p.alpha); };

    Complex box = second_difference(along_t(field_alpha), h);
    const Complex dt = first_difference(along_t(field), h);
    Complex grad2 = dt * dt;
    for (std::size_t i = 0; i < dim; ++i) {
        box -= second_difference(along_x(i, field_alpha), h);
        const Complex dx = first_difference(along_x(i, field), h);
        grad2 -= dx * dx;
    }
    if (metric == Metric::MostlyPlus) {
        box = -box;
        grad2 = -grad2;
    }
    guarded(xs, t);
    const Complex kinetic = box;
    const Complex gradient = p.a1 * phi1.power(x, t, p.alpha - 2.0) * grad2;
    const Complex mass = p.a2 * std::pow(p.m, p.beta) * phi1.power(x, t, p.gamma);
    return {kinetic + gradient + mass, max_term({kinetic, gradient, mass})};
}

ResidualPoint travelwave_ode_residual(const ModelParams& p, Branch branch, double z,
                                      Reduction reduction) {
    const double power = p.gamma - p.alpha + 2.0;
    Complex f, d1, d2, f_power;
    double sign;
    if (!p.is_real()) {
        const auto jet = complex_profile_jet(p.q, z);
        f = jet.value;
        d1 = jet.d1;
        d2 = jet.d2;
        f_power = q_exp_power(Complex{0.0, z}, p.q, power);
        sign = -1.0;
    } else {
        const auto jet = real_profile_jet(p, branch, z);
        if (jet.value == 0.0) throw SingularityError("travelwave_ode_residual: profile vanishes");
        f = jet.value;
        d1 = jet.d1;
        d2 = jet.d2;
        if (jet.value < 0.0 && power != std::trunc(power)) {
            throw DomainError("travelwave_ode_residual: fractional power of a negative profile");
        }
        f_power = std::pow(jet.value, power);
        sign = 1.0;
    }
    if (reduction == Reduction::Flipped) sign = -sign;
    const Complex mass = p.a2 * std::pow(p.c, p.gamma - p.alpha) * f_power;
    const Complex curvature = p.alpha * f * d2;
    const Complex slope = (p.a1 + p.alpha * (p.alpha - 1.0)) * d1 * d1;
    return {mass + sign * (curvature + slope), max_term({mass, curvature, slope})};
}

ResidualPoint aux_residual_complex(const ModelParams& p, double kappa1, double kappa2, double zhat) {
    if (p.is_real()) throw ConstraintError("aux_residual_complex: complex parameters required");
    if (p.alpha == 0.0) throw PoleError("aux_residual_complex: alpha = 0");
    const auto r = exponent_pair(p.alpha, p.q, p.a1);
    const Complex z{0.0, zhat};
    const double q = p.q;
    Complex g{}, dg{}, ddg{};
    for (const auto& [kappa, ri] : {std::pair{kappa1, r.r1}, std::pair{kappa2, r.r2}}) {
        if (kappa == 0.0) continue;
        g += kappa * q_exp_power_deriv(z, q, ri, 0);
        dg += kappa * q_exp_power_deriv(z, q, ri, 1);
        ddg += kappa * q_exp_power_deriv(z, q, ri, 2);
    }
    const double A = 2.0 * p.a1;
    const double B = (p.alpha + 2.0 * (q - 1.0)) * (2.0 * p.a1 + p.alpha * (p.alpha + q - 1.0));
    const Complex second = -p.alpha * ddg;
    const Complex first = A * q_exp_power(z, q, q - 1.0) * dg;
    const Complex zeroth = B * q_exp_power(z, q, 2.0 * q - 2.0) * g;
    return {second + first + zeroth, max_term({second, first, zeroth})};
}

ResidualPoint aux_residual_real2(const ModelParams& p, double chi1, double chi2, double z) {
    const auto g = case2_aux_jet(p, chi1, chi2, z);
    const double u = p.b * z;
    const double C = std::cos(u);
    const double S = std::sin(u);
    const double n = p.alpha * p.theta;
    const double th = p.theta;
    const double second = std::pow(C, 2.0 * th) * g.d2;
    const double first = -2.0 * p.b * n * std::pow(C, 2.0 * th - 1.0) * S * g.d1;
    const double zeroth = -0.5 * p.b * p.b * std::pow(C, 2.0 * th - 2.0) *
                          (4.0 + 2.0 * n - n * n + n * n * std::cos(2.0 * u)) * g.value;
    return {Complex{second + first + zeroth, 0.0}, max_term({second, first, zeroth})};
}

std::vector<double> halton_phases(const ModelParams& p, Branch branch, std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double s = 2.0 * radical_inverse(i, kHaltonBases[0]) - 1.0;
        if (!p.is_real()) {
            out.push_back(kComplexPhaseHalfWidth * s);
            continue;
        }
        const double centre = branch == Branch::Cos ? 0.0 : std::numbers::pi / 2.0;
        out.push_back((centre + kRealPhaseHalfWidth * s) / p.b);
    }
    return out;
}

std::vector<SpacetimePoint> halton_points(const FieldSolution& field, std::size_t n) {
    const auto& w = field.wave();
    const std::size_t dim = w.k.size();
    if (dim + 2 > kHaltonBases.size()) throw DomainError("halton_points: too many spatial dimensions");
    const double tau = 1.0 / characteristic_frequency(field);
    const double k2 = w.k_squared();
    const auto phases = halton_phases(field.params(), field.branch(), n);

    std::vector<SpacetimePoint> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double z = phases[i - 1];
        std::vector<double> v(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            v[d] = tau * (2.0 * radical_inverse(i, kHaltonBases[d + 2]) - 1.0);
        }
        SpacetimePoint pt;
        if (k2 > 0.0) {
            pt.t = tau * (2.0 * radical_inverse(i, kHaltonBases[1]) - 1.0);
            // Remove the component of v along k, then place k.x = omega t - z.
            double vk = 0.0;
            for (std::size_t d = 0; d < dim; ++d) vk += v[d] * w.k[d];
            const double along = (w.omega * pt.t - z) / k2;
            for (std::size_t d = 0; d < dim; ++d) v[d] += (along - vk / k2) * w.k[d];
        } else {
            if (w.omega == 0.0) throw DomainError("halton_points: null wave vector");
            pt.t = z / w.omega;
        }
        pt.x = std::move(v);
        out.push_back(std::move(pt));
    }
    return out;
}

ResidualReport verify_pde(const FieldSolution& phi1, std::size_t n_points, std::optional<double> h) {
    const double step = h.value_or(default_step(phi1));
    ResidualReport report;
    report.equation = "field equation (finite differences)";
    for (std::size_t d = 0; d < phi1.wave().k.size(); ++d) report.coordinates.push_back("x" + std::to_string(d + 1));
    report.coordinates.push_back("t");
    for (const auto& pt : halton_points(phi1, n_points)) {
        auto coords = pt.x;
        coords.push_back(pt.t);
        report.add(std::move(coords), pde_residual(phi1, pt.x, pt.t, step));
    }
    return report;
}

ResidualReport verify_travelwave(const ModelParams& p, Branch branch, std::size_t n_points) {
    ResidualReport report;
    report.equation = "travelling-wave reduction (exact derivatives)";
    report.coordinates = {"z"};
    for (double z : halton_phases(p, branch, n_points)) {
        report.add({z}, travelwave_ode_residual(p, branch, z));
    }
    return report;
}

ResidualReport verify_aux_complex(const ModelParams& p, double kappa1, double kappa2,
                                  std::size_t n_points) {
    ResidualReport report;
    report.equation = "complex auxiliary equation (exact derivatives)";
    report.coordinates = {"z"};
    for (double z : halton_phases(p, Branch::Cos, n_points)) {
        report.add({z}, aux_residual_complex(p, kappa1, kappa2, z));
    }
    return report;
}

ResidualReport verify_aux_real2(const ModelParams& p, double chi1, double chi2, std::size_t n_points) {
    ResidualReport report;
    report.equation = "Case II auxiliary equation (exact derivatives)";
    report.coordinates = {"z"};
    for (double z : halton_phases(p, Branch::Cos, n_points)) {
        report.add({z}, aux_residual_real2(p, chi1, chi2, z));
    }
    return report;
}

std::string to_json(const ResidualReport& report) {
    nlohmann::json j;
    j["equation"] = report.equation;
    j["coordinates"] = report.coordinates;
    j["points"] = report.points;
    j["residual_abs"] = report.residual_abs;
    j["scale"] = report.scale;
    j["residual_rel"] = report.residual_rel;
    j["max_rel"] = report.max_rel;
    return j.dump(2);
}

ResidualReport report_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ResidualReport r;
    r.equation = j.at("equation").get<std::string>();
    r.coordinates = j.at("coordinates").get<std::vector<std::string>>();
    r.points = j.at("points").get<std::vector<std::vector<double>>>();
    r.residual_abs = j.at("residual_abs").get<std::vector<double>>();
    r.scale = j.at("scale").get<std::vector<double>>();
    r.residual_rel = j.at("residual_rel").get<std::vector<double>>();
    r.max_rel = j.at("max_rel").get<double>();
    return r;
}

}  // namespace nlkg
