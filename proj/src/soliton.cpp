#include "nlkg/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "nlkg/errors.hpp"
#include "nlkg/io.hpp"
#include "nlkg/quadrature.hpp"
#include "nlkg/waveforms.hpp"

namespace nlkg {
namespace {

constexpr double kQuadratureTolerance = 1e-9;
constexpr std::size_t kPeakScanPoints = 4001;
constexpr int kGoldenIterations = 200;

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

double golden_maximum(const std::function<double(double)>& f, double lo, double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < kGoldenIterations; ++i) {
        if (b - a <= 1e-12 * std::max(1.0, std::abs(a) + std::abs(b))) break;
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

std::string join_17g(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += io::format_17g(v[i]);
    }
    return out;
}

std::vector<double> attribute_series(std::string_view svg, std::string_view name) {
    const std::string key = std::string(name) + "=\"";
    const auto begin = svg.find(key);
    if (begin == std::string_view::npos) throw DomainError("svg: missing attribute " + std::string(name));
    const auto start = begin + key.size();
    const auto end = svg.find('"', start);
    std::istringstream ss{std::string(svg.substr(start, end - start))};
    std::vector<double> out;
    std::string token;
    while (ss >> token) out.push_back(io::parse_double(token));
    return out;
}

}  // namespace

double renormalization_lambda(const ModelParams& p, const WaveVector& w) {
    const auto r = exponent_pair(p.alpha, p.q, p.a1);
    const double energy = w.omega * w.omega + w.k_squared();
    return -((p.a1 - p.alpha * r.r1) * energy +
             (p.alpha * p.q + p.a1 + p.alpha * (p.alpha - 1.0)) * w.m * w.m);
}

SolitonSetup make_soliton_setup(double alpha, double q, const WaveVector& w, double c1, double c2,
                                int nu, double kappa1) {
    if (is_standard_q(q)) throw ConstraintError("soliton: undefined at q = 1");
    if (alpha == 0.0) throw ConstraintError("soliton: undefined at alpha = 0");
    if (w.k.size() != 1) throw ConstraintError("soliton: one spatial dimension only");
    const double energy = w.omega * w.omega + w.k_squared();
    if (!(energy > 0.0)) throw ConstraintError("soliton: omega and k both vanish");

    SolitonSetup s;
    s.params = solve_complex_class(alpha, q, alpha * (1.0 - q) - alpha * alpha, c1, nu, w.m);
    s.wave = w;
    s.kappa1 = kappa1;
    s.kappa2 = sgn(alpha) * sgn(1.0 - q) / energy;
    s.lambda = renormalization_lambda(s.params, w);
    s.c2 = c2;
    return s;
}

double density_normalization(const SolitonSetup& s) {
    const auto& p = s.params;
    return std::pow(p.c, p.alpha) * s.c2 * std::pow(p.m, p.delta * (p.alpha + 1.0));
}

double density_closed_form(const SolitonSetup& s, double zhat) {
    const double d = 1.0 - s.q();
    return 2.0 * std::abs(d) * std::abs(s.alpha()) / (1.0 + d * d * zhat * zhat);
}

double density_from_hamiltonian(const SolitonSetup& s, double x, double t) {
    const auto& p = s.params;
    const double xs[1] = {x};
    const double h = hamiltonian_density_complex(p, s.wave, s.kappa1, s.kappa2, xs, t, s.c2);
    const auto deltas = exponent_deltas(p.alpha, p.q, p.a1);
    const Complex z{0.0, phase(s.wave, xs, t)};
    const Complex interaction =
        s.lambda * (s.kappa1 * q_exp_power(z, p.q, deltas.delta1) +
                    s.kappa2 * q_exp_power(z, p.q, deltas.delta2));
    // lambda is the coupling of the normalized density, so it is added after dividing.
    return h / density_normalization(s) + 2.0 * interaction.real();
}

double soliton_energy(const SolitonSetup& s, EnergyMethod method) {
    if (method == EnergyMethod::ClosedForm) return 2.0 * std::abs(s.alpha()) * std::numbers::pi;
    const double width = 1.0 / std::abs(1.0 - s.q());
    return integrate_real_line([&](double zhat) { return density_closed_form(s, zhat); }, width,
                               kQuadratureTolerance)
        .value;
}

std::vector<PeakSample> peak_trajectory(const SolitonSetup& s, std::span<const double> times,
                                        double half_width) {
    std::vector<PeakSample> out;
    const bool stationary = s.wave.k[0] == 0.0;
    for (double t : times) {
        PeakSample sample;
        sample.t = t;
        auto density = [&](double x) { return density_from_hamiltonian(s, x, t); };
        if (stationary) {
            sample.stationary = true;
            sample.height = density(0.0);
            out.push_back(sample);
            continue;
        }
        const double dx = 2.0 * half_width / static_cast<double>(kPeakScanPoints - 1);
        std::size_t best = 0;
        double best_value = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < kPeakScanPoints; ++i) {
            const double v = density(-half_width + static_cast<double>(i) * dx);
            if (v > best_value) {
                best_value = v;
                best = i;
            }
        }
        const double lo = -half_width + static_cast<double>(best == 0 ? 0 : best - 1) * dx;
        const double hi = -half_width + static_cast<double>(std::min(best + 1, kPeakScanPoints - 1)) * dx;
        const double x = golden_maximum(density, lo, hi);
        sample.position = x;
        sample.height = density(x);
        out.push_back(sample);
    }
    return out;
}

DensityProfile density_profile(const SolitonSetup& s, double zhat_max, int per_unit) {
    DensityProfile profile;
    const auto n = static_cast<int>(std::llround(zhat_max * per_unit));
    for (int i = -n; i <= n; ++i) {
        const double z = static_cast<double>(i) / per_unit;
        profile.zhat.push_back(z);
        profile.density.push_back(density_closed_form(s, z));
    }
    return profile;
}

void write_profile_csv(std::ostream& out, const DensityProfile& profile) {
    out << "zhat,density\n";
    for (std::size_t i = 0; i < profile.zhat.size(); ++i) {
        out << io::format_17g(profile.zhat[i]) << ',' << io::format_17g(profile.density[i]) << '\n';
    }
}

void write_profile_svg(std::ostream& out, const DensityProfile& profile, std::string_view title) {
    if (profile.zhat.empty()) throw DomainError("svg: empty profile");
    constexpr double width = 720, height = 450;
    constexpr double left = 80, right = 30, top = 50, bottom = 70;
    const double x_min = profile.zhat.front();
    const double x_max = profile.zhat.back();
    const double y_max = 1.1 * *std::max_element(profile.density.begin(), profile.density.end());
    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * (width - left - right); };
    auto py = [&](double y) { return height - bottom - y / y_max * (height - top - bottom); };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" << title
        << "</text>\n";
    out << "  <g stroke=\"black\" stroke-width=\"1\">\n";
    out << "    <line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
        << "\" y2=\"" << height - bottom << "\"/>\n";
    out << "    <line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << height - bottom << "\"/>\n";
    out << "  </g>\n  <g font-size=\"12\" text-anchor=\"middle\">\n";
    const double x_step = (x_max - x_min) > 10.0 ? 2.0 : 1.0;
    for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-12; x += x_step) {
        out << "    <line x1=\"" << num(px(x)) << "\" y1=\"" << height - bottom << "\" x2=\"" << num(px(x))
            << "\" y2=\"" << height - bottom + 5 << "\" stroke=\"black\"/>\n";
        out << "    <text x=\"" << num(px(x)) << "\" y=\"" << height - bottom + 20 << "\">" << x << "</text>\n";
    }
    const double y_step = std::pow(10.0, std::floor(std::log10(y_max))) / 2.0;
    for (double y = 0.0; y <= y_max; y += y_step) {
        out << "    <text x=\"" << left - 10 << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
            << y << "</text>\n";
    }
    out << "  </g>\n";
    out << "  <text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 20
        << "\" text-anchor=\"middle\" font-size=\"14\">z&#x302;</text>\n";
    out << "  <text x=\"20\" y=\"" << (top + height - bottom) / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
        << (top + height - bottom) / 2 << ")\">normalized density</text>\n";
    out << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"\n";
    out << "    data-zhat=\"" << join_17g(profile.zhat) << "\"\n";
    out << "    data-density=\"" << join_17g(profile.density) << "\"\n";
    out << "    points=\"";
    for (std::size_t i = 0; i < profile.zhat.size(); ++i) {
        if (i) out << ' ';
        out << num(px(profile.zhat[i])) << ',' << num(py(profile.density[i]));
    }
    out << "\"/>\n</svg>\n";
}

DensityProfile read_svg_series(std::string_view svg) {
    DensityProfile p;
    p.zhat = attribute_series(svg, "data-zhat");
    p.density = attribute_series(svg, "data-density");
    if (p.zhat.size() != p.density.size()) throw DomainError("svg: series lengths differ");
    return p;
}

}  // namespace nlkg
