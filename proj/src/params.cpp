#include "nlkg/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "nlkg/errors.hpp"
#include "nlkg/io.hpp"

namespace nlkg {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConstraintError(std::string(what) + " must be positive and finite");
    }
}

void require_dimension(int nu) {
    if (nu < 2) throw ConstraintError("space-time dimension nu must be >= 2");
}

ModelParams base_params(ModelClass model, double alpha, double c, int nu, double m) {
    require_positive(c, "c");
    require_positive(m, "m");
    require_dimension(nu);
    ModelParams p;
    p.model = model;
    p.alpha = alpha;
    p.c = c;
    p.nu = nu;
    p.m = m;
    p.delta = mass_dimension(nu, alpha);
    return p;
}

bool close(double lhs, double rhs) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) <= kConstraintTolerance * scale;
}

}  // namespace

std::string_view to_string(ModelClass c) noexcept {
    switch (c) {
        case ModelClass::Complex: return "complex";
        case ModelClass::RealCaseI: return "case1";
        case ModelClass::RealCaseII: return "case2";
    }
    return "?";
}

ModelClass parse_model_class(std::string_view text) {
    if (text == "complex") return ModelClass::Complex;
    if (text == "case1" || text == "real1") return ModelClass::RealCaseI;
    if (text == "case2" || text == "real2") return ModelClass::RealCaseII;
    throw ConstraintError("unknown model class '" + std::string(text) + "'");
}

WaveVector WaveVector::on_shell(std::vector<double> k, double m) {
    WaveVector w;
    w.k = std::move(k);
    w.m = m;
    w.omega = std::sqrt(w.k_squared() + m * m);
    return w;
}

double WaveVector::k_squared() const noexcept {
    return std::inner_product(k.begin(), k.end(), k.begin(), 0.0);
}

double WaveVector::dispersion_residual() const noexcept {
    return omega * omega - k_squared() - m * m;
}

double dispersion_residual(const WaveVector& w) noexcept { return w.dispersion_residual(); }

double mass_dimension(int nu, double alpha) {
    if (alpha == -1.0) throw PoleError("mass dimension has a pole at alpha = -1");
    return static_cast<double>(nu - 2) / (1.0 + alpha);
}

ModelParams solve_complex_class(double alpha, double q, double a1, double c, int nu, double m) {
    ModelParams p = base_params(ModelClass::Complex, alpha, c, nu, m);
    p.q = q;
    p.theta = kNaN;
    p.b = kNaN;
    p.a1 = a1;
    p.gamma = alpha + 2.0 * q - 2.0;
    p.beta = 2.0 - p.delta * (p.gamma - alpha);
    p.a2 = (alpha * q + a1 + alpha * (alpha - 1.0)) / std::pow(c, 2.0 * (q - 1.0));
    return p;
}

ModelParams make_real_case1_free_theta(double alpha, double theta, double b, double c, int nu,
                                       double m) {
    if (alpha == 0.0) throw PoleError("Case I requires alpha != 0");
    if (theta == 0.0) throw PoleError("Case I requires theta != 0");
    if (b == 0.0) throw ConstraintError("Case I requires b != 0");
    ModelParams p = base_params(ModelClass::RealCaseI, alpha, c, nu, m);
    p.q = kNaN;
    p.theta = theta;
    p.b = b;
    p.gamma = alpha;
    p.beta = 2.0;
    p.a1 = alpha * (1.0 - alpha * theta) / theta;
    p.a2 = alpha * theta * b * b;
    p.lagrangian = false;
    return p;
}

ModelParams solve_real_case1(double alpha, double b, double c, int nu, double m) {
    if (alpha == -1.0) throw PoleError("Case I has a pole at alpha = -1");
    if (alpha == 0.0) throw PoleError("Case I requires alpha != 0");
    ModelParams p = make_real_case1_free_theta(alpha, 2.0 / (1.0 + alpha), b, c, nu, m);
    // Same value as alpha(1 - alpha theta)/theta at this theta, without the
    // rounding of the division chain.
    p.a1 = -alpha * (alpha - 1.0) / 2.0;
    p.lagrangian = true;
    return p;
}

ModelParams solve_real_case2(double alpha, double theta, double b, double c, int nu, double m) {
    if (theta == 0.0) throw PoleError("Case II has a pole at theta = 0");
    ModelParams p = base_params(ModelClass::RealCaseII, alpha, c, nu, m);
    p.q = kNaN;
    p.theta = theta;
    p.b = b;
    p.a1 = -alpha * alpha;
    p.gamma = alpha - 2.0 / theta;
    p.beta = 2.0 + 2.0 * p.delta / theta;
    p.a2 = std::pow(c, alpha - p.gamma) * alpha * theta * b * b;
    return p;
}

ValidationReport validate(const ModelParams& p) {
    ValidationReport report;
    auto check = [&](double lhs, double rhs, const char* what) {
        const double residual = std::abs(lhs - rhs);
        if (std::isfinite(residual)) report.max_residual = std::max(report.max_residual, residual);
        if (!close(lhs, rhs)) {
            report.ok = false;
            std::ostringstream msg;
            msg << what << ": " << io::format_shortest(lhs) << " != " << io::format_shortest(rhs);
            report.violations.push_back(msg.str());
        }
    };
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    if (p.alpha == -1.0) fail("alpha = -1 (mass dimension pole)");
    if (!(p.c > 0.0)) fail("c must be positive");
    if (!(p.m > 0.0)) fail("m must be positive");
    if (p.nu < 2) fail("nu must be >= 2");
    if (!report.ok) return report;

    check(p.delta, static_cast<double>(p.nu - 2) / (1.0 + p.alpha), "delta = (nu-2)/(1+alpha)");
    check(p.beta, 2.0 - p.delta * (p.gamma - p.alpha), "beta = 2 - delta (gamma - alpha)");

    switch (p.model) {
        case ModelClass::Complex:
            check(p.gamma - p.alpha + 2.0, 2.0 * p.q, "gamma - alpha + 2 = 2q");
            check(p.a2 * std::pow(p.c, 2.0 * (p.q - 1.0)),
                  p.alpha * p.q + p.a1 + p.alpha * (p.alpha - 1.0),
                  "a2 c^(2(q-1)) = alpha q + a1 + alpha(alpha-1)");
            break;
        case ModelClass::RealCaseI: {
            if (p.theta == 0.0 || p.b == 0.0) {
                fail("Case I requires theta != 0 and b != 0");
                break;
            }
            const double t2b2 = (p.a1 + p.alpha * p.alpha) * p.theta * p.theta * p.b * p.b;
            check(p.gamma, p.alpha, "gamma = alpha");
            check(p.beta, 2.0, "beta = 2");
            check(p.alpha * p.theta * p.b * p.b, t2b2,
                  "alpha theta b^2 = (a1 + alpha^2) theta^2 b^2");
            check(p.a2, t2b2, "a2 = (a1 + alpha^2) theta^2 b^2");
            if (p.lagrangian) {
                check(p.theta, 2.0 / (1.0 + p.alpha), "theta = 2/(1+alpha)");
                check(p.a1, -p.alpha * (p.alpha - 1.0) / 2.0, "a1 = -alpha(alpha-1)/2");
            }
            break;
        }
        case ModelClass::RealCaseII:
            if (p.theta == 0.0) {
                fail("Case II requires theta != 0");
                break;
            }
            check((p.a1 + p.alpha * p.alpha) * p.theta * p.theta * p.b * p.b, 0.0,
                  "(a1 + alpha^2) theta^2 b^2 = 0");
            check(p.alpha - p.gamma, 2.0 / p.theta, "alpha - gamma = 2/theta");
            check(p.beta, 2.0 + 2.0 * p.delta / p.theta, "beta = 2 + 2 delta/theta");
            check(p.a2, std::pow(p.c, p.alpha - p.gamma) * p.alpha * p.theta * p.b * p.b,
                  "a2 = c^(alpha-gamma) alpha theta b^2");
            break;
    }
    return report;
}

void require_valid(const ModelParams& p) {
    const auto report = validate(p);
    if (report.ok) return;
    std::string msg = "invalid parameter set:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw ConstraintError(msg);
}

void write_record(std::ostream& out, const ModelParams& p) {
    auto line = [&](const char* name, double v) {
        out << name << " = " << io::format_shortest(v) << '\n';
    };
    out << "class = " << to_string(p.model) << '\n';
    line("alpha", p.alpha);
    if (!p.is_real()) {
        line("q", p.q);
    } else {
        line("theta", p.theta);
        line("b", p.b);
    }
    line("a1", p.a1);
    line("a2", p.a2);
    line("beta", p.beta);
    line("gamma", p.gamma);
    line("delta", p.delta);
    out << "nu = " << p.nu << '\n';
    line("c", p.c);
    line("m", p.m);
    if (!p.lagrangian) out << "lagrangian = false\n";
}

std::string to_record(const ModelParams& p) {
    std::ostringstream ss;
    write_record(ss, p);
    return ss.str();
}

ModelParams from_record(std::string_view text) {
    auto kv = io::parse_key_value(text);
    auto take = [&](std::string_view name) -> std::string {
        auto it = kv.find(name);
        if (it == kv.end()) throw ConstraintError("record is missing '" + std::string(name) + "'");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto number = [&](std::string_view name) { return io::parse_double(take(name)); };

    ModelParams p;
    p.model = parse_model_class(take("class"));
    p.alpha = number("alpha");
    if (!p.is_real()) {
        p.q = number("q");
        p.theta = kNaN;
        p.b = kNaN;
    } else {
        p.q = kNaN;
        p.theta = number("theta");
        p.b = number("b");
    }
    p.a1 = number("a1");
    p.a2 = number("a2");
    p.beta = number("beta");
    p.gamma = number("gamma");
    p.delta = number("delta");
    p.nu = static_cast<int>(io::parse_integer(take("nu")));
    p.c = number("c");
    p.m = number("m");
    if (auto it = kv.find("lagrangian"); it != kv.end()) {
        if (it->second != "true" && it->second != "false") {
            throw ConstraintError("lagrangian must be true or false");
        }
        p.lagrangian = it->second == "true";
        kv.erase(it);
    }
    if (!kv.empty()) throw ConstraintError("unknown key '" + kv.begin()->first + "' in record");
    return p;
}

}  // namespace nlkg
