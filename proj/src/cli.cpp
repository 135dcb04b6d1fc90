#include "nlkg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "nlkg/errors.hpp"
#include "nlkg/io.hpp"
#include "nlkg/lattice.hpp"
#include "nlkg/params.hpp"
#include "nlkg/residual.hpp"
#include "nlkg/soliton.hpp"
#include "nlkg/waveforms.hpp"

namespace nlkg::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr double kFdThreshold = 1e-6;
constexpr double kExactThreshold = 1e-10;
constexpr double kOrderLow = 1.8;
constexpr double kOrderHigh = 2.2;
const char* const kSubcommands[] = {"solve", "verify", "simulate", "soliton", "sweep"};

bool is_subcommand(const std::string& s) {
    return std::find(std::begin(kSubcommands), std::end(kSubcommands), s) != std::end(kSubcommands);
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

// Inserts "--name=value" for every config entry not given on the command line,
// right after the subcommand token so CLI11 sees them as subcommand options.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::optional<std::string> path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (!path) return args;
    const auto sub = std::find_if(args.begin() + 1, args.end(), is_subcommand);
    if (sub == args.end()) return args;
    const auto kv = io::parse_key_value(io::read_file(*path));
    std::vector<std::string> extra;
    for (const auto& [key, value] : kv) {
        const std::string flag = "--" + key;
        if (!has_flag(args, flag)) extra.push_back(flag + "=" + value);
    }
    args.insert(sub + 1, extra.begin(), extra.end());
    return args;
}

fs::path output_dir(const std::string& flag_value) {
    fs::path dir = flag_value;
    if (const char* env = std::getenv("NLKG_OUT"); env != nullptr && *env != '\0') dir = env;
    fs::create_directories(dir);
    return dir;
}

void write_text(const fs::path& path, const std::string& text) { io::write_file(path.string(), text); }

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(io::parse_double(item));
    if (out.empty()) throw CLI::ValidationError("empty list: " + text);
    return out;
}

// "start:stop:count" or a single value.
std::vector<double> parse_range(const std::string& text) {
    const auto first = text.find(':');
    if (first == std::string::npos) return {io::parse_double(text)};
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos) throw CLI::ValidationError("range must be start:stop:count");
    const double a = io::parse_double(text.substr(0, first));
    const double b = io::parse_double(text.substr(first + 1, second - first - 1));
    const long n = io::parse_integer(text.substr(second + 1));
    if (n < 1) throw CLI::ValidationError("range count must be positive");
    if (n == 1) return {a};
    std::vector<double> out;
    for (long i = 0; i < n; ++i) {
        out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return out;
}

Branch parse_branch(const std::string& s) {
    if (s == "cos") return Branch::Cos;
    if (s == "sin") return Branch::Sin;
    throw CLI::ValidationError("branch must be cos or sin");
}

ModelParams load_params(const std::string& path) {
    auto p = from_record(io::read_file(path));
    require_valid(p);
    return p;
}

std::vector<double> default_k(int nu) {
    std::vector<double> k;
    double v = 0.6;
    for (int i = 0; i + 1 < nu; ++i, v *= -0.5) k.push_back(v);
    return k;
}

WaveVector make_wave(const ModelParams& p, const std::string& k_text, std::optional<double> omega) {
    auto k = k_text.empty() ? default_k(p.nu) : parse_list(k_text);
    auto w = WaveVector::on_shell(std::move(k), p.m);
    if (omega) w.omega = *omega;
    return w;
}

json report_json(const ResidualReport& r) { return json::parse(to_json(r)); }

json wave_json(const WaveVector& w) { return {{"omega", w.omega}, {"k", w.k}, {"m", w.m}}; }

// ---- solve ---------------------------------------------------------------

struct SolveOptions {
    std::string model = "complex";
    double alpha = 1.0;
    std::optional<double> q, a1, theta, b;
    double c = 1.0;
    int nu = kDefaultSpacetimeDimension;
    double m = 1.0;
    bool free_theta = false;
    std::string output;
};

template <class T>
T need(const std::optional<T>& v, const char* name) {
    if (!v) throw CLI::ValidationError(std::string("--") + name + " is required for this class");
    return *v;
}

ModelParams solve_from(const SolveOptions& o) {
    switch (parse_model_class(o.model)) {
        case ModelClass::Complex:
            return solve_complex_class(o.alpha, need(o.q, "q"), need(o.a1, "a1"), o.c, o.nu, o.m);
        case ModelClass::RealCaseI:
            if (o.free_theta) {
                return make_real_case1_free_theta(o.alpha, need(o.theta, "theta"), need(o.b, "b"),
                                                  o.c, o.nu, o.m);
            }
            return solve_real_case1(o.alpha, need(o.b, "b"), o.c, o.nu, o.m);
        case ModelClass::RealCaseII:
            return solve_real_case2(o.alpha, need(o.theta, "theta"), need(o.b, "b"), o.c, o.nu,
                                    o.m);
    }
    throw ConstraintError("unknown class");
}

void add_solve_options(CLI::App* sub, SolveOptions& o) {
    sub->add_option("--class", o.model, "complex | case1 | case2")->capture_default_str();
    sub->add_option("--alpha", o.alpha)->capture_default_str();
    sub->add_option("--q", o.q);
    sub->add_option("--a1", o.a1);
    sub->add_option("--theta", o.theta);
    sub->add_option("--b", o.b);
    sub->add_option("--c", o.c)->capture_default_str();
    sub->add_option("--nu", o.nu, "spacetime dimension")->capture_default_str();
    sub->add_option("--m", o.m)->capture_default_str();
    sub->add_flag("--free-theta", o.free_theta, "Case I with theta not tied to alpha");
}

int cmd_solve(const SolveOptions& o, const std::string& out_dir, std::ostream& out) {
    const auto p = solve_from(o);
    require_valid(p);
    const auto record = to_record(p);
    out << record;
    if (!o.output.empty()) write_text(output_dir(out_dir) / o.output, record);
    return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyOptions {
    std::string params;
    std::string k;
    std::optional<double> omega;
    std::size_t points = kDefaultSamplePoints;
    std::optional<double> h;
    double kappa1 = 1.0;
    double kappa2 = 1.0;
    std::string branch = "cos";
    std::string report = "verify_report.json";
};

struct VerifyOutcome {
    ResidualReport fd;
    std::vector<ResidualReport> exact;
    bool passed = false;
};

VerifyOutcome run_verify(const ModelParams& p, const WaveVector& w, Branch branch,
                         std::size_t points, std::optional<double> h, double kappa1,
                         double kappa2) {
    VerifyOutcome r;
    r.fd = verify_pde(FieldSolution::phi1(p, w, branch), points, h);
    r.exact.push_back(verify_travelwave(p, branch, points));
    if (p.model == ModelClass::Complex) r.exact.push_back(verify_aux_complex(p, kappa1, kappa2, points));
    if (p.model == ModelClass::RealCaseII) r.exact.push_back(verify_aux_real2(p, kappa1, kappa2, points));
    r.passed = r.fd.max_rel < kFdThreshold;
    for (const auto& e : r.exact) r.passed = r.passed && e.max_rel < kExactThreshold;
    return r;
}

int cmd_verify(const VerifyOptions& o, const std::string& out_dir, std::ostream& out) {
    const auto p = load_params(o.params);
    const auto w = make_wave(p, o.k, o.omega);
    const auto r = run_verify(p, w, parse_branch(o.branch), o.points, o.h, o.kappa1, o.kappa2);
    json doc;
    doc["class"] = std::string(to_string(p.model));
    doc["wave"] = wave_json(w);
    doc["thresholds"] = {{"finite_difference", kFdThreshold}, {"exact", kExactThreshold}};
    doc["finite_difference"] = report_json(r.fd);
    doc["exact"] = json::array();
    for (const auto& e : r.exact) doc["exact"].push_back(report_json(e));
    doc["passed"] = r.passed;
    write_text(output_dir(out_dir) / o.report, doc.dump(2) + "\n");
    out << "finite_difference max_rel = " << io::format_17g(r.fd.max_rel) << '\n';
    for (const auto& e : r.exact) {
        out << e.equation << " max_rel = " << io::format_17g(e.max_rel) << '\n';
    }
    out << (r.passed ? "PASS" : "FAIL") << '\n';
    return r.passed ? kExitOk : kExitValidation;
}

// ---- simulate ------------------------------------------------------------

struct SimulateOptions {
    std::string params;
    double x0 = 0.0;
    double x1 = 1.0;
    std::string resolutions = "4e-3,2e-3,1e-3";
    std::optional<double> t_end;
    double k = 1.0;
    std::optional<double> omega;
    double energy_bound = 1e-4;
    std::size_t snapshot_every = 0;
    double cfl = kCflLimit;
};

int cmd_simulate(const SimulateOptions& o, const std::string& out_dir, std::ostream& out) {
    const auto p = load_params(o.params);
    if (p.model != ModelClass::RealCaseI) throw ConstraintError("simulate: Case I parameters required");
    auto w = WaveVector::on_shell({o.k}, p.m);
    if (o.omega) w.omega = *o.omega;
    const double t_end = o.t_end.value_or(wave_period(w));
    const auto dxs = parse_list(o.resolutions);

    std::vector<ConvergenceRow> rows;
    std::optional<ResolutionRun> finest;
    for (double dx : dxs) {
        auto run = run_resolution(p, w, o.x0, o.x1, t_end, dx, o.cfl, o.snapshot_every);
        if (!rows.empty()) {
            const auto& prev = rows.back();
            run.row.observed_order =
                std::log(prev.l2_error / run.row.l2_error) / std::log(prev.dx / run.row.dx);
        }
        rows.push_back(run.row);
        if (!finest || run.row.dx < finest->row.dx) finest = std::move(run);
    }

    const auto dir = output_dir(out_dir);
    std::ostringstream conv;
    write_convergence_csv(conv, rows);
    write_text(dir / "convergence.csv", conv.str());
    write_text(dir / "evolution_log.json", to_json(finest->log) + "\n");
    std::ostringstream snap;
    write_snapshot_csv(snap, finest->final_grid, p, w);
    write_text(dir / "snapshot_final.csv", snap.str());

    bool passed = rows.size() >= 2;
    for (const auto& r : rows) {
        out << "dx = " << io::format_17g(r.dx) << "  l2 = " << io::format_17g(r.l2_error);
        if (r.observed_order) {
            out << "  order = " << io::format_17g(*r.observed_order);
            passed = passed && *r.observed_order >= kOrderLow && *r.observed_order <= kOrderHigh;
        }
        out << "  drift = " << io::format_17g(r.energy_drift) << '\n';
    }
    const double drift = finest->row.energy_drift;
    passed = passed && std::abs(drift) < o.energy_bound;
    out << (passed ? "PASS" : "FAIL") << '\n';
    return passed ? kExitOk : kExitValidation;
}

// ---- soliton -------------------------------------------------------------

struct SolitonOptions {
    double alpha = 1.0;
    double q = 2.0;
    double omega = std::sqrt(2.0);
    double k = 1.0;
    std::optional<double> m;
    double c1 = 1.0;
    double c2 = 1.0;
    int nu = kDefaultSpacetimeDimension;
    bool plot = false;
    double zhat_max = 10.0;
};

int cmd_soliton(const SolitonOptions& o, const std::string& out_dir, std::ostream& out) {
    WaveVector w;
    w.omega = o.omega;
    w.k = {o.k};
    if (o.m) {
        w.m = *o.m;
    } else {
        const double m2 = o.omega * o.omega - o.k * o.k;
        w.m = m2 > 0.0 ? std::sqrt(m2) : 1.0;
    }
    const auto s = make_soliton_setup(o.alpha, o.q, w, o.c1, o.c2, o.nu);
    const double quad = soliton_energy(s, EnergyMethod::AdaptiveQuadrature);
    const double closed = soliton_energy(s, EnergyMethod::ClosedForm);
    out << "energy_quadrature = " << io::format_17g(quad) << '\n';
    out << "energy_closed_form = " << io::format_17g(closed) << '\n';
    out << "relative_difference = " << io::format_17g(std::abs(quad - closed) / std::abs(closed))
        << '\n';

    const auto profile = density_profile(s, o.zhat_max);
    const auto dir = output_dir(out_dir);
    std::ostringstream csv;
    write_profile_csv(csv, profile);
    write_text(dir / "profile.csv", csv.str());
    if (o.plot) {
        std::ostringstream svg;
        std::ostringstream title;
        title << "alpha = " << io::format_shortest(o.alpha) << ", q = " << io::format_shortest(o.q);
        write_profile_svg(svg, profile, title.str());
        write_text(dir / "profile.svg", svg.str());
    }
    return kExitOk;
}

// ---- sweep ---------------------------------------------------------------

struct SweepOptions {
    std::string model = "complex";
    std::string alpha = "1";
    std::string q = "1.5";
    std::string a1 = "0";
    std::string theta = "0.5";
    std::string b = "1";
    double c = 1.0;
    int nu = kDefaultSpacetimeDimension;
    double m = 1.0;
    std::size_t points = 10;
    std::string output = "sweep.csv";
};

int cmd_sweep(const SweepOptions& o, const std::string& out_dir, std::ostream& out) {
    const auto model = parse_model_class(o.model);
    const auto alphas = parse_range(o.alpha);
    const auto qs = model == ModelClass::Complex ? parse_range(o.q) : std::vector<double>{NAN};
    const auto a1s = model == ModelClass::Complex ? parse_range(o.a1) : std::vector<double>{NAN};
    const auto thetas =
        model == ModelClass::RealCaseII ? parse_range(o.theta) : std::vector<double>{NAN};
    const auto bs = model == ModelClass::Complex ? std::vector<double>{NAN} : parse_range(o.b);

    std::ostringstream csv;
    csv << "class,alpha,q,a1,theta,b,gamma,a2,beta,delta,fd_max_rel,exact_max_rel,status\n";
    std::size_t ok = 0;
    std::size_t total = 0;
    for (double alpha : alphas)
        for (double q : qs)
            for (double a1 : a1s)
                for (double theta : thetas)
                    for (double b : bs) {
                        ++total;
                        SolveOptions so;
                        so.model = o.model;
                        so.alpha = alpha;
                        if (!std::isnan(q)) so.q = q;
                        if (!std::isnan(a1)) so.a1 = a1;
                        if (!std::isnan(theta)) so.theta = theta;
                        if (!std::isnan(b)) so.b = b;
                        so.c = o.c;
                        so.nu = o.nu;
                        so.m = o.m;
                        ModelParams p;
                        p.model = model;
                        p.alpha = alpha;
                        p.q = q;
                        p.a1 = a1;
                        p.theta = theta;
                        p.b = b;
                        p.gamma = p.a2 = p.beta = p.delta = NAN;
                        double fd = NAN;
                        double exact = NAN;
                        std::string status;
                        try {
                            p = solve_from(so);
                            require_valid(p);
                            const auto w = WaveVector::on_shell(default_k(p.nu), p.m);
                            const auto r = run_verify(p, w, Branch::Cos, o.points, std::nullopt, 1.0, 1.0);
                            fd = r.fd.max_rel;
                            exact = 0.0;
                            for (const auto& e : r.exact) exact = std::max(exact, e.max_rel);
                            status = r.passed ? "pass" : "fail";
                            if (r.passed) ++ok;
                        } catch (const Error& e) {
                            status = "error";
                        }
                        csv << to_string(model);
                        for (double v : {p.alpha, p.q, p.a1, p.theta, p.b, p.gamma, p.a2, p.beta,
                                         p.delta, fd, exact}) {
                            csv << ',' << io::format_17g(v);
                        }
                        csv << ',' << status << '\n';
                    }
    write_text(output_dir(out_dir) / o.output, csv.str());
    out << ok << " of " << total << " parameter sets verified\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    try {
        args = expand_config(raw_args.empty() ? std::vector<std::string>{"nlkg"} : raw_args);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App app{"Multi-parametric nonlinear Klein-Gordon workbench", "nlkg"};
    app.require_subcommand(1);
    std::string out_dir = ".";
    std::string config;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out-dir", out_dir, "output directory (NLKG_OUT overrides)");
        sub->add_option("--config", config, "file of name = value defaults");
    };

    SolveOptions solve;
    auto* s_solve = app.add_subcommand("solve", "resolve a parameter set for one class");
    add_solve_options(s_solve, solve);
    s_solve->add_option("--output", solve.output, "also write the record to this file");
    add_common(s_solve);

    VerifyOptions verify;
    auto* s_verify = app.add_subcommand("verify", "residual verification of a parameter record");
    s_verify->set_help_flag("--help", "Print this help message and exit");
    s_verify->add_option("--params", verify.params, "parameter record file")->required();
    s_verify->add_option("--k", verify.k, "comma-separated wave vector");
    s_verify->add_option("--omega", verify.omega, "defaults to the on-shell value");
    s_verify->add_option("--points", verify.points)->capture_default_str();
    s_verify->add_option("--h", verify.h, "finite-difference step");
    s_verify->add_option("--kappa1,--chi1", verify.kappa1)->capture_default_str();
    s_verify->add_option("--kappa2,--chi2", verify.kappa2)->capture_default_str();
    s_verify->add_option("--branch", verify.branch, "cos | sin")->capture_default_str();
    s_verify->add_option("--report", verify.report)->capture_default_str();
    add_common(s_verify);

    SimulateOptions sim;
    auto* s_sim = app.add_subcommand("simulate", "1+1D Case I lattice convergence study");
    s_sim->add_option("--params", sim.params, "Case I parameter record file")->required();
    s_sim->add_option("--x0", sim.x0)->required();
    s_sim->add_option("--x1", sim.x1)->required();
    s_sim->add_option("--resolutions", sim.resolutions, "comma-separated dx values")
        ->capture_default_str();
    s_sim->add_option("--t-end", sim.t_end, "defaults to one period 2 pi / omega");
    s_sim->add_option("--k", sim.k)->capture_default_str();
    s_sim->add_option("--omega", sim.omega, "defaults to the on-shell value");
    s_sim->add_option("--energy-bound", sim.energy_bound)->capture_default_str();
    s_sim->add_option("--snapshot-every", sim.snapshot_every, "steps between log entries");
    s_sim->add_option("--cfl", sim.cfl)->capture_default_str();
    add_common(s_sim);

    SolitonOptions sol;
    auto* s_sol = app.add_subcommand("soliton", "renormalized soliton energy and profile");
    s_sol->add_option("--alpha", sol.alpha)->capture_default_str();
    s_sol->add_option("--q", sol.q)->capture_default_str();
    s_sol->add_option("--omega", sol.omega)->capture_default_str();
    s_sol->add_option("--k", sol.k)->capture_default_str();
    s_sol->add_option("--m", sol.m, "defaults to sqrt(omega^2 - k^2)");
    s_sol->add_option("--c1", sol.c1)->capture_default_str();
    s_sol->add_option("--c2", sol.c2)->capture_default_str();
    s_sol->add_option("--nu", sol.nu)->capture_default_str();
    s_sol->add_flag("--plot", sol.plot, "write profile.svg");
    s_sol->add_option("--zhat-max", sol.zhat_max)->capture_default_str();
    add_common(s_sol);

    SweepOptions sweep;
    auto* s_sweep = app.add_subcommand("sweep", "grid sweep of solve + verify");
    s_sweep->add_option("--class", sweep.model)->capture_default_str();
    s_sweep->add_option("--alpha", sweep.alpha, "start:stop:count or value")->capture_default_str();
    s_sweep->add_option("--q", sweep.q)->capture_default_str();
    s_sweep->add_option("--a1", sweep.a1)->capture_default_str();
    s_sweep->add_option("--theta", sweep.theta)->capture_default_str();
    s_sweep->add_option("--b", sweep.b)->capture_default_str();
    s_sweep->add_option("--c", sweep.c)->capture_default_str();
    s_sweep->add_option("--nu", sweep.nu)->capture_default_str();
    s_sweep->add_option("--m", sweep.m)->capture_default_str();
    s_sweep->add_option("--points", sweep.points)->capture_default_str();
    s_sweep->add_option("--output", sweep.output)->capture_default_str();
    add_common(s_sweep);

    try {
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (s_solve->parsed()) return cmd_solve(solve, out_dir, out);
        if (s_verify->parsed()) return cmd_verify(verify, out_dir, out);
        if (s_sim->parsed()) return cmd_simulate(sim, out_dir, out);
        if (s_sol->parsed()) return cmd_soliton(sol, out_dir, out);
        if (s_sweep->parsed()) return cmd_sweep(sweep, out_dir, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

}  // namespace nlkg::cli
