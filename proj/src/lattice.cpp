#include "nlkg/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "nlkg/errors.hpp"
#include "nlkg/hamiltonian.hpp"
#include "nlkg/io.hpp"

namespace nlkg {
namespace {

void require_case1(const ModelParams& p) {
    if (p.model != ModelClass::RealCaseI || !p.lagrangian) {
        throw ConstraintError("lattice: only Lagrangian Case I parameters can be evolved");
    }
}

void require_one_dimension(const WaveVector& w) {
    if (w.k.size() != 1) throw ConstraintError("lattice: the wave vector must have one spatial component");
}

double exact(const ModelParams& p, const WaveVector& w, Branch branch, double x, double t) {
    return phi1_real(p, w, branch, std::span<const double>(&x, 1), t);
}

void check_cfl(const Grid1D& g) {
    if (!(std::abs(g.dt) <= kCflLimit * g.dx)) {
        throw ConstraintError("lattice: CFL violated, |dt| must be <= 0.5 dx");
    }
}

bool nonlinear(const ModelParams& p) { return p.alpha != 1.0; }

}  // namespace

Grid1D init_from_analytic(const ModelParams& p, const WaveVector& w, Domain1D domain, double dt,
                          Branch branch) {
    require_case1(p);
    require_one_dimension(w);
    if (domain.n < 3 || !(domain.x1 > domain.x0)) throw ConstraintError("lattice: need x1 > x0 and n >= 3");
    Grid1D g;
    g.x0 = domain.x0;
    g.n = domain.n;
    g.dx = (domain.x1 - domain.x0) / static_cast<double>(domain.n - 1);
    g.dt = dt;
    g.branch = branch;
    g.phi_floor = kPhiFloorFactor * p.c * std::pow(p.m, p.delta);
    check_cfl(g);
    g.phi_prev.resize(g.n);
    g.phi_curr.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        g.phi_prev[i] = exact(p, w, branch, g.x(i), -dt);
        g.phi_curr[i] = exact(p, w, branch, g.x(i), 0.0);
        if (nonlinear(p) && (g.phi_prev[i] <= g.phi_floor || g.phi_curr[i] <= g.phi_floor)) {
            throw DomainError("lattice: initial data below the positivity floor");
        }
    }
    return g;
}

void advance(Grid1D& g, const ModelParams& p, const WaveVector& w) {
    require_case1(p);
    check_cfl(g);
    const double c = 0.5 * (p.alpha - 1.0);
    const double mass = p.theta * p.b * p.b * p.m * p.m;
    const double inv_dx2 = 1.0 / (g.dx * g.dx);
    const double inv_2dx = 0.5 / g.dx;
    const double dt2 = g.dt * g.dt;
    const bool guard = nonlinear(p);

    auto& prev = g.phi_prev;
    const auto& curr = g.phi_curr;
    // next[i] only needs prev[i], so it overwrites prev in place.
    for (std::size_t i = 1; i + 1 < g.n; ++i) {
        const double phi = curr[i];
        const double back = phi - prev[i];
        const double lap = (curr[i + 1] - 2.0 * phi + curr[i - 1]) * inv_dx2;
        const double gx = (curr[i + 1] - curr[i - 1]) * inv_2dx;
        const double rhs = dt2 * (lap + c * gx * gx / phi - mass * phi);
        const double next = (2.0 * phi - prev[i] + c * back + rhs) / (1.0 + c * back / phi);
        if (!std::isfinite(next)) throw NumericalError("lattice: non-finite field value");
        if (guard && next <= g.phi_floor) throw NumericalError("lattice: field fell below the positivity floor");
        prev[i] = next;
    }
    const double t_next = g.time + g.dt;
    prev.front() = exact(p, w, g.branch, g.x(0), t_next);
    prev.back() = exact(p, w, g.branch, g.x(g.n - 1), t_next);
    std::swap(g.phi_prev, g.phi_curr);
    g.time = t_next;
}

Grid1D step(Grid1D g, const ModelParams& p, const WaveVector& w) {
    advance(g, p, w);
    return g;
}

Grid1D reversed(Grid1D g) {
    std::swap(g.phi_prev, g.phi_curr);
    g.time -= g.dt;
    g.dt = -g.dt;
    return g;
}

double energy_total_case1(const Grid1D& g, const ModelParams& p) {
    require_case1(p);
    if (g.n < 3) return 0.0;
    std::vector<double> mid(g.n);
    for (std::size_t i = 0; i < g.n; ++i) mid[i] = 0.5 * (g.phi_prev[i] + g.phi_curr[i]);
    auto density = [&](std::size_t i) {
        double dx;
        if (i == 0) {
            dx = (-3.0 * mid[0] + 4.0 * mid[1] - mid[2]) / (2.0 * g.dx);
        } else if (i + 1 == g.n) {
            dx = (3.0 * mid[i] - 4.0 * mid[i - 1] + mid[i - 2]) / (2.0 * g.dx);
        } else {
            dx = (mid[i + 1] - mid[i - 1]) / (2.0 * g.dx);
        }
        const double dt = (g.phi_curr[i] - g.phi_prev[i]) / g.dt;
        if (mid[i] == 0.0 && dt == 0.0 && dx == 0.0) return 0.0;
        return hamiltonian_density_real1(mid[i], dt, dx, p);
    };
    double sum = 0.5 * (density(0) + density(g.n - 1));
    for (std::size_t i = 1; i + 1 < g.n; ++i) sum += density(i);
    return sum * g.dx;
}

double boundary_power(const ModelParams& p, const WaveVector& w, Branch branch, double x0, double x1,
                      double t) {
    const double amp = p.c * std::pow(p.m, p.delta);
    auto flux = [&](double x) {
        const double z = w.omega * t - w.k[0] * x;
        const auto f = real_profile_jet(p, branch, z);
        const double phi = amp * f.value;
        const double phi_t = amp * f.d1 * w.omega;
        const double phi_x = -amp * f.d1 * w.k[0];
        return p.alpha * std::pow(phi, p.alpha - 1.0) * phi_x * phi_t;
    };
    return flux(x1) - flux(x0);
}

double l2_error(const Grid1D& g, const ModelParams& p, const WaveVector& w) {
    double sum = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
        const double e = g.phi_curr[i] - exact(p, w, g.branch, g.x(i), g.time);
        sum += e * e;
    }
    return std::sqrt(sum * g.dx);
}

double EvolutionLog::max_abs_drift() const noexcept {
    double m = 0.0;
    for (const auto& s : snapshots) m = std::max(m, std::abs(s.energy_drift));
    return m;
}

EvolutionLog evolve(Grid1D& g, const ModelParams& p, const WaveVector& w, double t_end,
                    std::size_t snapshot_every) {
    require_case1(p);
    require_one_dimension(w);
    if (snapshot_every == 0) snapshot_every = 1;
    const double span = t_end - g.time;
    if (span * g.dt < 0.0) throw ConstraintError("evolve: t_end lies behind the grid");
    const auto steps = static_cast<std::size_t>(std::llround(span / g.dt));
    const double x_last = g.x(g.n - 1);

    EvolutionLog log;
    const double e0 = energy_total_case1(g, p);
    double work = 0.0;
    auto record = [&] {
        Snapshot s;
        s.time = g.time;
        s.l2_error = l2_error(g, p, w);
        s.energy = energy_total_case1(g, p);
        s.boundary_work = work;
        s.energy_drift = (s.energy - e0 - work) / std::abs(e0);
        for (double v : g.phi_curr) s.max_abs_phi = std::max(s.max_abs_phi, std::abs(v));
        log.snapshots.push_back(s);
    };
    record();
    for (std::size_t n = 1; n <= steps; ++n) {
        // Energy lives on half levels; Simpson over [t - dt/2, t + dt/2].
        const double t = g.time;
        const double h = g.dt;
        work += h / 6.0 *
                (boundary_power(p, w, g.branch, g.x0, x_last, t - 0.5 * h) +
                 4.0 * boundary_power(p, w, g.branch, g.x0, x_last, t) +
                 boundary_power(p, w, g.branch, g.x0, x_last, t + 0.5 * h));
        advance(g, p, w);
        if (n % snapshot_every == 0 || n == steps) record();
    }
    log.steps = steps;
    return log;
}

double wave_period(const WaveVector& w) {
    if (w.omega == 0.0) throw ConstraintError("wave_period: omega = 0");
    return 2.0 * std::numbers::pi / std::abs(w.omega);
}

ResolutionRun run_resolution(const ModelParams& p, const WaveVector& w, double x0, double x1,
                             double t_end, double dx, double cfl, std::size_t snapshot_every) {
    if (!(cfl > 0.0 && cfl <= kCflLimit)) throw ConstraintError("lattice: cfl must be in (0, 0.5]");
    if (!(dx > 0.0) || !(t_end > 0.0)) throw ConstraintError("lattice: dx and t_end must be positive");
    const auto n = static_cast<std::size_t>(std::llround((x1 - x0) / dx)) + 1;
    ResolutionRun run;
    auto& row = run.row;
    row.dx = (x1 - x0) / static_cast<double>(n - 1);
    row.steps = static_cast<std::size_t>(std::ceil(t_end / (cfl * row.dx) - 1e-9));
    row.dt = t_end / static_cast<double>(row.steps);
    run.final_grid = init_from_analytic(p, w, {x0, x1, n}, row.dt);
    run.log = evolve(run.final_grid, p, w, t_end, snapshot_every == 0 ? row.steps : snapshot_every);
    row.l2_error = run.log.snapshots.back().l2_error;
    row.energy_drift = run.log.max_abs_drift();
    return run;
}

std::vector<ConvergenceRow> convergence_study(const ModelParams& p, const WaveVector& w, double x0,
                                              double x1, double t_end, std::span<const double> dxs,
                                              double cfl) {
    std::vector<ConvergenceRow> rows;
    for (double dx : dxs) {
        auto row = run_resolution(p, w, x0, x1, t_end, dx, cfl).row;
        if (!rows.empty()) {
            const auto& prev = rows.back();
            row.observed_order = std::log(prev.l2_error / row.l2_error) / std::log(prev.dx / row.dx);
        }
        rows.push_back(row);
    }
    return rows;
}

void write_snapshot_csv(std::ostream& out, const Grid1D& g, const ModelParams& p, const WaveVector& w) {
    out << "x,phi,phi_analytic,abs_err\n";
    for (std::size_t i = 0; i < g.n; ++i) {
        const double a = exact(p, w, g.branch, g.x(i), g.time);
        out << io::format_17g(g.x(i)) << ',' << io::format_17g(g.phi_curr[i]) << ','
            << io::format_17g(a) << ',' << io::format_17g(std::abs(g.phi_curr[i] - a)) << '\n';
    }
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
    out << "dx,dt,steps,l2_error,observed_order,energy_drift\n";
    for (const auto& r : rows) {
        out << io::format_17g(r.dx) << ',' << io::format_17g(r.dt) << ',' << r.steps << ','
            << io::format_17g(r.l2_error) << ','
            << (r.observed_order ? io::format_17g(*r.observed_order) : std::string{}) << ','
            << io::format_17g(r.energy_drift) << '\n';
    }
}

std::string to_json(const EvolutionLog& log) {
    nlohmann::json j;
    j["steps"] = log.steps;
    j["max_abs_energy_drift"] = log.max_abs_drift();
    auto& arr = j["snapshots"] = nlohmann::json::array();
    for (const auto& s : log.snapshots) {
        arr.push_back({{"time", s.time},
                       {"l2_error", s.l2_error},
                       {"energy", s.energy},
                       {"boundary_work", s.boundary_work},
                       {"energy_drift", s.energy_drift},
                       {"max_abs_phi", s.max_abs_phi}});
    }
    return j.dump(2);
}

}  // namespace nlkg
