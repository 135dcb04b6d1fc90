#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlkg/params.hpp"
#include "nlkg/waveforms.hpp"

namespace nlkg {

enum class Boundary { AnalyticDirichlet };

inline constexpr double kCflLimit = 0.5;
// phi_floor = kPhiFloorFactor * c * m^delta.
inline constexpr double kPhiFloorFactor = 1e-8;

struct Domain1D {
    double x0 = 0.0;
    double x1 = 1.0;
    std::size_t n = 2;
};

// Two time levels of the 1+1D Case I field; phi_curr is at `time`,
// phi_prev at `time - dt`. A negative dt evolves backwards.
struct Grid1D {
    double x0 = 0.0;
    double dx = 0.0;
    std::size_t n = 0;
    double dt = 0.0;
    std::vector<double> phi_prev;
    std::vector<double> phi_curr;
    double time = 0.0;
    Boundary boundary = Boundary::AnalyticDirichlet;
    Branch branch = Branch::Cos;
    double phi_floor = 0.0;

    [[nodiscard]] double x(std::size_t i) const noexcept { return x0 + static_cast<double>(i) * dx; }
};

// Samples the travelling wave at t = -dt and t = 0. Throws DomainError when
// the analytic profile leaves its positivity window on the grid.
[[nodiscard]] Grid1D init_from_analytic(const ModelParams& p, const WaveVector& w, Domain1D domain,
                                        double dt, Branch branch = Branch::Cos);

// Leapfrog update of
//   Phi_tt = Phi_xx - ((alpha-1)/2) Phi^-1 (Phi_t^2 - Phi_x^2) - theta b^2 m^2 Phi
// with Phi_t^2 taken as the product of the forward and backward differences,
// which keeps the update explicit, second order and time-reversible.
void advance(Grid1D& g, const ModelParams& p, const WaveVector& w);
[[nodiscard]] Grid1D step(Grid1D g, const ModelParams& p, const WaveVector& w);

// Swaps the two levels and negates dt.
[[nodiscard]] Grid1D reversed(Grid1D g);

// Trapezoid quadrature of the Case I density at the half level time - dt/2.
[[nodiscard]] double energy_total_case1(const Grid1D& g, const ModelParams& p);

// Net energy inflow [alpha Phi^(alpha-1) Phi_x Phi_t] evaluated on the
// analytic solution at the two boundary points.
[[nodiscard]] double boundary_power(const ModelParams& p, const WaveVector& w, Branch branch,
                                    double x0, double x1, double t);

// sqrt(dx * sum (phi - phi_exact)^2) at g.time.
[[nodiscard]] double l2_error(const Grid1D& g, const ModelParams& p, const WaveVector& w);

struct Snapshot {
    double time = 0.0;
    double l2_error = 0.0;
    double energy = 0.0;         // at time - dt/2
    double boundary_work = 0.0;  // integrated inflow since the first snapshot
    double energy_drift = 0.0;   // (E - E0 - work)/|E0|
    double max_abs_phi = 0.0;
};

struct EvolutionLog {
    std::vector<Snapshot> snapshots;
    std::size_t steps = 0;

    [[nodiscard]] double max_abs_drift() const noexcept;
};

// Steps until t_end (rounded to whole steps), recording every
// `snapshot_every` steps plus the first and last level.
[[nodiscard]] EvolutionLog evolve(Grid1D& g, const ModelParams& p, const WaveVector& w, double t_end,
                                  std::size_t snapshot_every);

// 2 pi / omega, one cycle of the phase variable.
[[nodiscard]] double wave_period(const WaveVector& w);

struct ConvergenceRow {
    double dx = 0.0;
    double dt = 0.0;
    std::size_t steps = 0;
    double l2_error = 0.0;
    std::optional<double> observed_order;  // against the previous row
    double energy_drift = 0.0;
};

// One resolution of a convergence study: dx rounded so the grid covers
// [x0, x1] exactly, dt = t_end / ceil(t_end / (cfl dx)).
struct ResolutionRun {
    ConvergenceRow row;
    EvolutionLog log;
    Grid1D final_grid;
};

[[nodiscard]] ResolutionRun run_resolution(const ModelParams& p, const WaveVector& w, double x0,
                                           double x1, double t_end, double dx,
                                           double cfl = kCflLimit, std::size_t snapshot_every = 0);

[[nodiscard]] std::vector<ConvergenceRow> convergence_study(const ModelParams& p, const WaveVector& w,
                                                            double x0, double x1, double t_end,
                                                            std::span<const double> dxs,
                                                            double cfl = kCflLimit);

// x, phi, phi_analytic, abs_err
void write_snapshot_csv(std::ostream& out, const Grid1D& g, const ModelParams& p, const WaveVector& w);
void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows);
[[nodiscard]] std::string to_json(const EvolutionLog& log);

}  // namespace nlkg
