#pragma once

#include <optional>

#include "cocontact/dynamics.hpp"
#include "cocontact/hamiltonian.hpp"
#include "cocontact/lagrangian.hpp"

namespace cocontact {

/// Stored samples of a k=1 run. Sample m sits at t[m] = t0 + m * dt_store;
/// every save_every-th integration step is kept, first and last included.
struct OdeTrajectory {
  Signature sig;
  std::vector<double> t;
  std::vector<Eigen::VectorXd> q;
  std::vector<Eigen::VectorXd> p;
  std::vector<double> z;
  double dt = 0.0;
  double dt_store = 0.0;

  PhasePoint point_at(int m) const;
};

/// Fixed-step fourth-order Runge-Kutta on (q, p, z); the parameter advances
/// at unit rate from x0's value. duration must be a whole number of steps.
/// Throws SolverError with the last finite time on blow-up.
OdeTrajectory integrate_k1(const HamiltonianSystem& sys, const PhasePoint& x0, double duration,
                           double dt, int save_every = 1);

struct OdeDiagnostics {
  std::vector<double> h;           // generator along the path
  std::vector<double> z_residual;  // five-point action-rate defect per inner sample
  double max_z_residual = 0.0;
};

OdeDiagnostics ode_diagnostics(const HamiltonianSystem& sys, const OdeTrajectory& traj);

/// One-axis section over the stored times.
GridSection ode_section(const HamiltonianSystem& sys, const OdeTrajectory& traj);

enum class Boundary { Periodic, FixedEnds };

/// Damped nonlinear string run setup: density ut^2/2 - f(t1, ux) - g(t1, u)
/// with decay profile gamma(x). dt = 0 takes the step from the stability
/// bound; an explicit dt must respect it and divide the duration.
struct WaveConfig {
  ScalarField f;      // over a subset of (t1, ux)
  ScalarField g;      // over a subset of (t1, u)
  ScalarField gamma;  // over a subset of (x)
  ScalarField u0;     // over (x)
  ScalarField v0;     // over (x)

  int nx = 128;
  double x0 = 0.0;
  double x1 = 2.0 * 3.14159265358979323846;
  Boundary boundary = Boundary::Periodic;
  double t0 = 0.0;
  double duration = 1.0;
  double dt = 0.0;
  double cfl = 0.5;
  int save_every = 1;
};

/// Space-time arrays of a k=2 run; snapshot m is at t[m]. The second action
/// component is identically zero by the gauge choice, so only z^t is stored.
struct WaveTrajectory {
  WaveConfig cfg;
  Eigen::VectorXd x;
  double dx = 0.0;
  std::vector<double> t;
  std::vector<Eigen::VectorXd> u;
  std::vector<Eigen::VectorXd> w;   // time rate of u
  std::vector<Eigen::VectorXd> ux;  // centered space rate, stored per snapshot
  std::vector<Eigen::VectorXd> zt;
  double dt = 0.0;
  double dt_store = 0.0;
};

/// Method of lines: centered space differences for ux and for the flux of
/// s = df/dux, fourth-order Runge-Kutta in time, action accumulated from the
/// density with the z^x = 0 gauge. Convexity of f in ux is required at the
/// initial data; a violated stability bound is a ConfigError, non-finite
/// state a SolverError stamped with the last finite time.
WaveTrajectory integrate_wave(const WaveConfig& cfg);

struct WaveDiagnostics {
  std::vector<double> energy;       // quadrature of w^2/2 + f + g per snapshot
  std::vector<double> diss_rate;    // quadrature of gamma * w^2 per snapshot
  std::vector<double> dissipation;  // cumulative trapezoid of diss_rate
  std::vector<double> balance;      // |E(t) - E(0) + dissipation(t)|
  double max_balance_rel = 0.0;     // max balance over max(1, |E(0)|)
  std::vector<double> z_residual;   // action-rate defect per inner snapshot
  double max_z_residual = 0.0;
  bool energy_nonincreasing = true;  // with relative slack 1e-12 per step
};

WaveDiagnostics wave_diagnostics(const WaveTrajectory& traj);

/// Space-time section of the stored snapshots. The velocity side keeps
/// (w, ux) as fiber values; the momentum side maps them through the fiber
/// derivative of the density.
GridSection wave_section(const WaveTrajectory& traj, Side side);

/// L2 distance of the final snapshot from a reference u(t, x).
double wave_final_error(const WaveTrajectory& traj, const ScalarField& u_ref);

struct ConvergenceLevel {
  double h = 0.0;      // refinement parameter: dx (wave) or dt (k=1)
  double error = 0.0;  // against the reference
  double z_residual = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceLevel> levels;
  std::vector<double> error_order;       // log2 ratios between consecutive levels
  std::vector<double> z_residual_order;  // same for the action-rate defect
  bool error_monotone = true;

  std::string csv() const;
};

/// Runs `levels` wave refinements doubling nx from cfg (dt from the
/// stability bound each time) and measures the final-time error against
/// u_ref. Needs at least 3 levels.
ConvergenceTable convergence_wave(const WaveConfig& cfg, int levels, const ScalarField& u_ref);

/// Same for k=1 runs, halving dt from dt0; error is the max defect of the
/// first configuration coordinate against q_ref(t) over stored samples.
ConvergenceTable convergence_k1(const HamiltonianSystem& sys, const PhasePoint& x0,
                                double duration, double dt0, int levels,
                                const std::function<double(double)>& q_ref);

}  // namespace cocontact
