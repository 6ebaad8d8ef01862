#pragma once

#include <functional>

#include "cocontact/hamiltonian.hpp"
#include "cocontact/lagrangian.hpp"
#include "cocontact/phase.hpp"

namespace cocontact {

/// Uniform rectangular parameter grid; axis a runs origin[a] + i * h[a].
/// Flat node order is row-major with the last axis fastest.
struct GridAxes {
  int k = 1;
  std::vector<int> nodes;
  std::vector<double> origin;
  std::vector<double> h;

  int total() const;
  std::vector<int> strides() const;
  void unflatten(int flat, std::vector<int>& idx) const;
  int flatten(const std::vector<int>& idx) const;
  double r_of(int axis, int i) const { return origin[axis] + i * h[axis]; }
  bool interior(const std::vector<int>& idx) const;
  void validate() const;
};

/// Section values sampled over a grid. Parameters are the grid coordinates
/// themselves (never stored), so the parameter block of the field equations
/// is satisfied exactly by construction. contact_level marks a section of
/// the parameter-free bundle; its arrays are identical in layout.
struct GridSection {
  Signature sig;
  Side side = Side::Lagrangian;
  bool contact_level = false;
  GridAxes axes;
  std::vector<std::vector<double>> q;      // n arrays
  std::vector<std::vector<double>> fiber;  // n*k arrays, slot i*k+a
  std::vector<std::vector<double>> z;      // k arrays

  static GridSection allocate(Signature sig, Side side, GridAxes axes);

  /// Fills values from an analytic map r -> point (parameter block ignored).
  static GridSection sample(Signature sig, Side side, GridAxes axes,
                            const std::function<PhasePoint(const Eigen::VectorXd&)>& psi);

  PhasePoint point_at(const std::vector<int>& idx) const;
  Eigen::VectorXd params_at(const std::vector<int>& idx) const;
};

/// Section plus centered-difference derivatives on interior nodes. Boundary
/// nodes hold zeros in the derivative arrays and are excluded from every
/// residual statistic.
struct ProlongedSection {
  GridSection s;
  std::vector<std::vector<double>> dq;      // n*k arrays: slot i*k+a
  std::vector<std::vector<double>> dfiber;  // n*k*k arrays: slot (i*k+a)*k+b
  std::vector<std::vector<double>> dz;      // k*k arrays: slot a*k+b
};

/// Centered differences along every axis; needs at least three nodes per
/// axis.
ProlongedSection prolong(const GridSection& s);

/// Divergence from a second-order field: max |B(a,i) - fiber(i,a)|.
double sopde_residual(const KVectorCoeffs& X, const PhasePoint& x);

/// Euler-Lagrange residual groups at one interior node. param_eq is zero by
/// construction; config_eq, per configuration coordinate, balances the
/// parameter-divergence of the fiber derivatives of L against the forced
/// source; action_eq compares the action divergence to L; holonomy_gap
/// measures how far the fiber values sit from the prolongation derivatives.
struct ElResidual {
  double param_eq = 0.0;
  Eigen::VectorXd config_eq;
  double action_eq = 0.0;
  double holonomy_gap = 0.0;

  double max_eq() const { return std::max(config_eq.cwiseAbs().maxCoeff(), std::max(param_eq, action_eq)); }
};

ElResidual el_residual(const LagrangianSystem& sys, const ProlongedSection& ps,
                       const std::vector<int>& idx);

/// Field-equation residual groups at one interior node of a momentum-side
/// section.
struct HdwResidual {
  double param_eq = 0.0;
  double config_eq = 0.0;
  double momentum_eq = 0.0;
  double action_eq = 0.0;

  double max_eq() const {
    return std::max(std::max(param_eq, config_eq), std::max(momentum_eq, action_eq));
  }
};

HdwResidual hdw_residual(const HamiltonianSystem& sys, const ProlongedSection& ps,
                         const std::vector<int>& idx);

/// Maxima over all interior nodes.
struct ResidualSummary {
  int interior_nodes = 0;
  double max_param = 0.0;
  double max_config = 0.0;
  double max_momentum = 0.0;  // momentum-side only
  double max_action = 0.0;
  double max_holonomy = 0.0;  // velocity-side only

  double max_eq() const {
    return std::max(std::max(max_param, max_config), std::max(max_momentum, max_action));
  }
};

ResidualSummary el_residual_summary(const LagrangianSystem& sys, const ProlongedSection& ps);
ResidualSummary hdw_residual_summary(const HamiltonianSystem& sys, const ProlongedSection& ps);

}  // namespace cocontact
