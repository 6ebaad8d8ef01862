#pragma once

#include "cocontact/autodiff.hpp"
#include "cocontact/geometry.hpp"
#include "cocontact/lagrangian.hpp"
#include "cocontact/phase.hpp"

namespace cocontact {

/// Hamiltonian function on the momentum-side bundle, carrying the Darboux
/// structure of canonical_frame.
struct HamiltonianSystem {
  Signature sig;
  PhaseFrame frame;  // momentum-side coordinate names
  ScalarField h;     // over frame.names

  double eval(const PhasePoint& x) const;
  Derivative1 grad(const PhasePoint& x) const;
};

HamiltonianSystem make_hamiltonian(Signature sig, const ScalarField& h);

/// Coefficient tables of a k-vector field at a point: leg a is
/// A(a,b) d/dt^b + B(a,i) d/dq^i + C[a](i,b) d/dfiber(i,b) + D(a,b) d/dz^b.
struct KVectorCoeffs {
  Signature sig;
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  std::vector<Eigen::MatrixXd> C;
  Eigen::MatrixXd D;

  static KVectorCoeffs zero(Signature sig);
  static KVectorCoeffs from_legs(Signature sig, const std::vector<VectorAtPoint>& legs);

  VectorAtPoint leg(int a) const;
};

/// The parts of the field equations that are fixed pointwise in Darboux
/// coordinates: A is the identity, B the fiber derivative of h, traceC(i) the
/// forced divergence of the momenta conjugate to q^i, traceD the forced
/// divergence of the action block.
struct HdwDetermined {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::VectorXd traceC;
  double traceD = 0.0;
};

HdwDetermined hdw_determined(const HamiltonianSystem& sys, const PhasePoint& x);

/// Determined parts completed with the uniform-trace gauge: the undetermined
/// C and D tables are spread evenly over the diagonal legs, off-diagonal legs
/// zero. Deterministic, no randomness involved.
KVectorCoeffs canonical_kvector(const HamiltonianSystem& sys, const PhasePoint& x);

/// Least-norm solution of the field equations against an arbitrary frame
/// (used on the velocity side, where the structure is not in Darboux form).
KVectorCoeffs solve_kvector(Signature sig, const CocontactFrameAtPoint& f,
                            const ReebFields& reeb, double h_val,
                            const CovectorAtPoint& dh);

/// Velocity-side solution for a regular Lagrangian, built on its Cartan frame
/// with the energy as Hamiltonian function. Any exact solution here is a
/// second-order field: its B table equals the fiber coordinates.
KVectorCoeffs canonical_kvector(const LagrangianSystem& sys, const PhasePoint& x);

/// Residuals of the three field equations for given coefficient tables.
struct KvResidualReport {
  double form_eq = 0.0;     // two-form equation, infinity norm over components
  double contact_eq = 0.0;  // scalar contact pairing equation
  double param_eq = 0.0;    // parameter pairing equation, max over leg pairs

  double max() const { return std::max({form_eq, contact_eq, param_eq}); }
  bool pass(double tol) const { return max() <= tol; }
};

KvResidualReport kvector_residuals(const CocontactFrameAtPoint& f,
                                   const ReebFields& reeb, double h_val,
                                   const CovectorAtPoint& dh, const KVectorCoeffs& X);

/// Residuals against the Darboux frame of `sys` with its exact coordinate
/// Reeb fields.
KvResidualReport verify_kvector(const HamiltonianSystem& sys, const KVectorCoeffs& X,
                                const PhasePoint& x);

/// Velocity-side residuals: Cartan frame, closed-form Reeb fields, energy as
/// Hamiltonian function.
KvResidualReport verify_kvector(const LagrangianSystem& sys, const KVectorCoeffs& X,
                                const PhasePoint& x);

/// Hamiltonian value transported from a Lagrangian: energy at the Newton
/// inverse of the fiber-derivative map under the momentum-side point y.
double h_from_lagrangian(const LagrangianSystem& sys, const PhasePoint& y,
                         const Eigen::MatrixXd& guess);

/// Finite-difference check of the Lie-derivative form of the equations: the
/// per-leg Lie derivatives of the contact forms along a canonical solution,
/// summed, against the forced combination of frame forms. Returns the
/// infinity-norm residual; step is the central-difference spacing.
double lie_reformulation_residual(const HamiltonianSystem& sys, const PhasePoint& x,
                                  double step = 1e-5);

}  // namespace cocontact
