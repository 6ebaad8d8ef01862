#pragma once

#include <optional>

#include "cocontact/autodiff.hpp"
#include "cocontact/geometry.hpp"
#include "cocontact/phase.hpp"

namespace cocontact {

/// Field Lagrangian on the velocity-side bundle. When built from a base part
/// plus an action-coordinate damping part the two summands are kept, so the
/// split identities can be evaluated exactly.
struct LagrangianSystem {
  Signature sig;
  PhaseFrame frame;   // velocity-side coordinate names
  ScalarField L;      // over frame.names

  bool holonomic = false;
  ScalarField base;     // no action-coordinate dependence
  ScalarField damping;  // no fiber dependence

  double eval(const PhasePoint& x) const { return L.eval(flat_of(x)); }
  static std::vector<double> flat_of(const PhasePoint& x);
};

/// Wraps a full-arity Lagrangian; the field's coordinates must match the
/// velocity-side frame of `sig` (by name, any order).
LagrangianSystem make_lagrangian(Signature sig, const ScalarField& L);

/// Builds L = base + damping where base may reference parameters,
/// configuration and velocities only, damping parameters, configuration and
/// action coordinates only. Violating a slot restriction is an ArityError.
LagrangianSystem assemble_holonomic(Signature sig, const ScalarField& base,
                                    const ScalarField& damping);

/// Energy: the fiber Euler operator applied to L minus L.
double energy(const LagrangianSystem& sys, const PhasePoint& x);

/// Energy of the base part alone (assembled systems only).
double base_energy(const LagrangianSystem& sys, const PhasePoint& x);

/// Damping summand value (assembled systems only).
double damping_value(const LagrangianSystem& sys, const PhasePoint& x);

/// Full coordinate differential of the energy, from one Hessian evaluation.
CovectorAtPoint energy_differential(const LagrangianSystem& sys, const PhasePoint& x);

/// Cartan data at a point: theta holds the fiber-derivative one-forms, eta
/// the contact forms dz - theta, deta their coordinate differentials
/// assembled from the symmetric Hessian (exactly antisymmetric).
struct CartanForms {
  std::vector<CovectorAtPoint> theta;
  std::vector<CovectorAtPoint> eta;
  std::vector<TwoFormAtPoint> deta;
};

CartanForms cartan_contact_forms(const LagrangianSystem& sys, const PhasePoint& x);

/// Structure frame (dt legs plus the Cartan contact data) for axiom checks
/// and Reeb solves on the velocity side.
CocontactFrameAtPoint lagrangian_frame(const LagrangianSystem& sys, const PhasePoint& x);

/// Fiber-fiber Hessian block W((i,a),(j,b)) = d2L/dv^i_a dv^j_b with flat
/// index i*k+a. regular demands an invertible block with condition number
/// below cond_limit; inverse is present only when regular.
struct HessianBlock {
  Eigen::MatrixXd W;
  Eigen::MatrixXd Winv;
  double cond = 0.0;
  bool regular = false;
};

HessianBlock hessian(const LagrangianSystem& sys, const PhasePoint& x,
                     double cond_limit = 1e12);

/// Fiber-derivative transform: copies t, q, z and maps the fiber to momenta.
PhasePoint legendre(const LagrangianSystem& sys, const PhasePoint& x);

/// Newton inversion of the fiber-derivative map at the momentum-side point y,
/// starting from guess (n x k velocities). Damped steps (halving on residual
/// increase), at most max_iter iterations, infinity-norm target tol.
PhasePoint legendre_inverse(const LagrangianSystem& sys, const PhasePoint& y,
                            const Eigen::MatrixXd& guess, double tol = 1e-10,
                            int max_iter = 50);

/// Closed-form Reeb families of a regular Lagrangian: coordinate parameter /
/// action directions corrected through the inverse fiber Hessian against the
/// mixed second derivatives.
ReebFields reeb_closed_form(const LagrangianSystem& sys, const PhasePoint& x);

}  // namespace cocontact
