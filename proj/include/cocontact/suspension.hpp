#pragma once

#include "cocontact/dynamics.hpp"
#include "cocontact/hamiltonian.hpp"

namespace cocontact {

/// A parameter-free system: the generator h never reads the parameter
/// slots, so the whole structure lives on the bundle without them. The
/// carrier keeps the full-frame field; parameter slots are pinned to zero
/// when evaluating.
struct KContactSystem {
  Signature sig;
  PhaseFrame frame;
  ScalarField h;

  PhasePoint attach(const ContactPoint& c) const { return c.attach(Eigen::VectorXd::Zero(sig.k)); }
  double eval(const ContactPoint& c) const;
  Derivative1 grad(const ContactPoint& c) const;
};

/// Max |dh/dt^a| over the samples.
double autonomy_defect(const HamiltonianSystem& sys, const std::vector<PhasePoint>& samples);

bool is_autonomous(const HamiltonianSystem& sys, const std::vector<PhasePoint>& samples,
                   double tol = 1e-12);

/// Strips the parameter dependence; throws StructureError when the defect
/// over the samples exceeds tol.
KContactSystem reduce_autonomous(const HamiltonianSystem& sys,
                                 const std::vector<PhasePoint>& samples, double tol = 1e-12);

/// Coefficient tables of a k-vector on the parameter-free bundle.
struct ContactKVectorCoeffs {
  Signature sig;
  Eigen::MatrixXd B;               // k x n
  std::vector<Eigen::MatrixXd> C;  // k entries, each n x k
  Eigen::MatrixXd D;               // k x k
};

/// Determined parts plus uniform-trace gauge, mirroring the full canonical
/// field with the parameter block removed.
ContactKVectorCoeffs contact_canonical_kvector(const KContactSystem& sys, const ContactPoint& c);

/// Re-attaches parameter directions: A = identity, everything else copied.
KVectorCoeffs suspend(const ContactKVectorCoeffs& X);

struct ContactKvResidualReport {
  Eigen::VectorXd form_eq;
  double contact_eq = 0.0;

  double max_eq() const { return std::max(form_eq.cwiseAbs().maxCoeff(), contact_eq); }
};

/// Residuals of the contact field equations, evaluated against the
/// canonical forms of the parameter-free bundle.
ContactKvResidualReport kcontact_residual(const KContactSystem& sys,
                                          const ContactKVectorCoeffs& X, const ContactPoint& c);

/// Residual groups of a parameter-free section (config/momentum/action as
/// on the full bundle; the parameter group is absent).
HdwResidual kcontact_section_residual(const KContactSystem& sys, const ProlongedSection& ps,
                                      const std::vector<int>& idx);

ResidualSummary kcontact_section_summary(const KContactSystem& sys, const ProlongedSection& ps);

/// Marks the section as parameter-free; arrays are copied untouched.
GridSection drop_parameters(const GridSection& s);

/// Re-attaches the parameter interpretation; arrays are copied untouched.
GridSection attach_parameters(const GridSection& s);

struct SectionRoundtrip {
  GridSection dropped;
  GridSection reattached;
  bool bitwise_equal = false;
};

/// drop then attach; bitwise_equal compares every stored array of the
/// result with the input.
SectionRoundtrip roundtrip_sections(const GridSection& s);

}  // namespace cocontact
