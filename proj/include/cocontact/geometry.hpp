#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "cocontact/phase.hpp"

namespace cocontact {

/// One-form at a point, components in the flattened coordinate basis.
struct CovectorAtPoint {
  Eigen::VectorXd c;

  static CovectorAtPoint zero(int dim) { return {Eigen::VectorXd::Zero(dim)}; }
  static CovectorAtPoint basis(int dim, int index);
};

/// Tangent vector at a point, components in the flattened coordinate basis.
struct VectorAtPoint {
  Eigen::VectorXd v;

  static VectorAtPoint zero(int dim) { return {Eigen::VectorXd::Zero(dim)}; }
  static VectorAtPoint basis(int dim, int index);
};

/// Two-form at a point stored as its full antisymmetric coefficient matrix,
/// m(a, b) = w(e_a, e_b). Built through add_wedge so m = -m^T holds exactly.
struct TwoFormAtPoint {
  Eigen::MatrixXd m;

  static TwoFormAtPoint zero(int dim) { return {Eigen::MatrixXd::Zero(dim, dim)}; }

  /// Adds c * dx^a ^ dx^b.
  void add_wedge(int a, int b, double c) {
    m(a, b) += c;
    m(b, a) -= c;
  }
};

/// Pairing <w, v>.
double contract1(const CovectorAtPoint& w, const VectorAtPoint& v);

/// Interior product: (i_v w)_b = v^a w_ab.
CovectorAtPoint contract2(const TwoFormAtPoint& w, const VectorAtPoint& v);

/// Numerical rank data of a set of covectors stacked as matrix rows.
/// rank counts singular values above tol * largest; kernel columns span the
/// joint annihilated subspace.
struct RankResult {
  int rank = 0;
  Eigen::VectorXd singular_values;
  Eigen::MatrixXd kernel;
};

RankResult rank_of(const Eigen::MatrixXd& rows, double tol = 1e-10);

/// The structure one-forms and form differentials of a k-cocontact frame
/// evaluated at one point.
struct CocontactFrameAtPoint {
  int k = 0;
  int dim = 0;
  std::vector<CovectorAtPoint> tau;
  std::vector<CovectorAtPoint> eta;
  std::vector<TwoFormAtPoint> deta;
};

using StructureFn = std::function<CocontactFrameAtPoint(const PhasePoint&)>;

/// One rank condition checked at one point.
struct ConditionCheck {
  std::string name;
  int computed = 0;
  int expected = 0;
  bool pass = false;
};

struct PointAxiomReport {
  int index = 0;
  std::vector<ConditionCheck> conditions;
  bool pass = false;
};

/// Aggregate of the pointwise rank-condition checks; failures lists one line
/// per violated condition, naming it.
struct AxiomReport {
  double tol = 1e-10;
  std::vector<PointAxiomReport> points;
  std::vector<std::string> failures;
  bool all_pass = false;

  std::string to_json() const;
};

/// Checks the defining rank conditions of a k-cocontact structure at each
/// supplied point: corank of the contact and parameter annihilators, rank of
/// the joint kernel of the form differentials, the pairwise intersection
/// ranks, and triviality of the triple intersection.
AxiomReport verify_axioms(const StructureFn& structure,
                          const std::vector<PhasePoint>& pts, double tol = 1e-10);

/// Same check for a frame already evaluated at a point.
PointAxiomReport check_frame_axioms(const CocontactFrameAtPoint& f, double tol = 1e-10);

/// The two Reeb families at a point, indexed by parameter leg.
struct ReebFields {
  std::vector<VectorAtPoint> rt;  // pair to 1 against the tau of their leg
  std::vector<VectorAtPoint> rz;  // pair to 1 against the eta of their leg
};

/// Solves the defining linear relations of both Reeb families by a least-norm
/// complete-orthogonal solve; throws StructureError if the relations are not
/// solvable to residual_tol (degenerate frame).
ReebFields solve_reeb(const CocontactFrameAtPoint& f, double residual_tol = 1e-9);

/// Darboux-form frame on the full bundle at a point of the momentum side:
/// tau = dt, eta = dz - p dq, deta = dq ^ dp.
CocontactFrameAtPoint canonical_frame(const Signature& sig, const PhasePoint& x);

}  // namespace cocontact
