#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cocontact/expr.hpp"

namespace cocontact {

/// Value with first derivatives over the field's coordinates.
struct Derivative1 {
  double value = 0.0;
  Eigen::VectorXd gradient;
};

/// Value with first and second derivatives; hessian is exactly symmetric
/// because every propagation rule fills it from symmetric updates.
struct Derivative2 {
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

/// Scalar function on a named coordinate tuple, with derivatives propagated
/// forward through the expression tree in one walk. Inputs are ordered like
/// `vars`; a length mismatch is an ArityError, a non-finite intermediate a
/// NumericDomainError.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(Expr e, std::vector<std::string> vars);

  static ScalarField parse(
      const std::string& text, const std::vector<std::string>& vars,
      const std::vector<std::pair<std::string, std::string>>& aliases = {});

  int arity() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Expr& expr() const { return expr_; }
  bool valid() const { return expr_.valid(); }

  /// Index of a coordinate name, -1 when absent.
  int var_index(const std::string& name) const;

  double eval(std::span<const double> x) const;
  Derivative1 eval_grad(std::span<const double> x) const;
  Derivative2 eval_hess(std::span<const double> x) const;

  /// Value plus the single derivative along coordinate `dir`; allocation-free
  /// fast path for integrator inner loops.
  std::pair<double, double> eval_dual(std::span<const double> x, int dir) const;

 private:
  Expr expr_;
  std::vector<std::string> vars_;
};

/// Re-expresses `f` over `target_vars` by matching coordinate names; every
/// coordinate of `f` must appear in the target list.
ScalarField embed(const ScalarField& f, const std::vector<std::string>& target_vars);

/// Max relative discrepancy between the propagated gradient and central
/// differences of the value at the given step. Rejects non-positive steps.
double fd_check(const ScalarField& f, std::span<const double> x, double step);

/// Same discrepancy measure between the propagated hessian and central
/// differences of the propagated gradient.
double fd_check_hessian(const ScalarField& f, std::span<const double> x, double step);

}  // namespace cocontact
