#pragma once

#include <memory>
#include <string>
#include <vector>

namespace cocontact {

// Closed catalogue of field primitives: constants, named coordinates,
// arithmetic (+, -, *, /), integer powers, and sin/cos/exp. Fields are
// declared as expressions over this catalogue, never as arbitrary code,
// so value and derivative propagation share one tree walk.
struct ExprNode {
  enum class Op : unsigned char {
    Const,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Sin,
    Cos,
    Exp,
    Pow
  };

  Op op = Op::Const;
  double cval = 0.0;  // Const
  int var = -1;       // Var: index into the owning field's coordinate list
  int ipow = 0;       // Pow: integer exponent
  std::shared_ptr<const ExprNode> a, b;
};

using ExprNodePtr = std::shared_ptr<const ExprNode>;

/// Immutable handle to an expression tree; copies are cheap and share nodes.
class Expr {
 public:
  Expr() = default;
  explicit Expr(ExprNodePtr n) : node_(std::move(n)) {}

  static Expr constant(double c);
  static Expr var(int index);

  bool valid() const { return node_ != nullptr; }
  const ExprNodePtr& ptr() const { return node_; }
  const ExprNode& node() const { return *node_; }

  /// Largest referenced coordinate index plus one (0 for constants).
  int min_arity() const;

  /// New tree with every coordinate index i replaced by table[i].
  /// The table must cover every index the tree references.
  Expr remap(const std::vector<int>& table) const;

 private:
  ExprNodePtr node_;
};

Expr operator+(const Expr& x, const Expr& y);
Expr operator-(const Expr& x, const Expr& y);
Expr operator*(const Expr& x, const Expr& y);
Expr operator/(const Expr& x, const Expr& y);
Expr operator-(const Expr& x);
inline Expr operator+(double c, const Expr& y) { return Expr::constant(c) + y; }
inline Expr operator-(double c, const Expr& y) { return Expr::constant(c) - y; }
inline Expr operator*(double c, const Expr& y) { return Expr::constant(c) * y; }
inline Expr operator/(double c, const Expr& y) { return Expr::constant(c) / y; }
inline Expr operator+(const Expr& x, double c) { return x + Expr::constant(c); }
inline Expr operator-(const Expr& x, double c) { return x - Expr::constant(c); }
inline Expr operator*(const Expr& x, double c) { return x * Expr::constant(c); }
inline Expr operator/(const Expr& x, double c) { return x / Expr::constant(c); }

Expr sin(const Expr& x);
Expr cos(const Expr& x);
Expr exp(const Expr& x);
Expr pow(const Expr& x, int p);

/// Parses catalogue expression text. Identifiers resolve through `vars`
/// first, then `aliases` (alias -> canonical name). Throws ParseError with
/// the offending offset on malformed text or unknown identifiers.
Expr parse_expr(const std::string& text, const std::vector<std::string>& vars,
                const std::vector<std::pair<std::string, std::string>>& aliases = {});

/// Renders the tree with explicit parentheses; used by config echo output.
std::string to_string(const Expr& e, const std::vector<std::string>& vars);

}  // namespace cocontact
