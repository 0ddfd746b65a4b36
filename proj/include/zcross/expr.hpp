#ifndef ZCROSS_EXPR_HPP
#define ZCROSS_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "zcross/error.hpp"

namespace zcross {

// Arithmetic expressions over the time variable s and the space variable x.
// Supported: constants, + - * /, ^ with integer exponents, unary minus, and
// sin, cos, exp, tanh, abs, min, max.

enum class ExprKind {
  kConst,
  kVarS,
  kVarX,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,  // integer exponent stored in `value`
  kNeg,
  kSin,
  kCos,
  kExp,
  kTanh,
  kAbs,
  kMin,
  kMax,
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind;
  double value = 0.0;  // kConst payload or kPow exponent
  Expr a, b;
};

Expr make_const(double v);
Expr make_var_s();
Expr make_var_x();
Expr make_unary(ExprKind kind, Expr a);
Expr make_binary(ExprKind kind, Expr a, Expr b);
Expr make_pow(Expr base, long long exponent);

// Which variable to differentiate or probe against.
enum class Var { kS, kX };

// Recursive-descent parse with precedence ^ > unary- > */ > +-, all binaries
// left-associative. Errors carry the byte offset into `text`.
Expr parse_expr(const std::string& text);

double eval(const Expr& e, double s, double x);

// Exact symbolic derivative. abs/min/max nodes are rejected when the
// differentiation variable appears beneath them.
Expr diff_expr(const Expr& e, Var var);

bool depends_on(const Expr& e, Var var);
bool is_constant(const Expr& e, double* value = nullptr);

std::string to_string(const Expr& e);

// Flattened postfix program; much cheaper to evaluate in hot loops than the
// node tree. Evaluation errors match eval().
class CompiledExpr {
public:
  CompiledExpr() = default;
  explicit CompiledExpr(const Expr& e);

  double operator()(double s, double x) const;
  bool valid() const { return !ops_.empty(); }
  // True when the program is the single constant `v`.
  bool is_constant(double* v = nullptr) const;

private:
  struct Op {
    ExprKind kind;
    double value;
  };
  std::vector<Op> ops_;
  std::size_t stack_need_ = 0;
};

}  // namespace zcross

#endif
