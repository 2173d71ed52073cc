#ifndef REARR_EXPR_HPP
#define REARR_EXPR_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rearr {

enum class FuncId { sin, cos, exp, log, abs, sqrt, min, max, floor, sign };

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
    enum class Kind { number, variable, unary_minus, binary, call };

    Kind kind;
    double number = 0.0;
    int variable = 0; // 0-based coordinate index
    char op = 0;      // one of + - * / ^
    FuncId func = FuncId::sin;
    std::vector<ExprPtr> args;
};

/// Parsed arithmetic expression over variables x1..xd.
///
/// Grammar (usual precedence, ^ right-associative and binding tighter than
/// unary minus): + -  <  * /  <  unary -  <  ^. Functions: sin cos exp log
/// abs sqrt min max floor sign.
class ExpressionAst {
  public:
    /// Throws error(parse) with a character position on any syntax problem,
    /// unknown identifier, out-of-dimension variable, or arity mismatch.
    static ExpressionAst parse(std::string_view text, int dimension);

    /// IEEE double evaluation. Division by zero, log/sqrt domain violations,
    /// negative base with non-integer exponent, and NaN results all raise
    /// error(evaluation).
    double evaluate(std::span<const double> x) const;

    int dimension() const { return dimension_; }

    /// Canonical fully parenthesized form; parse(print()) reproduces the tree.
    std::string print() const;

  private:
    ExpressionAst(ExprPtr root, int dimension) : root_(std::move(root)), dimension_(dimension) {}

    ExprPtr root_;
    int dimension_ = 0;
};

/// A scalar field f: R^d -> R, either an expression or one of the named
/// built-ins (identity = x1, constant, dirichlet_marker).
///
/// dirichlet_marker evaluates to 1 at every representable point; the function
/// it samples is 0 almost everywhere, so its true rearrangement is the zero
/// function. It exists to demonstrate non-convergence for functions that are
/// not continuous a.e.
class ScalarField {
  public:
    static ScalarField expression(std::string_view text, int dimension);
    static ScalarField identity(int dimension);
    static ScalarField constant(double c, int dimension);
    static ScalarField dirichlet_marker(int dimension);

    double operator()(std::span<const double> x) const;
    int dimension() const { return dimension_; }
    const std::string& description() const { return description_; }

  private:
    enum class Kind { expr, identity, constant, dirichlet };

    ScalarField(Kind kind, int dimension, std::string description)
        : kind_(kind), dimension_(dimension), description_(std::move(description)) {}

    Kind kind_;
    int dimension_;
    std::string description_;
    std::shared_ptr<const ExpressionAst> ast_; // set for Kind::expr
    double constant_ = 0.0;
};

} // namespace rearr

#endif
