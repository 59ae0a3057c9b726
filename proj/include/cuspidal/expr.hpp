#pragma once

// Coordinate-function expressions over the variables u and v.
//
// Grammar (whitespace-insensitive, no implicit multiplication):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := number | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'
//
// '^' is right-associative and binds tighter than unary minus, so -u^2 is
// -(u^2) and 2^-1 is 0.5. Identifiers: u, v, pi, e and the functions sin,
// cos, tan, sqrt, exp, log, abs, atan (one argument) and pow (two).

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cuspidal/jet.hpp"

namespace cusp {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class DomainError : public std::runtime_error {
public:
    DomainError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class NodeKind { Number, Variable, Constant, Negate, Binary, Call };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Sin, Cos, Tan, Sqrt, Exp, Log, Abs, Atan, Pow };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    NodeKind kind = NodeKind::Number;
    double number = 0.0;       // Number, Constant
    char variable = 'u';       // Variable
    std::string name;          // Constant, Call
    BinaryOp op = BinaryOp::Add;
    Function function = Function::Sin;
    std::vector<ExprPtr> args; // operands / call arguments
    std::size_t position = 0;  // source offset for diagnostics
};

/// Immutable expression tree; cheap to copy.
class Expr {
public:
    Expr() = default;
    explicit Expr(ExprPtr root, std::string source = {}) : root_(std::move(root)), source_(std::move(source)) {}

    const ExprNode& root() const { return *root_; }
    const ExprPtr& ptr() const { return root_; }
    const std::string& source() const { return source_; }
    bool empty() const { return !root_; }

private:
    ExprPtr root_;
    std::string source_;
};

Expr parse_expression(std::string_view text);

double eval_scalar(const Expr& e, double u, double v);

/// Taylor jet of order `order` about (u, v).
Jet2 eval_jet(const Expr& e, double u, double v, int order);

/// The expression with u and v replaced by the given jets (chain rule through
/// jet arithmetic). U and V must share base point and order.
Jet2 eval_jet(const Expr& e, const Jet2& U, const Jet2& V);
Jet1 eval_jet(const Expr& e, const Jet1& U, const Jet1& V);

/// Fully parenthesized text that parses back to an equivalent tree.
std::string to_string(const Expr& e);

/// Simultaneous substitution of u and v by other expressions.
Expr substitute(const Expr& e, const Expr& u_replacement, const Expr& v_replacement);

// Tree builders, used for programmatic reparametrizations.
Expr make_number(double x);
Expr make_binary(BinaryOp op, const Expr& a, const Expr& b);
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);

}  // namespace cusp
