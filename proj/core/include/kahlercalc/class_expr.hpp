#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "kahlercalc/intersection_ring.hpp"
#include "kahlercalc/rational.hpp"

namespace kahlercalc {

enum class ExprKind { Symbol, Number, Dim, Add, Sub, Mul, Pow };
enum class RingSymbol { L, H, C1, C2, W };

/// Exponents are affine in the dimension symbol: a*n + b.
struct AffineInt {
  long long a = 0;
  long long b = 0;
  long long eval(int n) const { return a * n + b; }
  friend bool operator==(const AffineInt&, const AffineInt&) = default;
};

struct ClassExprNode;
using ClassExprPtr = std::shared_ptr<const ClassExprNode>;

/// AST node of the cohomology-class DSL. Grammar, tightest first:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' exponent)?
///   primary:= 'L'|'H'|'c1'|'c2'|'W'|'n' | rational literal "p" or "p/q"
///             | '(' expr ')' | '-' primary
/// where exponent is an integer literal, 'n', or a parenthesized affine
/// expression in n. Symbols are case-sensitive; '*' is required.
struct ClassExprNode {
  ExprKind kind;
  RingSymbol symbol{};     // Symbol
  BigRational number;      // Number
  ClassExprPtr lhs, rhs;   // Add/Sub/Mul; Pow uses lhs as the base
  AffineInt exponent{};    // Pow
  std::size_t offset = 0;  // source position, for diagnostics
};

/// Parses the DSL; ParseError carries the byte offset of the first
/// offending character.
ClassExprPtr parse_class_expr(std::string_view src);

/// Evaluates to a normal-form class for the concrete dimension. W binds to
/// alpha*L + beta*H and requires alpha, beta > 0. DomainError on degree
/// overflow, negative exponents, and inhomogeneous sums.
GradedClass eval_class_expr(const ClassExprNode& expr, int dim,
                            const BigRational& alpha, const BigRational& beta);

/// True when the expression mentions the Kahler-class symbol W.
bool mentions_kahler_class(const ClassExprNode& expr);

}  // namespace kahlercalc
