#include "kahlercalc/class_expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "kahlercalc/errors.hpp"

namespace kahlercalc {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(number());
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        out.push_back(ident());
        continue;
      }
      const std::size_t at = pos_++;
      switch (c) {
        case '+': out.push_back({Tok::Plus, "+", at}); break;
        case '-': out.push_back({Tok::Minus, "-", at}); break;
        case '*': out.push_back({Tok::Star, "*", at}); break;
        case '^': out.push_back({Tok::Caret, "^", at}); break;
        case '(': out.push_back({Tok::LParen, "(", at}); break;
        case ')': out.push_back({Tok::RParen, ")", at}); break;
        default:
          throw ParseError("syntax error: unexpected character '" +
                               std::string(1, c) + "' at offset " +
                               std::to_string(at),
                           at);
      }
    }
    out.push_back({Tok::End, "", src_.size()});
    return out;
  }

 private:
  Token number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    // A '/' directly between digit runs lexes as one rational literal.
    if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    return {Tok::Number, std::string(src_.substr(start, pos_ - start)), start};
  }

  Token ident() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])))) {
      ++pos_;
    }
    return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), start};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

ClassExprPtr node(ClassExprNode n) {
  return std::make_shared<const ClassExprNode>(std::move(n));
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ClassExprPtr run() {
    ClassExprPtr e = expr();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  bool match(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what);
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    const std::string seen =
        t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError("syntax error: " + msg + ", found " + seen +
                         " at offset " + std::to_string(t.offset),
                     t.offset);
  }

  ClassExprPtr expr() {
    ClassExprPtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = advance();
      ClassExprPtr rhs = term();
      lhs = node({op.kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub,
                  {}, {}, lhs, rhs, {}, op.offset});
    }
    return lhs;
  }

  ClassExprPtr term() {
    ClassExprPtr lhs = factor();
    while (peek().kind == Tok::Star) {
      const Token op = advance();
      ClassExprPtr rhs = factor();
      lhs = node({ExprKind::Mul, {}, {}, lhs, rhs, {}, op.offset});
    }
    return lhs;
  }

  ClassExprPtr factor() {
    ClassExprPtr base = primary();
    if (peek().kind == Tok::Caret) {
      const Token op = advance();
      const AffineInt e = exponent();
      base = node({ExprKind::Pow, {}, {}, base, nullptr, e, op.offset});
    }
    return base;
  }

  ClassExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Minus: {
        advance();
        ClassExprPtr operand = primary();
        ClassExprPtr zero =
            node({ExprKind::Number, {}, BigRational(0), nullptr, nullptr, {}, t.offset});
        return node({ExprKind::Sub, {}, {}, zero, operand, {}, t.offset});
      }
      case Tok::LParen: {
        advance();
        ClassExprPtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Number: {
        advance();
        return node({ExprKind::Number, {}, BigRational::parse(t.text), nullptr,
                     nullptr, {}, t.offset});
      }
      case Tok::Ident: {
        advance();
        if (t.text == "n") {
          return node({ExprKind::Dim, {}, {}, nullptr, nullptr, {}, t.offset});
        }
        const std::optional<RingSymbol> sym = symbol_named(t.text);
        if (!sym) {
          throw ParseError("unknown symbol '" + t.text + "' at offset " +
                               std::to_string(t.offset),
                           t.offset);
        }
        return node({ExprKind::Symbol, *sym, {}, nullptr, nullptr, {}, t.offset});
      }
      default:
        fail("expected a symbol, number or '('");
    }
  }

  static std::optional<RingSymbol> symbol_named(const std::string& name) {
    if (name == "L") return RingSymbol::L;
    if (name == "H") return RingSymbol::H;
    if (name == "c1") return RingSymbol::C1;
    if (name == "c2") return RingSymbol::C2;
    if (name == "W") return RingSymbol::W;
    return std::nullopt;
  }

  // exponent := aff; aff := affterm (('+'|'-') affterm)*;
  // affterm := affprim ('*' affprim)*; affprim := INT | 'n' | '(' aff ')'
  // with products restricted to at most one n-linear side.
  AffineInt exponent() {
    if (peek().kind == Tok::LParen) {
      advance();
      const AffineInt e = affine();
      expect(Tok::RParen, "')'");
      return e;
    }
    return affine_primary();
  }

  AffineInt affine() {
    AffineInt acc = affine_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = advance().kind == Tok::Plus;
      const AffineInt rhs = affine_term();
      acc.a += plus ? rhs.a : -rhs.a;
      acc.b += plus ? rhs.b : -rhs.b;
    }
    return acc;
  }

  AffineInt affine_term() {
    AffineInt acc = affine_primary();
    while (peek().kind == Tok::Star) {
      const Token op = advance();
      const AffineInt rhs = affine_primary();
      if (acc.a != 0 && rhs.a != 0) {
        throw ParseError(
            "exponent is not affine in n at offset " + std::to_string(op.offset),
            op.offset);
      }
      acc = AffineInt{acc.a * rhs.b + rhs.a * acc.b, acc.b * rhs.b};
    }
    return acc;
  }

  AffineInt affine_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Minus) {
      advance();
      const AffineInt inner = affine_primary();
      return {-inner.a, -inner.b};
    }
    if (t.kind == Tok::LParen) {
      advance();
      const AffineInt e = affine();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind == Tok::Number) {
      advance();
      const BigRational v = BigRational::parse(t.text);
      if (!v.is_integer() || boost::multiprecision::abs(v.num()) > 1000000000) {
        throw ParseError("exponent must be a small integer at offset " +
                             std::to_string(t.offset),
                         t.offset);
      }
      return {0, v.num().convert_to<long long>()};
    }
    if (t.kind == Tok::Ident && t.text == "n") {
      advance();
      return {1, 0};
    }
    fail("expected an integer, 'n' or '(' in exponent");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassExprPtr parse_class_expr(std::string_view src) {
  if (src.empty()) throw ParseError("empty expression", 0);
  return Parser(Lexer(src).run()).run();
}

bool mentions_kahler_class(const ClassExprNode& expr) {
  if (expr.kind == ExprKind::Symbol && expr.symbol == RingSymbol::W) return true;
  if (expr.lhs && mentions_kahler_class(*expr.lhs)) return true;
  if (expr.rhs && mentions_kahler_class(*expr.rhs)) return true;
  return false;
}

namespace {

class Evaluator {
 public:
  Evaluator(int dim, const BigRational& alpha, const BigRational& beta)
      : dim_(dim), alpha_(alpha), beta_(beta) {}

  GradedClass eval(const ClassExprNode& e) const {
    switch (e.kind) {
      case ExprKind::Number:
        return GradedClass::scalar(dim_, e.number);
      case ExprKind::Dim:
        return GradedClass::scalar(dim_, BigRational(dim_));
      case ExprKind::Symbol:
        return symbol(e.symbol);
      case ExprKind::Add:
        return eval(*e.lhs) + eval(*e.rhs);
      case ExprKind::Sub:
        return eval(*e.lhs) - eval(*e.rhs);
      case ExprKind::Mul:
        return eval(*e.lhs) * eval(*e.rhs);
      case ExprKind::Pow: {
        const long long k = e.exponent.eval(dim_);
        if (k < 0) throw DomainError("negative exponent");
        const GradedClass base = eval(*e.lhs);
        if (base.degree() == 0) {
          return GradedClass::scalar(dim_, base.scalar_part().pow(k));
        }
        return base.power(static_cast<int>(k));
      }
    }
    throw DomainError("unreachable expression kind");
  }

 private:
  GradedClass symbol(RingSymbol s) const {
    switch (s) {
      case RingSymbol::L: return GradedClass::generator_L(dim_);
      case RingSymbol::H: return GradedClass::generator_H(dim_);
      case RingSymbol::C1: return chern_classes(dim_).first;
      case RingSymbol::C2: return chern_classes(dim_).second;
      case RingSymbol::W:
        return GradedClass::make(dim_, 1, alpha_, beta_);
    }
    throw DomainError("unreachable symbol");
  }

  int dim_;
  BigRational alpha_, beta_;
};

}  // namespace

GradedClass eval_class_expr(const ClassExprNode& expr, int dim,
                            const BigRational& alpha, const BigRational& beta) {
  if (dim < 2) throw DomainError("dimension must be at least 2");
  if (mentions_kahler_class(expr) &&
      (alpha.sign() <= 0 || beta.sign() <= 0)) {
    throw DomainError("alpha and beta must be positive when W is used");
  }
  return Evaluator(dim, alpha, beta).eval(expr);
}

}  // namespace kahlercalc
