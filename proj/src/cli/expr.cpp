#include "folindex/expr.hpp"

#include <algorithm>

#include "folindex/errors.hpp"

namespace folindex {

namespace {

class ExprParser {
public:
  ExprParser(TokenStream& ts, std::span<const std::string> vars, const PolyLookup& lookup)
      : ts_(ts), vars_(vars), lookup_(lookup) {}

  Poly sum() {
    Poly acc(vars_.size());
    bool negate = false;
    if (ts_.accept("-"))
      negate = true;
    else
      ts_.accept("+");
    Poly first = product();
    acc = negate ? -first : first;
    while (ts_.is("+") || ts_.is("-")) {
      bool minus = ts_.next().text == "-";
      Poly t = product();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

private:
  Poly product() {
    Poly acc = power();
    while (ts_.is("*") || ts_.is("/")) {
      const Token& op = ts_.next();
      Poly rhs = power();
      if (op.text == "*") {
        acc = acc * rhs;
      } else {
        if (!rhs.is_constant() || rhs.is_zero()) ts_.fail(op, "division is only by nonzero constants");
        acc *= Rational(1) / rhs.constant_term();
      }
    }
    return acc;
  }

  Poly power() {
    if (ts_.accept("-")) return -power();
    Poly base = atom();
    if (ts_.accept("^")) {
      const Token& e = ts_.expect_number();
      if (e.text.size() > 6) ts_.fail(e, "exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Poly atom() {
    const Token& t = ts_.peek();
    std::size_t n = vars_.size();
    if (t.kind == TokenKind::Number) {
      ts_.next();
      return Poly::constant(n, Rational(mpz_class(t.text)));
    }
    if (t.kind == TokenKind::Ident) {
      ts_.next();
      auto it = std::find(vars_.begin(), vars_.end(), t.text);
      if (it != vars_.end()) return Poly::variable(n, static_cast<std::size_t>(it - vars_.begin()));
      if (lookup_) {
        if (const Poly* p = lookup_(t.text)) {
          if (p->nvars() != n) throw Error(ErrorKind::RingMismatch, "'" + t.text + "' lives in another ring");
          return *p;
        }
      }
      throw Error(ErrorKind::UndeclaredName, "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) +
                                                 ": '" + t.text + "' is not declared");
    }
    if (ts_.accept("(")) {
      Poly inner = sum();
      ts_.expect(")");
      return inner;
    }
    ts_.fail(t, "expected a polynomial expression");
  }

  TokenStream& ts_;
  std::span<const std::string> vars_;
  const PolyLookup& lookup_;
};

}  // namespace

Poly parse_poly_expr(TokenStream& ts, std::span<const std::string> vars, const PolyLookup& lookup) {
  return ExprParser(ts, vars, lookup).sum();
}

Poly parse_poly(std::string_view text, std::span<const std::string> vars) {
  TokenStream ts(tokenize(text));
  Poly p = parse_poly_expr(ts, vars);
  if (!ts.at_end()) ts.fail(ts.peek(), "unexpected trailing input");
  return p;
}

Rational parse_rational(TokenStream& ts) {
  bool neg = ts.accept("-");
  Rational q(mpz_class(ts.expect_number().text));
  if (ts.accept("/")) {
    const Token& d = ts.expect_number();
    mpz_class den(d.text);
    if (den == 0) ts.fail(d, "zero denominator");
    q /= Rational(den);
  }
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace folindex
