#include "plcurve/algebra/parser.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "plcurve/error.hpp"

namespace plc {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyExpr parse() {
    PolyExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError,
                what + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Integer digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  PolyExpr expr() {
    PolyExpr lhs = term();
    for (;;) {
      Kind_ op;
      const std::size_t at = (skip_ws(), pos_);
      if (accept('+')) {
        op = Kind_::sum;
      } else if (accept('-')) {
        op = Kind_::difference;
      } else {
        return lhs;
      }
      PolyExpr node;
      node.kind = op;
      node.position = at;
      node.children.push_back(std::move(lhs));
      node.children.push_back(term());
      lhs = std::move(node);
    }
  }

  PolyExpr term() {
    PolyExpr lhs = factor();
    while (peek('*')) {
      const std::size_t at = pos_;
      ++pos_;
      PolyExpr node;
      node.kind = Kind_::product;
      node.position = at;
      node.children.push_back(std::move(lhs));
      node.children.push_back(factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  PolyExpr factor() {
    PolyExpr b = base();
    if (peek('^')) {
      const std::size_t at = pos_;
      ++pos_;
      const Integer e = digits();
      if (e > std::numeric_limits<unsigned>::max()) fail("exponent too large");
      PolyExpr node;
      node.kind = Kind_::power;
      node.position = at;
      node.exponent = static_cast<unsigned>(e.get_ui());
      node.children.push_back(std::move(b));
      return node;
    }
    return b;
  }

  PolyExpr base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    PolyExpr node;
    node.position = at;
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      node.kind = Kind_::variable;
      node.var = c == 'x' ? Var::x : (c == 'y' ? Var::y : Var::z);
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = digits();
      node.kind = Kind_::constant;
      if (accept('/')) {
        const Integer den = digits();
        if (den == 0) fail("zero denominator");
        node.value = Rational(num, den);
        node.value.canonicalize();
      } else {
        node.value = Rational(num);
      }
      return node;
    }
    if (c == '(') {
      ++pos_;
      PolyExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      node.kind = Kind_::negation;
      node.children.push_back(factor());
      return node;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  using Kind_ = PolyExpr::Kind;
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Mixed-degree polynomial used while expanding.
using Expansion = std::map<Monomial, Rational, GrlexGreater>;

void add_into(Expansion& acc, const Expansion& other, int sign) {
  for (const auto& [m, c] : other) {
    auto [it, inserted] = acc.try_emplace(m, 0);
    if (sign > 0) {
      it->second += c;
    } else {
      it->second -= c;
    }
    if (it->second == 0) acc.erase(it);
  }
}

Expansion multiply(const Expansion& a, const Expansion& b) {
  Expansion out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto [it, inserted] = out.try_emplace(ma * mb, 0);
      it->second += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

Expansion expand(const PolyExpr& e) {
  using K = PolyExpr::Kind;
  switch (e.kind) {
    case K::constant: {
      Expansion out;
      if (e.value != 0) out.emplace(Monomial{}, e.value);
      return out;
    }
    case K::variable:
      return Expansion{{Monomial::of(e.var), Rational(1)}};
    case K::sum:
    case K::difference: {
      Expansion acc = expand(e.children[0]);
      add_into(acc, expand(e.children[1]), e.kind == K::sum ? 1 : -1);
      return acc;
    }
    case K::product:
      return multiply(expand(e.children[0]), expand(e.children[1]));
    case K::power: {
      Expansion base = expand(e.children[0]);
      Expansion result{{Monomial{}, Rational(1)}};
      for (unsigned n = e.exponent; n > 0; n >>= 1u) {
        if (n & 1u) result = multiply(result, base);
        if (n > 1) base = multiply(base, base);
      }
      return result;
    }
    case K::negation: {
      Expansion out;
      add_into(out, expand(e.children[0]), -1);
      return out;
    }
  }
  return {};
}

}  // namespace

PolyExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

HomPoly parse_poly(std::string_view text) {
  Expansion terms = expand(parse_expr(text));
  if (terms.empty()) throw Error(ErrorKind::ZeroPolynomial, "input expands to 0");
  const int degree = terms.begin()->first.degree();
  for (const auto& [m, c] : terms) {
    if (m.degree() != degree) {
      throw Error(ErrorKind::NotHomogeneous,
                  "found monomials of degrees " + std::to_string(degree) +
                      " and " + std::to_string(m.degree()));
    }
  }
  return HomPoly(degree, std::move(terms));
}

}  // namespace plc
