#include "zdgb/parser.hpp"

#include <cctype>
#include <sstream>

#include "zdgb/errors.hpp"

namespace zdgb {

namespace {

constexpr unsigned long kMaxExponent = 100000;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, const OrderPtr& order, SourcePos origin)
      : text_(text), vars_(vars), order_(order), origin_(origin) {
    tokenize();
  }

  FieldPoly parse() {
    if (tokens_.front().kind == Tok::End) fail("empty expression", tokens_.front());
    FieldPoly p = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    std::size_t line = origin_.line, col = origin_.column;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }
  [[noreturn]] void fail(const std::string& what, const Token& t) const { fail(what, t.offset); }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        tokens_.push_back({Tok::Number, std::string(text_.substr(i, j - i)), i});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
        tokens_.push_back({Tok::Ident, std::string(text_.substr(i, j - i)), i});
        i = j;
      } else {
        Tok k;
        switch (c) {
          case '+': k = Tok::Plus; break;
          case '-': k = Tok::Minus; break;
          case '*': k = Tok::Star; break;
          case '/': k = Tok::Slash; break;
          case '^': k = Tok::Caret; break;
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          default: fail(std::string("unexpected character '") + c + "'", i);
        }
        tokens_.push_back({k, std::string(1, c), i});
        ++i;
      }
    }
    tokens_.push_back({Tok::End, "end of input", text_.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  FieldPoly expr() {
    FieldPoly acc(order_);
    bool negate = false;
    if (accept(Tok::Minus)) negate = true;
    else accept(Tok::Plus);
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept(Tok::Plus)) acc += term();
      else if (accept(Tok::Minus)) acc -= term();
      else return acc;
    }
  }

  static bool starts_primary(Tok k) { return k == Tok::Number || k == Tok::Ident || k == Tok::LParen; }

  FieldPoly term() {
    bool closed = false;
    FieldPoly acc = factor(closed);
    for (;;) {
      if (accept(Tok::Star)) {
        acc = acc * factor(closed);
      } else if (peek().kind == Tok::LParen || (closed && starts_primary(peek().kind))) {
        acc = acc * factor(closed);
      } else if (starts_primary(peek().kind)) {
        fail("missing '*' between factors", peek());
      } else {
        return acc;
      }
    }
  }

  // `closed` reports whether the factor ended with ')'.
  FieldPoly factor(bool& closed) {
    if (accept(Tok::Minus)) return -factor(closed);
    if (accept(Tok::Plus)) return factor(closed);
    FieldPoly base = primary(closed);
    if (accept(Tok::Caret)) {
      closed = false;
      if (peek().kind == Tok::Minus) fail("negative exponent", peek());
      const Token& t = next();
      if (t.kind != Tok::Number) fail("exponent must be a non-negative integer", t);
      if (t.text.size() > 6 || std::stoul(t.text) > kMaxExponent) fail("exponent too large", t);
      unsigned long e = std::stoul(t.text);
      FieldPoly r = FieldPoly::constant(order_, Rational(1));
      for (unsigned long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  FieldPoly primary(bool& closed) {
    closed = false;
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: {
        Rational v(mpz_class(t.text));
        if (accept(Tok::Slash)) {
          const Token& d = next();
          if (d.kind != Tok::Number) fail("denominator must be an integer literal", d);
          mpz_class den(d.text);
          if (den == 0) fail("zero denominator", d);
          v = Rational(mpz_class(t.text), den);
          v.canonicalize();
        }
        return FieldPoly::constant(order_, v);
      }
      case Tok::Ident: {
        for (std::size_t k = 0; k < vars_.size(); ++k)
          if (vars_[k] == t.text) return FieldPoly::term(order_, Rational(1), Monomial::variable(vars_.size(), k));
        fail("unknown variable '" + t.text + "'", t);
      }
      case Tok::LParen: {
        FieldPoly inner = expr();
        if (!accept(Tok::RParen)) fail("expected ')'", peek());
        closed = true;
        return inner;
      }
      default:
        fail("expected a number, variable or '('", t);
    }
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  OrderPtr order_;
  SourcePos origin_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, const OrderPtr& order,
                     SourcePos origin) {
  ZDGB_CHECK(order->arity() == vars.size(), "variable list does not match the ordering");
  return Parser(text, vars, order, origin).parse();
}

std::string render(const FieldPoly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    bool need_star = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t k = 0; k < t.mono.arity(); ++k) {
      if (t.mono[k] == 0) continue;
      if (need_star) os << '*';
      os << vars[k];
      if (t.mono[k] > 1) os << '^' << t.mono[k];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace zdgb
