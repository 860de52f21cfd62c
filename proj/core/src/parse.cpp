#include "curvecert/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace curvecert::parse {

namespace {

using poly::bi_x;
using poly::bi_y;
using poly::qpoly;

struct Lexer {
  std::string s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw std::invalid_argument("parse error: expected '" + std::string(1, c) + "' in \"" + s + "\"");
  }
  bool ident_start() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string ident() {
    skip();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) throw std::invalid_argument("parse error: expected identifier in \"" + s + "\"");
    return s.substr(start, pos - start);
  }
  poly::Int integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("parse error: expected integer in \"" + s + "\"");
    return poly::Int(s.substr(start, pos - start));
  }
};

RatFunc rf_const(const Rat& c) { return {BiPoly(qpoly({c})), BiPoly(qpoly({Rat(1)}))}; }

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}
RatFunc rf_sub(const RatFunc& a, const RatFunc& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}
RatFunc rf_mul(const RatFunc& a, const RatFunc& b) { return {a.num * b.num, a.den * b.den}; }
RatFunc rf_div(const RatFunc& a, const RatFunc& b) {
  if (poly::is_zero(b.num)) throw std::invalid_argument("parse error: division by zero");
  return {a.num * b.den, a.den * b.num};
}
RatFunc rf_pow(RatFunc a, poly::Int e) {
  RatFunc r = rf_const(Rat(1));
  for (poly::Int i = 0; i < e; ++i) r = rf_mul(r, a);
  return r;
}

struct ExprParser {
  Lexer lex;
  std::string xvar, yvar;

  RatFunc parse() {
    RatFunc e = expr();
    if (!lex.eof()) throw std::invalid_argument("parse error: trailing input in \"" + lex.s + "\"");
    return e;
  }

  RatFunc expr() {
    RatFunc acc = lex.peek() == '-' ? rf_const(Rat(0)) : term();
    while (true) {
      if (lex.accept('+')) acc = rf_add(acc, term());
      else if (lex.accept('-')) acc = rf_sub(acc, term());
      else return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (lex.accept('*')) acc = rf_mul(acc, factor());
      else if (lex.accept('/')) acc = rf_div(acc, factor());
      else return acc;
    }
  }

  RatFunc factor() {
    if (lex.accept('-')) {
      RatFunc f = factor();
      return rf_sub(rf_const(Rat(0)), f);
    }
    RatFunc base = primary();
    if (lex.accept('^')) {
      poly::Int e = lex.integer();
      return rf_pow(base, e);
    }
    return base;
  }

  RatFunc primary() {
    if (lex.accept('(')) {
      RatFunc e = expr();
      lex.expect(')');
      return e;
    }
    if (lex.ident_start()) {
      std::string name = lex.ident();
      if (name == xvar) return {bi_x(), BiPoly(qpoly({Rat(1)}))};
      if (name == yvar) return {bi_y(), BiPoly(qpoly({Rat(1)}))};
      throw std::invalid_argument("parse error: unknown variable '" + name + "' in \"" + lex.s + "\"");
    }
    return rf_const(Rat(lex.integer()));
  }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& s, const std::string& xvar, const std::string& yvar) {
  ExprParser p{Lexer{s}, xvar, yvar};
  return p.parse();
}

BiPoly parse_bipoly(const std::string& s, const std::string& xvar, const std::string& yvar) {
  RatFunc f = parse_ratfunc(s, xvar, yvar);
  if (f.den.degree() != 0 || f.den.coeff(0).degree() != 0)
    throw std::invalid_argument("expected a polynomial, got a rational function: \"" + s + "\"");
  Rat d = f.den.coeff(0).coeff(0);
  return f.num * qpoly({Rat(1) / d});
}

QPoly parse_qpoly(const std::string& s, const std::string& var) {
  BiPoly f = parse_bipoly(s, var, "\x01unused");
  if (f.degree() > 0) throw std::invalid_argument("unexpected second variable in \"" + s + "\"");
  return f.coeff(0);
}

QPoly parse_hyperelliptic_rhs(const std::string& s, const std::string& xvar, const std::string& yvar) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("curve equation needs '=': \"" + s + "\"");
  BiPoly lhs = parse_bipoly(s.substr(0, eq), xvar, yvar);
  BiPoly rhs = parse_bipoly(s.substr(eq + 1), xvar, yvar);
  BiPoly y2 = bi_y() * bi_y();
  if (!(lhs == y2)) throw std::invalid_argument("left side must be " + yvar + "^2: \"" + s + "\"");
  if (rhs.degree() > 0) throw std::invalid_argument("right side must not involve " + yvar + ": \"" + s + "\"");
  return rhs.coeff(0);
}

std::map<std::string, int> parse_divisor_expr(const std::string& s) {
  // Reuse the expression parser with places as formal symbols: parse as a
  // linear combination by walking a small recursive grammar directly.
  struct DivParser {
    Lexer lex;
    std::map<std::string, int> acc;

    void run() {
      expr(1);
      if (!lex.eof()) throw std::invalid_argument("divisor parse error: trailing input in \"" + lex.s + "\"");
    }

    void expr(int sign) {
      term(sign * (lex.accept('-') ? -1 : 1));
      while (true) {
        if (lex.accept('+')) term(sign);
        else if (lex.accept('-')) term(-sign);
        else return;
      }
    }

    void term(int sign) {
      long long mult = 1;
      while (true) {
        if (lex.peek() == '(') {
          lex.expect('(');
          // distribute the accumulated multiplier over the group
          std::map<std::string, int> saved = std::move(acc);
          acc.clear();
          expr(1);
          lex.expect(')');
          for (auto& [k, v] : acc) saved[k] += static_cast<int>(mult) * sign * v;
          acc = std::move(saved);
          if (lex.accept('*')) continue;
          return;
        }
        if (lex.ident_start()) {
          std::string name = lex.ident();
          acc[name] += static_cast<int>(mult) * sign;
          if (lex.accept('*')) continue;
          return;
        }
        poly::Int n = lex.integer();
        mult *= n.convert_to<long long>();
        if (lex.accept('*')) continue;
        // a bare integer term contributes nothing but is rejected for clarity
        throw std::invalid_argument("divisor parse error: integer must multiply a place in \"" + lex.s + "\"");
      }
    }
  };
  DivParser p{Lexer{s}, {}};
  p.run();
  // drop zero coefficients
  for (auto it = p.acc.begin(); it != p.acc.end();) {
    if (it->second == 0) it = p.acc.erase(it);
    else ++it;
  }
  return p.acc;
}

}  // namespace curvecert::parse
