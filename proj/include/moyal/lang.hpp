#pragma once

// Text input and output for polynomials.
//
// Input grammar (no implicit multiplication):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' int)?
//   atom   := rational | 'i' | 'hbar' | 'x' | 'p' | '(' expr ')'
//   rational := int ('/' posint)?

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "moyal/fock.hpp"
#include "moyal/opalg.hpp"
#include "moyal/phase.hpp"

namespace moyal {

enum class TokenKind { integer, slash, ident, plus, minus, star, caret, lparen, rparen, end };

struct ExprToken {
  TokenKind kind = TokenKind::end;
  std::string_view text;
  std::size_t position = 0;
};

inline std::vector<ExprToken> tokenize(std::string_view input) {
  std::vector<ExprToken> tokens;
  std::size_t pos = 0;
  while (pos < input.size()) {
    const char c = input[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
      tokens.push_back({TokenKind::integer, input.substr(start, pos - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < input.size() &&
             (std::isalnum(static_cast<unsigned char>(input[pos])) || input[pos] == '_')) {
        ++pos;
      }
      const std::string_view word = input.substr(start, pos - start);
      if (word != "x" && word != "p" && word != "hbar" && word != "i" && word != "sqrt") {
        throw ParseError(ErrorKind::SyntaxError, start,
                         "unknown identifier '" + std::string(word) + "'");
      }
      tokens.push_back({TokenKind::ident, word, start});
      continue;
    }
    TokenKind kind = TokenKind::end;
    switch (c) {
      case '/': kind = TokenKind::slash; break;
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      default:
        throw ParseError(ErrorKind::SyntaxError, start,
                         "unexpected character '" + std::string(1, c) + "'");
    }
    tokens.push_back({kind, input.substr(start, 1), start});
    ++pos;
  }
  tokens.push_back({TokenKind::end, {}, input.size()});
  return tokens;
}

namespace detail {

class PhaseParser {
 public:
  explicit PhaseParser(std::string_view input) : tokens_(tokenize(input)) {}

  PhasePoly parse() {
    if (peek().kind == TokenKind::end) {
      throw ParseError(ErrorKind::SyntaxError, peek().position, "empty expression");
    }
    PhasePoly r = expr();
    if (peek().kind != TokenKind::end) fail_unexpected();
    return r;
  }

 private:
  const ExprToken& peek() const { return tokens_[index_]; }
  const ExprToken& next() { return tokens_[index_++]; }

  [[noreturn]] void fail_unexpected() const {
    const ExprToken& t = peek();
    if (t.kind == TokenKind::end) {
      throw ParseError(ErrorKind::SyntaxError, t.position, "unexpected end of input");
    }
    throw ParseError(ErrorKind::SyntaxError, t.position,
                     "unexpected '" + std::string(t.text) + "'");
  }

  PhasePoly expr() {
    bool negate = false;
    if (peek().kind == TokenKind::minus) {
      next();
      negate = true;
    }
    PhasePoly r = term();
    if (negate) r = -r;
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const bool minus = next().kind == TokenKind::minus;
      PhasePoly t = term();
      if (minus) {
        r -= t;
      } else {
        r += t;
      }
    }
    return r;
  }

  PhasePoly term() {
    PhasePoly r = factor();
    while (peek().kind == TokenKind::star) {
      next();
      r *= factor();
    }
    return r;
  }

  PhasePoly factor() {
    PhasePoly base = atom();
    if (peek().kind != TokenKind::caret) return base;
    next();
    if (peek().kind == TokenKind::minus) {
      throw ParseError(ErrorKind::NegativeExponent, peek().position, "negative exponent");
    }
    if (peek().kind != TokenKind::integer) fail_unexpected();
    const ExprToken& t = next();
    if (t.text.size() > 4) {
      throw ParseError(ErrorKind::SyntaxError, t.position, "exponent too large");
    }
    return pow(base, static_cast<unsigned>(std::stoul(std::string(t.text))));
  }

  PhasePoly atom() {
    const ExprToken& t = peek();
    switch (t.kind) {
      case TokenKind::integer: return rational();
      case TokenKind::ident: {
        next();
        if (t.text == "x") return phase::x();
        if (t.text == "p") return phase::p();
        if (t.text == "hbar") return phase::hbar();
        if (t.text == "i") return phase::constant(GaussianRational::i());
        throw ParseError(ErrorKind::SyntaxError, t.position,
                         "'" + std::string(t.text) + "' is not allowed in phase-space polynomials");
      }
      case TokenKind::lparen: {
        next();
        PhasePoly inner = expr();
        if (peek().kind != TokenKind::rparen) fail_unexpected();
        next();
        return inner;
      }
      default: fail_unexpected();
    }
  }

  PhasePoly rational() {
    Rational value{Integer(std::string(next().text))};
    if (peek().kind == TokenKind::slash) {
      next();
      if (peek().kind != TokenKind::integer) fail_unexpected();
      const ExprToken& den = next();
      Integer d{std::string(den.text)};
      if (d == 0) {
        throw ParseError(ErrorKind::DivisionByZeroLiteral, den.position, "zero denominator");
      }
      value /= Rational(d);
    }
    return phase::constant(GaussianRational(value));
  }

  std::vector<ExprToken> tokens_;
  std::size_t index_ = 0;
};

}  // namespace detail

inline PhasePoly parse_phase_poly(std::string_view input) {
  return detail::PhaseParser(input).parse();
}

namespace detail {

inline std::string format_rational_factor(const Rational& r) {
  if (denominator(r) == 1) return r.str();
  return "(" + r.str() + ")";
}

// Rendering of |c| for a real or imaginary coefficient; the sign is emitted separately.
inline std::string format_magnitude(const GaussianRational& c) {
  if (c.is_real()) return format_rational_factor(abs(c.re()));
  const Rational m = abs(c.im());
  if (m == 1) return "i";
  return format_rational_factor(m) + "*i";
}

inline bool is_negative(const GaussianRational& c) {
  if (c.is_real()) return c.re() < 0;
  if (c.is_imaginary()) return c.im() < 0;
  return false;
}

struct SymbolNames {
  std::string_view left;
  std::string_view right;
};

inline std::string power(std::string_view symbol, unsigned e) {
  std::string s(symbol);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

template <class Tag>
std::string format_poly(const Poly<Tag>& a, SymbolNames names) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Exponents, GaussianRational>> terms(a.terms().begin(), a.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& u, const auto& v) {
    const Exponents& x = u.first;
    const Exponents& y = v.first;
    const unsigned dx = x.left + x.right;
    const unsigned dy = y.left + y.right;
    if (dx != dy) return dx > dy;
    if (x.left != y.left) return x.left > y.left;
    if (x.right != y.right) return x.right > y.right;
    return x.hbar < y.hbar;
  });

  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::vector<std::string> factors;
    if (e.hbar != 0) factors.push_back(power("hbar", e.hbar));
    if (e.left != 0) factors.push_back(power(names.left, e.left));
    if (e.right != 0) factors.push_back(power(names.right, e.right));

    const bool simple = c.is_real() || c.is_imaginary();
    const bool negative = is_negative(c);
    std::string coeff;
    if (simple) {
      coeff = format_magnitude(c);
    } else {
      const Rational& re = c.re();
      const Rational& im = c.im();
      const std::string im_part = abs(im) == 1 ? "i" : abs(im).str() + "*i";
      coeff = "(" + re.str() + (im < 0 ? " - " : " + ") + im_part + ")";
    }
    std::string body;
    if (factors.empty()) {
      body = coeff;
    } else {
      if (!(simple && c.is_real() && abs(c.re()) == 1)) body = coeff + "*";
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k != 0) body += "*";
        body += factors[k];
      }
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace detail

/// Canonical polynomial text. Terms are sorted by descending x/p degree, then
/// descending p power, descending x power and ascending hbar power.
inline std::string format(const PhasePoly& a) { return detail::format_poly(a, {"p", "x"}); }
inline std::string format(const OpPoly& a) { return detail::format_poly(a, {"P", "X"}); }
inline std::string format(const AAPoly& a) { return detail::format_poly(a, {"A", "Ad"}); }

/// Coefficient in parseable form, e.g. "1", "-2", "(1/2)*i", "(1/2 - i)".
inline std::string format(const GaussianRational& c) { return format(PhasePoly(c)); }

/// One row per line, entries separated by " | ".
inline std::string format(const FockMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j != 0) out += " | ";
      out += m(i, j).to_string();
    }
    out += "\n";
  }
  return out;
}

}  // namespace moyal
