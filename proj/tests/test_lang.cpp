#include "test_support.hpp"

#include "moyal/lang.hpp"
#include "moyal/verify.hpp"

using moyal::AAPoly;
using moyal::GaussianRational;
using moyal::OpPoly;
using moyal::ParseError;
using moyal::PhasePoly;

namespace {
PhasePoly term(unsigned p, unsigned x, unsigned hbar, const GaussianRational& c) {
  return PhasePoly::monomial(p, x, hbar, c);
}

struct Caught {
  moyal::ErrorKind kind;
  std::size_t position;
};

Caught parse_error(std::string_view text) {
  try {
    moyal::parse_phase_poly(text);
  } catch (const ParseError& e) {
    return {e.kind(), e.position()};
  }
  FAIL("accepted: " << text);
  return {};
}
}  // namespace

TEST_CASE("parsing", "[lang]") {
  CHECK(P("p^2*x + (1/2)*i*hbar") == term(2, 1, 0, 1) + term(0, 0, 1, gq(0, 1, 1, 2)));
  CHECK(P("x*p") == P("p*x"));
  CHECK(P("(x + p)^2") == P("x^2 + 2*x*p + p^2"));
  CHECK(P("-x - 1/2*p") == term(0, 1, 0, -1) + term(1, 0, 0, gq(-1, 2)));
  CHECK(P("-3/6*x") == term(0, 1, 0, gq(-1, 2)));
  CHECK(P("x - x").is_zero());
  CHECK(P("0") == PhasePoly());
  CHECK(P("  hbar^2 * i ") == term(0, 0, 2, kI));
  CHECK(P("x^0") == P("1"));
  CHECK(P("(1/2 - 3/4*i)*x") == term(0, 1, 0, gq(1, 2, -3, 4)));
}

TEST_CASE("parse errors report kind and position", "[lang]") {
  auto c = parse_error("p^-1");
  CHECK(c.kind == moyal::ErrorKind::NegativeExponent);
  CHECK(c.position == 2);

  c = parse_error("3/0*x");
  CHECK(c.kind == moyal::ErrorKind::DivisionByZeroLiteral);
  CHECK(c.position == 2);

  c = parse_error("x*q");
  CHECK(c.kind == moyal::ErrorKind::SyntaxError);
  CHECK(c.position == 2);

  c = parse_error("sqrt(2)*x");
  CHECK(c.kind == moyal::ErrorKind::SyntaxError);
  CHECK(c.position == 0);

  c = parse_error("x^");
  CHECK(c.kind == moyal::ErrorKind::SyntaxError);
  CHECK(c.position == 2);
}

TEST_CASE("malformed corpus", "[lang]") {
  STATIC_REQUIRE(std::size(moyal::verify::kMalformedCorpus) >= 20);
  for (const auto& mc : moyal::verify::kMalformedCorpus) {
    INFO("input: \"" << mc.input << "\"");
    const Caught c = parse_error(mc.input);
    CHECK(c.kind == mc.kind);
    CHECK(c.position >= mc.lo);
    CHECK(c.position <= mc.hi);
  }
}

TEST_CASE("tokenizer", "[lang]") {
  const auto tokens = moyal::tokenize("12*hbar^3");
  REQUIRE(tokens.size() == 6);
  CHECK(tokens[0].kind == moyal::TokenKind::integer);
  CHECK(tokens[0].text == "12");
  CHECK(tokens[2].text == "hbar");
  CHECK(tokens[2].position == 3);
  CHECK(tokens[5].kind == moyal::TokenKind::end);
  CHECK(tokens[5].position == 9);
  REQUIRE_ERROR_KIND(moyal::tokenize("x ! p"), SyntaxError);
}

TEST_CASE("formatting", "[lang]") {
  CHECK(moyal::format(P("x*p + (1/2)*i*hbar")) == "p*x + (1/2)*i*hbar");
  CHECK(moyal::format(OpPoly::monomial(1, 1) + OpPoly::monomial(0, 0, 1, kI)) == "P*X + i*hbar");
  CHECK(moyal::format(PhasePoly()) == "0");
  CHECK(moyal::format(P("-x^2 + 3*p - 2*i*hbar")) == "-x^2 + 3*p - 2*i*hbar");
  CHECK(moyal::format(AAPoly::monomial(1, 1, 1, -kI)) == "-i*hbar*A*Ad");
  CHECK(moyal::format(term(0, 1, 0, gq(1, 2, -3, 4))) == "(1/2 - 3/4*i)*x");
  CHECK(moyal::format(P("hbar^2 + hbar")) == "hbar + hbar^2");
  CHECK(moyal::format(gq(0, 1, -1, 2)) == "-(1/2)*i");
}

TEST_CASE("format and parse round-trip", "[lang][property]") {
  moyal::verify::Rng rng(89);
  for (int t = 0; t < 500; ++t) {
    const PhasePoly a = moyal::verify::random_phase_poly(rng, {6, 6, 2});
    const std::string text = moyal::format(a);
    INFO(text);
    CHECK(moyal::parse_phase_poly(text) == a);
    CHECK(moyal::format(moyal::parse_phase_poly(text)) == text);
  }
}

TEST_CASE("token positions increase and point at their text", "[lang][property]") {
  moyal::verify::Rng rng(97);
  for (int t = 0; t < 200; ++t) {
    const std::string text = moyal::format(moyal::verify::random_phase_poly(rng, {5}));
    const auto tokens = moyal::tokenize(text);
    for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
      CHECK(tokens[k].position < tokens[k + 1].position);
      CHECK(text.compare(tokens[k].position, tokens[k].text.size(), tokens[k].text) == 0);
    }
  }
}

TEST_CASE("parsing is deterministic", "[lang]") {
  const std::string text = "x^3*p - (2/3)*i*hbar*p^2 + 7";
  CHECK(moyal::format(P(text.c_str())) == moyal::format(P(text.c_str())));
}
