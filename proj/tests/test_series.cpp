#include "test_support.hpp"

#include <sstream>

#include "moyal/series.hpp"
#include "moyal/verify.hpp"
#include "oracles.hpp"

using moyal::FormalSeries;
using moyal::GaussianRational;
using moyal::Ordering;
using moyal::Preset;
using moyal::Rational;

namespace {
FormalSeries series(std::vector<GaussianRational> c) { return FormalSeries(std::move(c)); }

// Taylor coefficients of cos(y/2) and sin(y/2)/(y/2), computed from their power series.
FormalSeries cos_half(std::size_t order) {
  FormalSeries s(order);
  for (std::size_t k = 0; 2 * k <= order; ++k) {
    Rational c = Rational(1) / Rational(moyal::Integer(1) << (2 * k)) /
                 Rational(moyal::factorial(static_cast<unsigned>(2 * k)));
    if (k % 2 == 1) c = -c;
    s[2 * k] = c;
  }
  return s;
}

FormalSeries sinc_half(std::size_t order) {
  FormalSeries s(order);
  for (std::size_t k = 0; 2 * k <= order; ++k) {
    Rational c = Rational(1) / Rational(moyal::Integer(1) << (2 * k)) /
                 Rational(moyal::factorial(static_cast<unsigned>(2 * k + 1)));
    if (k % 2 == 1) c = -c;
    s[2 * k] = c;
  }
  return s;
}

FormalSeries exp_series(const GaussianRational& c, std::size_t order) {
  return FormalSeries::exponential(c, order);
}
}  // namespace

TEST_CASE("preset f coefficients", "[series]") {
  CHECK(moyal::preset_f(Preset::born_jordan, 2) == series({1, gq(0, 1, -1, 2), gq(-1, 6)}));
  CHECK(moyal::preset_f(Preset::antistandard, 3) == series({1, 0, 0, 0}));
  CHECK(moyal::preset_f(Preset::weyl, 1) == series({1, gq(0, 1, -1, 2)}));
  CHECK(moyal::preset_f("standard", 2) == series({1, -kI, gq(-1, 2)}));
  CHECK(moyal::preset_f("symmetric", 2) == series({1, gq(0, 1, -1, 2), gq(-1, 4)}));
  REQUIRE_ERROR_KIND(moyal::preset_f("lexicographic", 2), UnknownPreset);
}

TEST_CASE("Born-Jordan derivatives at zero", "[series]") {
  // f^(s)(0) = s! f_s = (-i)^s / (s + 1)
  const FormalSeries f = moyal::preset_f(Preset::born_jordan, 8);
  for (unsigned s = 0; s <= 8; ++s) {
    const GaussianRational derivative = f[s] * GaussianRational(Rational(moyal::factorial(s)));
    CHECK(derivative == moyal::pow(-kI, s) / GaussianRational(static_cast<long long>(s + 1)));
  }
}

TEST_CASE("series multiplication", "[series]") {
  const GaussianRational half_i = kI / GaussianRational(2);
  CHECK(moyal::series_mul(moyal::preset_f(Preset::standard, 6), exp_series(half_i, 6)) ==
        exp_series(-half_i, 6));
  CHECK(moyal::series_mul(moyal::preset_f(Preset::weyl, 6), exp_series(half_i, 6)) ==
        FormalSeries::one(6));
  CHECK(moyal::series_mul(series({1, 1, 0}), series({1, -1, 0})) == series({1, 0, -1}));
  REQUIRE_ERROR_KIND(moyal::series_mul(FormalSeries(2), FormalSeries(3)), OrderMismatch);
}

TEST_CASE("series reciprocal", "[series]") {
  CHECK(moyal::series_reciprocal(series({1, 0, 0})) == series({1, 0, 0}));

  const GaussianRational half_i = kI / GaussianRational(2);
  const FormalSeries inv = moyal::series_reciprocal(exp_series(-half_i, 7));
  CHECK(moyal::series_mul(inv, exp_series(-half_i, 7)) == FormalSeries::one(7));
  CHECK(inv == exp_series(half_i, 7));

  const Ordering bj = Ordering::preset(Preset::born_jordan, 6);
  CHECK(moyal::series_mul(bj.alpha(), moyal::series_reciprocal(bj.alpha())) == FormalSeries::one(6));
  REQUIRE_ERROR_KIND(moyal::series_reciprocal(series({0, 1})), NonUnitConstantTerm);
}

TEST_CASE("reciprocal of random invertible series", "[series][property]") {
  moyal::verify::Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto order = static_cast<std::size_t>(rng.uniform(0, 8));
    FormalSeries a(order);
    for (std::size_t k = 0; k <= order; ++k) a[k] = moyal::verify::random_coefficient(rng);
    CHECK(moyal::series_mul(a, moyal::series_reciprocal(a)) == FormalSeries::one(order));
  }
}

TEST_CASE("alpha of each preset matches its named function", "[series]") {
  const GaussianRational half_i = kI / GaussianRational(2);
  const std::size_t order = 10;
  CHECK(Ordering::preset(Preset::weyl, order).alpha() == FormalSeries::one(order));
  CHECK(Ordering::preset(Preset::standard, order).alpha() == exp_series(-half_i, order));
  CHECK(Ordering::preset(Preset::antistandard, order).alpha() == exp_series(half_i, order));
  CHECK(Ordering::preset(Preset::symmetric, order).alpha() == cos_half(order));
  CHECK(Ordering::preset(Preset::born_jordan, order).alpha() == sinc_half(order));
}

TEST_CASE("alpha reality per preset", "[series]") {
  CHECK(Ordering::preset(Preset::weyl, 8).alpha().is_real());
  CHECK(Ordering::preset(Preset::symmetric, 8).alpha().is_real());
  CHECK(Ordering::preset(Preset::born_jordan, 8).alpha().is_real());
  CHECK_FALSE(Ordering::preset(Preset::standard, 8).alpha().is_real());
  CHECK_FALSE(Ordering::preset(Preset::antistandard, 8).alpha().is_real());
}

TEST_CASE("g coefficients from f", "[series]") {
  for (Preset p : moyal::kAllPresets) {
    const FormalSeries f = moyal::preset_f(p, 6);
    for (unsigned m = 0; m <= 6; ++m) {
      for (unsigned n = 0; n <= 6; ++n) CHECK(moyal::g_from_f(f, m, n, 0) == GaussianRational(1));
    }
  }

  // Weyl g(1,1,1): the hbar coefficient of (xp + px)/2 in canonical order.
  const auto sym = oracle::ordered_monomial(oracle::Scheme::weyl, 1, 1);
  CHECK(sym.coefficient({0, 0, 1}) == gq(0, 1, 1, 2));
  CHECK(moyal::g_from_f(moyal::preset_f(Preset::weyl, 1), 1, 1, 1) == gq(0, 1, 1, 2));

  const FormalSeries anti = moyal::preset_f(Preset::antistandard, 6);
  for (unsigned s = 1; s <= 4; ++s) CHECK(moyal::g_from_f(anti, 5, 4, s).is_zero());

  REQUIRE_ERROR_KIND(moyal::g_from_f(anti, 1, 3, 2), IndexOutOfRange);
  REQUIRE_ERROR_KIND(moyal::g_from_f(moyal::preset_f(Preset::weyl, 1), 3, 3, 2), IndexOutOfRange);
}

TEST_CASE("g coefficients from alpha", "[series]") {
  // alpha = 1: (i/2) * 2 * 2 / 1 = 2i; from f: -(2*2) * (-i/2) = 2i.
  CHECK(moyal::g_from_alpha(FormalSeries::one(3), 2, 2, 1) == gq(0, 1, 2));
  CHECK(moyal::g_from_f(moyal::preset_f(Preset::weyl, 3), 2, 2, 1) == gq(0, 1, 2));

  const Ordering standard = Ordering::preset(Preset::standard, 3);
  CHECK(moyal::g_from_alpha(standard.alpha(), 1, 1, 1) == kI);
  CHECK(moyal::g_from_f(standard.f(), 1, 1, 1) == kI);

  moyal::verify::Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    FormalSeries alpha(4);
    alpha[0] = 1;
    for (std::size_t k = 1; k <= 4; ++k) alpha[k] = moyal::verify::random_coefficient(rng);
    CHECK(moyal::g_from_alpha(alpha, 3, 4, 0) == GaussianRational(1));
  }
  REQUIRE_ERROR_KIND(moyal::g_from_alpha(FormalSeries::one(2), 2, 2, 3), IndexOutOfRange);
}

TEST_CASE("g from f and g from alpha agree for every preset", "[series][property]") {
  for (Preset p : moyal::kAllPresets) {
    const Ordering ord = Ordering::preset(p, 8);
    for (unsigned m = 0; m <= 8; ++m) {
      for (unsigned n = 0; n <= 8; ++n) {
        for (unsigned s = 0; s <= std::min(m, n); ++s) {
          INFO(ord.name() << " m=" << m << " n=" << n << " s=" << s);
          CHECK(moyal::g_from_f(ord.f(), m, n, s) == moyal::g_from_alpha(ord.alpha(), m, n, s));
        }
      }
    }
  }
}

TEST_CASE("custom orderings", "[series]") {
  const Ordering c = Ordering::custom({1, gq(1, 3, -1, 2)}, 4);
  CHECK(c.name() == "custom");
  CHECK(c.order() == 4);
  CHECK(c.f() == series({1, gq(1, 3, -1, 2), 0, 0, 0}));
  CHECK(moyal::series_mul(c.alpha(), c.alpha_inv()) == FormalSeries::one(4));
  CHECK(c.with_order(6).f().order() == 6);
  REQUIRE_ERROR_KIND(Ordering::custom({2, 1}, 3), InvalidOrdering);
  REQUIRE_ERROR_KIND(Ordering::custom({}, 3), InvalidOrdering);
}

TEST_CASE("custom-f file format", "[series]") {
  std::istringstream good("1/1,0/1\n-1/2,3/4\n\n0/1,-1/3\n");
  const auto coeffs = moyal::parse_custom_f(good);
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[1] == gq(-1, 2, 3, 4));
  CHECK(coeffs[2] == gq(0, 1, -1, 3));

  std::istringstream not_one("1/2,0/1\n");
  REQUIRE_ERROR_KIND(moyal::parse_custom_f(not_one), InvalidOrdering);
  std::istringstream no_comma("1/1\n");
  REQUIRE_ERROR_KIND(moyal::parse_custom_f(no_comma), InvalidOrdering);
  std::istringstream bad_number("1/1,0/1\nx/2,0/1\n");
  REQUIRE_ERROR_KIND(moyal::parse_custom_f(bad_number), InvalidOrdering);
  std::istringstream zero_den("1/1,0/1\n1/0,0/1\n");
  REQUIRE_ERROR_KIND(moyal::parse_custom_f(zero_den), InvalidOrdering);
  std::istringstream empty("");
  REQUIRE_ERROR_KIND(moyal::parse_custom_f(empty), InvalidOrdering);

  REQUIRE_ERROR_KIND(moyal::resolve_ordering("/nonexistent/f.txt", 2), UnknownPreset);
  CHECK(moyal::resolve_ordering("born_jordan", 3).name() == "born_jordan");
}
