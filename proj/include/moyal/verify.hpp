#pragma once

// Property-verification harness: seeded random generators, the named suites,
// and the JSON-lines report stream used by `moyal verify`.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "moyal/fock.hpp"
#include "moyal/lang.hpp"
#include "moyal/opalg.hpp"
#include "moyal/phase.hpp"
#include "moyal/series.hpp"

namespace moyal::verify {

/// Seeded generator with platform-independent sampling (the standard
/// distributions are implementation-defined, which would break same-seed
/// byte-identical reports across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long long uniform(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return lo + static_cast<long long>(v % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// FNV-1a over the master seed and a list of labels.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::string_view> labels) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (int k = 0; k < 8; ++k) mix(static_cast<unsigned char>(master >> (8 * k)));
  for (std::string_view label : labels) {
    for (char c : label) mix(static_cast<unsigned char>(c));
    mix(0);
  }
  return h;
}

/// Nonzero integer in [-9, 9].
inline long long random_nonzero_digit(Rng& rng) {
  const long long v = rng.uniform(1, 9);
  return rng.coin() ? v : -v;
}

inline Rational random_rational(Rng& rng) {
  const long long num = random_nonzero_digit(rng);
  const long long den = random_nonzero_digit(rng);
  return Rational(num) / Rational(den);
}

/// Real part always nonzero; imaginary part nonzero half of the time unless real_only.
inline GaussianRational random_coefficient(Rng& rng, bool real_only = false) {
  const Rational re = random_rational(rng);
  if (real_only || rng.coin()) return GaussianRational(re);
  return {re, random_rational(rng)};
}

struct PolyShape {
  unsigned max_degree = 4;
  unsigned max_terms = 5;
  unsigned max_hbar = 1;
  bool real_only = false;
};

/// 1..max_terms monomials; total x/p degree uniform in [0, max_degree].
inline PhasePoly random_phase_poly(Rng& rng, const PolyShape& shape) {
  PhasePoly r;
  const auto count = static_cast<unsigned>(rng.uniform(1, shape.max_terms));
  for (unsigned t = 0; t < count; ++t) {
    const auto degree = static_cast<unsigned>(rng.uniform(0, shape.max_degree));
    const auto p = static_cast<unsigned>(rng.uniform(0, degree));
    const auto h = static_cast<unsigned>(rng.uniform(0, shape.max_hbar));
    r.add_term({p, degree - p, h}, random_coefficient(rng, shape.real_only));
  }
  if (r.is_zero()) r.add_term({0, 0, 0}, 1);
  return r;
}

/// Single term c hbar^h p^m x^n with m + n = degree.
inline PhasePoly random_monomial(Rng& rng, unsigned degree, unsigned max_hbar = 1) {
  const auto p = static_cast<unsigned>(rng.uniform(0, degree));
  const auto h = static_cast<unsigned>(rng.uniform(0, max_hbar));
  return PhasePoly::monomial(p, degree - p, h, random_coefficient(rng));
}

/// Random f with f_0 = 1 and the given number of further coefficients.
inline std::vector<GaussianRational> random_custom_f(Rng& rng, std::size_t order) {
  std::vector<GaussianRational> f{GaussianRational(1)};
  for (std::size_t k = 1; k <= order; ++k) f.push_back(random_coefficient(rng));
  return f;
}

/// Line format of the custom-f file: "re_num/re_den,im_num/im_den".
inline std::string custom_f_line(const GaussianRational& c) {
  auto part = [](const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
  };
  return part(c.re()) + "," + part(c.im());
}

enum class Suite {
  homomorphism,
  dirac,
  g_consistency,
  matrix_block,
  eq14_closed_form,
  adjoint_reality,
  associativity,
  classical_limit,
  l_homomorphism,
  parser_roundtrip,
};

inline constexpr Suite kAllSuites[] = {
    Suite::homomorphism,     Suite::dirac,           Suite::g_consistency,
    Suite::matrix_block,     Suite::eq14_closed_form, Suite::adjoint_reality,
    Suite::associativity,    Suite::classical_limit, Suite::l_homomorphism,
    Suite::parser_roundtrip,
};

constexpr std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::homomorphism: return "homomorphism";
    case Suite::dirac: return "dirac";
    case Suite::g_consistency: return "g-consistency";
    case Suite::matrix_block: return "matrix-block";
    case Suite::eq14_closed_form: return "eq14-closed-form";
    case Suite::adjoint_reality: return "adjoint-reality";
    case Suite::associativity: return "associativity";
    case Suite::classical_limit: return "classical-limit";
    case Suite::l_homomorphism: return "l-homomorphism";
    case Suite::parser_roundtrip: return "parser-roundtrip";
  }
  return "";
}

inline std::optional<Suite> find_suite(std::string_view name) {
  for (Suite s : kAllSuites) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

struct FailureRecord {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  std::string ordering;
  std::size_t trials = 0;
  bool passed = true;
  /// The suite passes by exhibiting a counterexample rather than by finding none.
  bool expect_fail = false;
  std::vector<FailureRecord> failures;
  std::vector<FailureRecord> expected_failures;
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
  double elapsed_ms = 0.0;

  nlohmann::ordered_json to_json(bool with_timing = false) const {
    auto records = [](const std::vector<FailureRecord>& list) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& f : list) {
        arr.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
      }
      return arr;
    };
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["ordering"] = ordering;
    j["trials"] = trials;
    j["passed"] = passed;
    j["expect_fail"] = expect_fail;
    j["failures"] = records(failures);
    j["expected_failures"] = records(expected_failures);
    j["notes"] = notes;
    if (with_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

struct VerifyConfig {
  unsigned max_degree = 4;
  std::size_t trials = 200;
  std::size_t dim = 12;
  std::uint64_t seed = 42;
};

/// A named ordering the harness can re-truncate at whatever order a suite needs.
struct OrderingChoice {
  std::string label;
  Ordering base;

  Ordering at(std::size_t order) const { return base.with_order(order); }
  std::string cli_flag() const { return "--ordering " + label; }
};

inline OrderingChoice preset_choice(Preset p) {
  return {std::string(preset_name(p)), Ordering::preset(p, 0)};
}

/// The random custom ordering of a run: f of order 6 drawn from the master seed.
inline OrderingChoice random_custom_choice(std::uint64_t master_seed) {
  Rng rng(derive_seed(master_seed, {"custom-f"}));
  return {"custom", Ordering::custom(random_custom_f(rng, 6), 0, "custom")};
}

struct MalformedCase {
  std::string_view input;
  ErrorKind kind;
  /// Inclusive byte range the reported position must fall in (the offending token).
  std::size_t lo;
  std::size_t hi;
};

inline constexpr MalformedCase kMalformedCorpus[] = {
    {"2x", ErrorKind::SyntaxError, 1, 1},
    {"x +", ErrorKind::SyntaxError, 3, 3},
    {"p^-1", ErrorKind::NegativeExponent, 2, 2},
    {"1/0", ErrorKind::DivisionByZeroLiteral, 2, 2},
    {"x $ p", ErrorKind::SyntaxError, 2, 2},
    {"y", ErrorKind::SyntaxError, 0, 0},
    {"(x + p", ErrorKind::SyntaxError, 6, 6},
    {"x + p)", ErrorKind::SyntaxError, 5, 5},
    {"sqrt(2)", ErrorKind::SyntaxError, 0, 3},
    {"x**p", ErrorKind::SyntaxError, 2, 2},
    {"x^p", ErrorKind::SyntaxError, 2, 2},
    {"x^", ErrorKind::SyntaxError, 2, 2},
    {"*x", ErrorKind::SyntaxError, 0, 0},
    {"", ErrorKind::SyntaxError, 0, 0},
    {"x p", ErrorKind::SyntaxError, 2, 2},
    {"3 hbar", ErrorKind::SyntaxError, 2, 5},
    {"x/2", ErrorKind::SyntaxError, 1, 1},
    {"1/x", ErrorKind::SyntaxError, 2, 2},
    {"1/-2", ErrorKind::SyntaxError, 2, 2},
    {"((x)", ErrorKind::SyntaxError, 4, 4},
    {"x + foo", ErrorKind::SyntaxError, 4, 6},
    {"2^-3", ErrorKind::NegativeExponent, 2, 2},
    {"x^2^3", ErrorKind::SyntaxError, 3, 3},
    {"hbar^1.5", ErrorKind::SyntaxError, 6, 6},
    {"1/2/3", ErrorKind::SyntaxError, 3, 3},
    {"()", ErrorKind::SyntaxError, 1, 1},
    {"--x", ErrorKind::SyntaxError, 1, 1},
    {"x^12345", ErrorKind::SyntaxError, 2, 6},
};

namespace detail {

inline std::string quote(const std::string& s) { return "\"" + s + "\""; }

// Truncation order that covers every product a suite forms.
inline std::size_t order_for(const VerifyConfig& cfg) { return 3 * cfg.max_degree + 2; }

inline void check(VerifyReport& report, bool ok, std::string inputs, const std::string& expected,
                  const std::string& actual) {
  if (!ok) report.failures.push_back({std::move(inputs), expected, actual});
}

inline void run_homomorphism(VerifyReport& r, const OrderingChoice& oc, const VerifyConfig& cfg,
                             Rng& rng) {
  const Ordering ord = oc.at(order_for(cfg));
  const PolyShape shape{cfg.max_degree};
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const PhasePoly a = random_phase_poly(rng, shape);
    const PhasePoly b = random_phase_poly(rng, shape);
    const OpPoly expected = op_mul(quantize_wg(a, ord), quantize_wg(b, ord));
    const OpPoly actual = quantize_wg(g_star(a, b, ord), ord);
    check(r, expected == actual,
          "star " + quote(format(a)) + " " + quote(format(b)) + " " + oc.cli_flag(),
          format(expected), format(actual));
  }
}

inline void run_dirac(VerifyReport& r, const OrderingChoice& oc, const VerifyConfig& cfg, Rng& rng) {
  const Ordering ord = oc.at(order_for(cfg));
  const PolyShape shape{cfg.max_degree};
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const PhasePoly a = random_phase_poly(rng, shape);
    for (Variable v : {Variable::x, Variable::p}) {
      const OpPoly defect = dirac_defect(a, ord, v);
      check(r, defect.is_zero(),
            "quantize " + quote(format(a)) + " " + oc.cli_flag() +
                (v == Variable::x ? " (variable x)" : " (variable p)"),
            "0", format(defect));
    }
  }
}

/// g(m,n,s) hbar^s written out per preset, as the coefficient of F^(m-s,n-s).
inline std::optional<GaussianRational> preset_closed_g(Preset p, unsigned m, unsigned n, unsigned s) {
  const GaussianRational i_pow = pow(GaussianRational::i(), s);
  const Rational base(factorial(m) * factorial(n));
  const Rational rest(factorial(m - s) * factorial(n - s));
  switch (p) {
    case Preset::weyl:
      return i_pow * GaussianRational(base / (Rational(Integer(1) << s) * Rational(factorial(s)) * rest));
    case Preset::standard:
      return i_pow * GaussianRational(base / (Rational(factorial(s)) * rest));
    case Preset::antistandard:
      return s == 0 ? GaussianRational(1) : GaussianRational(0);
    case Preset::symmetric:
      if (s == 0) return GaussianRational(1);
      return i_pow * GaussianRational(base / (Rational(2) * Rational(factorial(s)) * rest));
    case Preset::born_jordan:
      return i_pow * GaussianRational(base / (Rational(factorial(s + 1)) * rest));
  }
  return std::nullopt;
}

inline void run_g_consistency(VerifyReport& r, const OrderingChoice& oc, const VerifyConfig& cfg) {
  const unsigned limit = 2 * cfg.max_degree;
  const Ordering ord = oc.at(limit);
  std::size_t cases = 0;
  for (unsigned m = 0; m <= limit; ++m) {
    for (unsigned n = 0; n <= limit; ++n) {
      ++cases;
      for (unsigned s = 0; s <= std::min(m, n); ++s) {
        const GaussianRational from_f = g_from_f(ord.f(), m, n, s);
        const GaussianRational from_alpha = g_from_alpha(ord.alpha(), m, n, s);
        const std::string inputs = "gcoeff " + oc.cli_flag() + " " + std::to_string(m) + " " +
                                   std::to_string(n) + " (s=" + std::to_string(s) + ")";
        check(r, from_f == from_alpha, inputs, format(from_f), format(from_alpha));
        if (s == 0) check(r, from_f == GaussianRational(1), inputs, "1", format(from_f));
        if (auto preset = ord.preset_kind()) {
          const GaussianRational closed = *preset_closed_g(*preset, m, n, s);
          check(r, closed == from_f, inputs + " preset formula", format(closed), format(from_f));
        }
      }
    }
  }
  r.trials = cases;
}

inline void run_matrix_block(VerifyReport& r, const OrderingChoice& oc, const VerifyConfig& cfg,
                             Rng& rng) {
  const Ordering ord = oc.at(order_for(cfg));
  const auto degree_cap = static_cast<unsigned>(std::min<std::size_t>(2 * cfg.max_degree, cfg.dim / 2));
  std::size_t worst_margin = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto total = static_cast<unsigned>(rng.uniform(0, degree_cap));
    const auto deg_a = static_cast<unsigned>(rng.uniform(0, total));
    const PhasePoly a = random_monomial(rng, deg_a);
    const PhasePoly b = random_monomial(rng, total - deg_a);
    const PhasePoly ab = g_star(a, b, ord);
    const std::string args = quote(format(a)) + " " + quote(format(b)) + " " + oc.cli_flag() +
                             " --dim " + std::to_string(cfg.dim);

    const FockMatrix lhs = wg_matrix(a, ord, cfg.dim) * wg_matrix(b, ord, cfg.dim);
    const FockMatrix rhs = wg_matrix(ab, ord, cfg.dim);
    const BlockComparison cmp = safe_block_equal(lhs, rhs, total);
    if (!cmp) {
      const BlockMismatch& mm = *cmp.mismatch;
      check(r, false,
            "matrix product of " + args + " at (" + std::to_string(mm.row) + "," +
                std::to_string(mm.col) + ")",
            mm.rhs.to_string(), mm.lhs.to_string());
    } else if (auto m0 = minimal_safe_margin(lhs, rhs)) {
      worst_margin = std::max(worst_margin, *m0);
    }

    for (const PhasePoly* poly : {&a, &b, &ab}) {
      const FockMatrix direct = wg_matrix(*poly, ord, cfg.dim);
      const FockMatrix via_ladder = substitute_aa(l_map(quantize_wg(*poly, ord)), cfg.dim);
      check(r, direct == via_ladder,
            "matrix " + quote(format(*poly)) + " " + oc.cli_flag() + " --dim " +
                std::to_string(cfg.dim) + " (ladder route)",
            format(via_ladder), format(direct));
    }
  }
  r.notes["degree_cap"] = degree_cap;
  r.notes["max_empirical_margin"] = worst_margin;
}

inline void run_eq14(VerifyReport& r, const OrderingChoice&, const VerifyConfig& cfg) {
  const auto cap = static_cast<unsigned>(std::min<std::size_t>(6, cfg.dim - 1));
  std::size_t cases = 0;
  nlohmann::ordered_json findings = nlohmann::ordered_json::array();
  for (unsigned m = 0; m <= cap; ++m) {
    for (unsigned n = 0; m + n <= cap; ++n) {
      if (m + n == 0) continue;
      ++cases;
      const FockMatrix closed = f_matrix_closed(m, n, cfg.dim);
      const FockMatrix direct = f_matrix_direct(m, n, cfg.dim);
      const BlockComparison cmp = safe_block_equal(direct, closed, m);
      if (!cmp) {
        const BlockMismatch& mm = *cmp.mismatch;
        const std::string where = "F^(" + std::to_string(m) + "," + std::to_string(n) + ") dim " +
                                  std::to_string(cfg.dim) + " entry (" + std::to_string(mm.row) +
                                  "," + std::to_string(mm.col) + ")";
        findings.push_back(where);
        check(r, false, where, mm.lhs.to_string(), mm.rhs.to_string());
      }
    }
  }
  r.trials = cases;
  r.notes["closed_form_findings"] = findings;
}

inline void run_adjoint_reality(VerifyReport& r, const OrderingChoice& oc, const VerifyConfig& cfg,
                                Rng& rng) {
  const Ordering ord = oc.at(order_for(cfg));
  r.expect_fail = !ord.alpha().is_real();
  const PolyShape shape{cfg.max_degree, 5, 0, true};
  std::vector<FailureRecord> defects;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    // The first trial probes px, the smallest monomial that separates the orderings.
    const PhasePoly a =
        (t == 0 && r.expect_fail) ? PhasePoly::monomial(1, 1) : random_phase_poly(rng, shape);
    const OpPoly w = quantize_wg(a, ord);
    const OpPoly adj = op_adjoint(w);
    if (adj != w) {
      defects.push_back({"quantize " + quote(format(a)) + " " + oc.cli_flag() + " (adjoint)",
                         format(w), format(adj)});
    }
  }
  if (r.expect_fail) {
    r.expected_failures = std::move(defects);
    if (r.expected_failures.empty()) {
      r.failures.push_back({"adjoint-reality " + oc.cli_flag(),
                            "a real A with non-symmetric quantization", "none found"});
    }
  } else {
    r.failures = std::move(defects);
  }
  r.notes["alpha_real"] = !r.expect_fail;
}

inline void run_associativity(VerifyReport& r, const OrderingChoice& oc, const VerifyConfig& cfg,
                              Rng& rng) {
  const Ordering ord = oc.at(order_for(cfg));
  const PolyShape shape{std::min(3U, cfg.max_degree)};
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const PhasePoly a = random_phase_poly(rng, shape);
    const PhasePoly b = random_phase_poly(rng, shape);
    const PhasePoly c = random_phase_poly(rng, shape);
    const PhasePoly left = g_star(g_star(a, b, ord), c, ord);
    const PhasePoly right = g_star(a, g_star(b, c, ord), ord);
    check(r, left == right,
          "star (" + quote(format(a)) + " " + quote(format(b)) + ") " + quote(format(c)) + " " +
              oc.cli_flag(),
          format(right), format(left));
  }
}

inline void run_classical_limit(VerifyReport& r, const OrderingChoice& oc, const VerifyConfig& cfg,
                                Rng& rng) {
  const Ordering ord = oc.at(order_for(cfg));
  const PolyShape shape{cfg.max_degree, 5, 0};
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const PhasePoly a = random_phase_poly(rng, shape);
    const PhasePoly b = random_phase_poly(rng, shape);
    const PhasePoly bracket = poisson_bracket(a, b);
    const PhasePoly comm = g_star(a, b, ord) - g_star(b, a, ord);
    const std::string inputs =
        "star " + quote(format(a)) + " " + quote(format(b)) + " " + oc.cli_flag() + " (commutator)";
    try {
      const PhasePoly limit = classical_limit(divide_by_i_hbar(comm));
      check(r, limit == bracket, inputs, format(bracket), format(limit));
    } catch (const Error&) {
      check(r, false, inputs, "commutator divisible by i*hbar", format(comm));
    }
  }
}

inline OpPoly as_operator(const PhasePoly& a) {
  OpPoly r;
  for (const auto& [e, c] : a.terms()) r.add_term(e, c);
  return r;
}

inline void run_l_homomorphism(VerifyReport& r, const OrderingChoice&, const VerifyConfig& cfg,
                               Rng& rng) {
  const PolyShape shape{cfg.max_degree};
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const OpPoly a = as_operator(random_phase_poly(rng, shape));
    const OpPoly b = as_operator(random_phase_poly(rng, shape));
    const AAPoly expected = l_map(op_mul(a, b));
    const AAPoly actual = aa_mul(l_map(a), l_map(b));
    check(r, expected == actual, "L(" + format(a) + ") L(" + format(b) + ")", format(expected),
          format(actual));
  }
}

inline void run_parser_roundtrip(VerifyReport& r, const OrderingChoice&, const VerifyConfig& cfg,
                                 Rng& rng) {
  const PolyShape shape{cfg.max_degree, 5, 2};
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const PhasePoly a = random_phase_poly(rng, shape);
    const std::string text = format(a);
    try {
      const PhasePoly back = parse_phase_poly(text);
      check(r, back == a, "parse " + quote(text), text, format(back));
    } catch (const ParseError& e) {
      check(r, false, "parse " + quote(text), text, e.what());
    }
  }
  std::size_t corpus = 0;
  for (const MalformedCase& mc : kMalformedCorpus) {
    ++corpus;
    const std::string expected = std::string(to_string(mc.kind)) + " in [" + std::to_string(mc.lo) +
                                 "," + std::to_string(mc.hi) + "]";
    try {
      const PhasePoly parsed = parse_phase_poly(mc.input);
      check(r, false, "parse " + quote(std::string(mc.input)), expected, "accepted: " + format(parsed));
    } catch (const ParseError& e) {
      const bool ok = e.kind() == mc.kind && e.position() >= mc.lo && e.position() <= mc.hi;
      check(r, ok, "parse " + quote(std::string(mc.input)), expected,
            std::string(to_string(e.kind())) + " at " + std::to_string(e.position()));
    }
  }
  r.notes["malformed_cases"] = corpus;
}

}  // namespace detail

/// Runs one suite against one ordering. Deterministic for a given config.
inline VerifyReport run_suite(Suite suite, const OrderingChoice& oc, const VerifyConfig& cfg) {
  VerifyReport r;
  r.suite = std::string(suite_name(suite));
  r.ordering = oc.label;
  r.trials = cfg.trials;
  Rng rng(derive_seed(cfg.seed, {r.suite, r.ordering}));
  const auto start = std::chrono::steady_clock::now();
  switch (suite) {
    case Suite::homomorphism: detail::run_homomorphism(r, oc, cfg, rng); break;
    case Suite::dirac: detail::run_dirac(r, oc, cfg, rng); break;
    case Suite::g_consistency: detail::run_g_consistency(r, oc, cfg); break;
    case Suite::matrix_block: detail::run_matrix_block(r, oc, cfg, rng); break;
    case Suite::eq14_closed_form: detail::run_eq14(r, oc, cfg); break;
    case Suite::adjoint_reality: detail::run_adjoint_reality(r, oc, cfg, rng); break;
    case Suite::associativity: detail::run_associativity(r, oc, cfg, rng); break;
    case Suite::classical_limit: detail::run_classical_limit(r, oc, cfg, rng); break;
    case Suite::l_homomorphism: detail::run_l_homomorphism(r, oc, cfg, rng); break;
    case Suite::parser_roundtrip: detail::run_parser_roundtrip(r, oc, cfg, rng); break;
  }
  r.passed = r.failures.empty();
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct VerifyPlan {
  std::vector<Suite> suites;
  std::vector<OrderingChoice> orderings;
  /// Also run the seeded random custom ordering for the homomorphism and dirac suites.
  bool with_random_custom = false;
  VerifyConfig config;
};

/// Validates flag values; throws Error(InvalidOrdering / IndexOutOfRange) before any suite runs.
inline void validate(const VerifyConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorKind::IndexOutOfRange, "--trials must be at least 1");
  if (cfg.dim < 2) throw Error(ErrorKind::IndexOutOfRange, "--dim must be at least 2");
  if (cfg.max_degree < 1) throw Error(ErrorKind::IndexOutOfRange, "--max-degree must be at least 1");
}

/// Runs the plan, handing each report to `sink` as soon as it is complete.
/// Returns true iff every report passed.
inline bool run_plan(const VerifyPlan& plan, const std::function<void(const VerifyReport&)>& sink) {
  validate(plan.config);
  bool all_passed = true;
  const OrderingChoice custom = random_custom_choice(plan.config.seed);
  for (Suite suite : plan.suites) {
    std::vector<const OrderingChoice*> targets;
    for (const auto& oc : plan.orderings) targets.push_back(&oc);
    if (plan.with_random_custom && (suite == Suite::homomorphism || suite == Suite::dirac)) {
      targets.push_back(&custom);
    }
    for (const OrderingChoice* oc : targets) {
      VerifyReport report = run_suite(suite, *oc, plan.config);
      if (oc == &custom) {
        nlohmann::ordered_json lines = nlohmann::ordered_json::array();
        for (const auto& c : custom.base.custom_coefficients()) lines.push_back(custom_f_line(c));
        report.notes["custom_f"] = lines;
      }
      all_passed = all_passed && report.passed;
      sink(report);
    }
  }
  return all_passed;
}

}  // namespace moyal::verify
