// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "moyal/verify.hpp"

namespace mv = moyal::verify;
using moyal::GaussianRational;
using moyal::Ordering;
using moyal::PhasePoly;
using moyal::Preset;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<mv::OrderingChoice> presets() {
  std::vector<mv::OrderingChoice> out;
  for (Preset p : moyal::kAllPresets) out.push_back(mv::preset_choice(p));
  return out;
}

mv::VerifyConfig config(unsigned max_degree, std::size_t trials, std::size_t dim = 12) {
  mv::VerifyConfig cfg;
  cfg.max_degree = max_degree;
  cfg.trials = trials;
  cfg.dim = dim;
  cfg.seed = 42;
  return cfg;
}

void run_reports(Outcome& out, mv::Suite suite, const std::vector<mv::OrderingChoice>& orderings,
                 const mv::VerifyConfig& cfg) {
  for (const auto& oc : orderings) {
    const mv::VerifyReport r = mv::run_suite(suite, oc, cfg);
    std::string why = r.suite + "/" + r.ordering;
    if (!r.failures.empty()) why += ": " + r.failures.front().inputs;
    out.require(r.passed, why);
  }
}

Outcome homomorphism() {
  Outcome out;
  auto orderings = presets();
  orderings.push_back(mv::random_custom_choice(42));
  run_reports(out, mv::Suite::homomorphism, orderings, config(4, 200));
  return out;
}

Outcome dirac() {
  Outcome out;
  run_reports(out, mv::Suite::dirac, presets(), config(5, 100));
  return out;
}

Outcome g_consistency() {
  Outcome out;
  run_reports(out, mv::Suite::g_consistency, presets(), config(4, 1));
  return out;
}

Outcome spot_values() {
  Outcome out;
  for (Preset p : moyal::kAllPresets) {
    const auto f = moyal::preset_f(p, 8);
    for (unsigned m = 0; m <= 8; ++m) {
      for (unsigned n = 0; n <= 8; ++n) {
        out.require(moyal::g_from_f(f, m, n, 0) == GaussianRational(1), "g(m,n,0) != 1");
      }
    }
  }
  const auto anti = moyal::preset_f(Preset::antistandard, 8);
  for (unsigned m = 1; m <= 8; ++m) {
    for (unsigned n = 1; n <= 8; ++n) {
      for (unsigned s = 1; s <= std::min(m, n); ++s) {
        out.require(moyal::g_from_f(anti, m, n, s).is_zero(), "antistandard g(m,n,s) != 0");
      }
    }
  }
  const auto bj = moyal::preset_f(Preset::born_jordan, 10);
  for (unsigned s = 0; s <= 10; ++s) {
    const GaussianRational derivative = bj[s] * GaussianRational(moyal::Rational(moyal::factorial(s)));
    const GaussianRational want =
        moyal::pow(-GaussianRational::i(), s) / GaussianRational(static_cast<long long>(s + 1));
    out.require(derivative == want, "Born-Jordan f^(s)(0) at s=" + std::to_string(s));
  }
  const moyal::OpPoly weyl_px =
      moyal::quantize_wg(PhasePoly::monomial(1, 1), Ordering::preset(Preset::weyl, 1));
  out.require(weyl_px == moyal::OpPoly::monomial(1, 1) +
                             moyal::OpPoly::monomial(0, 0, 1, GaussianRational::ratio(1, 2) *
                                                                  GaussianRational::i()),
              "W(px) = " + moyal::format(weyl_px));
  return out;
}

Outcome closed_forms() {
  Outcome out;
  const mv::VerifyReport r =
      mv::run_suite(mv::Suite::eq14_closed_form, mv::preset_choice(Preset::weyl), config(4, 1, 12));
  out.require(r.passed, "finding: " + r.notes["closed_form_findings"].dump());
  out.require(r.trials == 27, "expected 27 (m,n) cases, ran " + std::to_string(r.trials));
  return out;
}

Outcome matrix_homomorphism() {
  Outcome out;
  // max_degree 3 at dim 12 caps the degree sum at 6.
  run_reports(out, mv::Suite::matrix_block, presets(), config(3, 50, 12));
  return out;
}

Outcome reality() {
  Outcome out;
  for (Preset p : moyal::kAllPresets) {
    const mv::VerifyReport r = mv::run_suite(mv::Suite::adjoint_reality, mv::preset_choice(p),
                                             config(4, 100));
    out.require(r.passed, r.suite + "/" + r.ordering);
    const bool real = p == Preset::weyl || p == Preset::symmetric || p == Preset::born_jordan;
    if (real) {
      out.require(r.expected_failures.empty() && !r.expect_fail, r.ordering + " adjoint defect");
    } else {
      out.require(r.expect_fail && !r.expected_failures.empty(), r.ordering + " no counterexample");
    }
  }
  return out;
}

Outcome classical() {
  Outcome out;
  run_reports(out, mv::Suite::classical_limit, presets(), config(4, 50));
  return out;
}

Outcome associativity() {
  Outcome out;
  run_reports(out, mv::Suite::associativity, presets(), config(3, 50));
  return out;
}

Outcome roundtrip() {
  Outcome out;
  const mv::VerifyReport r =
      mv::run_suite(mv::Suite::parser_roundtrip, mv::preset_choice(Preset::weyl), config(6, 500));
  out.require(r.passed, r.failures.empty() ? "" : r.failures.front().inputs);
  out.require(r.notes["malformed_cases"].get<std::size_t>() >= 20, "corpus too small");
  return out;
}

struct Criterion {
  int number;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "star-product homomorphism", 60, homomorphism},
      {2, "Dirac conditions", 30, dirac},
      {3, "g-coefficient consistency", 5, g_consistency},
      {4, "preset spot values", 5, spot_values},
      {5, "closed-form F blocks", 30, closed_forms},
      {6, "matrix homomorphism", 60, matrix_homomorphism},
      {7, "reality", 30, reality},
      {8, "classical limit", 30, classical},
      {9, "star associativity", 30, associativity},
      {10, "parser round-trip", 5, roundtrip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs <= c.budget_s, "over time budget of " + std::to_string(c.budget_s) + " s");
    if (!out.ok) ++failed;
    std::printf("[%s] %2d. %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.number, c.name, secs,
                out.ok ? "" : ": ", out.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
