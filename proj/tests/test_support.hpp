#pragma once

#include <catch2/catch.hpp>

#include <string>

#include "moyal/error.hpp"
#include "moyal/fock.hpp"
#include "moyal/lang.hpp"
#include "moyal/series.hpp"

namespace Catch {
template <>
struct StringMaker<moyal::GaussianRational> {
  static std::string convert(const moyal::GaussianRational& v) { return v.to_string(); }
};
template <>
struct StringMaker<moyal::RadicalScalar> {
  static std::string convert(const moyal::RadicalScalar& v) { return v.to_string(); }
};
template <>
struct StringMaker<moyal::PhasePoly> {
  static std::string convert(const moyal::PhasePoly& v) { return moyal::format(v); }
};
template <>
struct StringMaker<moyal::OpPoly> {
  static std::string convert(const moyal::OpPoly& v) { return moyal::format(v); }
};
template <>
struct StringMaker<moyal::AAPoly> {
  static std::string convert(const moyal::AAPoly& v) { return moyal::format(v); }
};
template <>
struct StringMaker<moyal::FockMatrix> {
  static std::string convert(const moyal::FockMatrix& v) { return "\n" + moyal::format(v); }
};
template <>
struct StringMaker<moyal::FormalSeries> {
  static std::string convert(const moyal::FormalSeries& v) {
    std::string s = "[";
    for (std::size_t k = 0; k <= v.order(); ++k) s += (k ? ", " : "") + v[k].to_string();
    return s + "]";
  }
};
}  // namespace Catch

class ErrorKindIs : public Catch::MatcherBase<moyal::Error> {
 public:
  explicit ErrorKindIs(moyal::ErrorKind kind) : kind_(kind) {}
  bool match(const moyal::Error& e) const override { return e.kind() == kind_; }
  std::string describe() const override {
    return "has kind " + std::string(moyal::to_string(kind_));
  }

 private:
  moyal::ErrorKind kind_;
};

#define REQUIRE_ERROR_KIND(expr, kind) \
  REQUIRE_THROWS_MATCHES(expr, moyal::Error, ErrorKindIs(moyal::ErrorKind::kind))

inline moyal::GaussianRational gq(long long re_num, long long re_den, long long im_num = 0,
                                  long long im_den = 1) {
  return {moyal::Rational(re_num) / moyal::Rational(re_den),
          moyal::Rational(im_num) / moyal::Rational(im_den)};
}

inline const moyal::GaussianRational kI = moyal::GaussianRational::i();

inline moyal::PhasePoly P(const char* text) { return moyal::parse_phase_poly(text); }
