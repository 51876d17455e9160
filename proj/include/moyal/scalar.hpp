#pragma once

// Exact coefficient arithmetic: the Gaussian rationals Q(i) and the ring of
// finite sums  c * sqrt(r) * hbar^k  used for truncated Fock-matrix entries.

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "moyal/error.hpp"

namespace moyal {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

/// n (n-1) ... (n-k+1); zero when k > n.
inline Integer falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned j = 0; j < k; ++j) r *= (n - j);
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return falling_factorial(n, k) / factorial(k);
}

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = Rational(0))  // NOLINT(google-explicit-constructor)
      : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long long re)  // NOLINT(google-explicit-constructor)
      : re_(re) {}
  GaussianRational(int re)  // NOLINT(google-explicit-constructor)
      : re_(re) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// n / d as a real Gaussian rational.
  static GaussianRational ratio(long long n, long long d) {
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    return {Rational(n) / Rational(d)};
  }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_imaginary() const { return re_ == 0 && im_ != 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& b) {
    Rational re = re_ * b.re_ - im_ * b.im_;
    im_ = re_ * b.im_ + im_ * b.re_;
    re_ = std::move(re);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in Q(i)");
    const Rational n = b.norm();
    *this *= b.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "3/2", "-1", "i", "-1/2i", "(3/2+1/2i)".
  std::string to_string() const {
    if (im_ == 0) return re_.str();
    std::string im_part;
    if (im_ == 1) {
      im_part = "i";
    } else if (im_ == -1) {
      im_part = "-i";
    } else {
      im_part = im_.str() + "i";
    }
    if (re_ == 0) return im_part;
    return "(" + re_.str() + (im_ > 0 ? "+" : "") + im_part + ")";
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational pow(GaussianRational base, unsigned e) {
  GaussianRational r(1);
  while (e != 0) {
    if (e & 1U) r *= base;
    base *= base;
    e >>= 1U;
  }
  return r;
}

/// Splits n = root^2 * squarefree. Returns {root, squarefree}; n = 0 gives {0, 0}.
inline std::pair<std::uint64_t, std::uint64_t> squarefree_decompose(std::uint64_t n) {
  if (n == 0) return {0, 0};
  std::uint64_t root = 1;
  std::uint64_t free = 1;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    for (; e >= 2; e -= 2) root *= d;
    if (e == 1) free *= d;
  }
  return {root, free * rest};
}

/// Sum of terms c * sqrt(radicand) * hbar^k with squarefree radicands.
class RadicalScalar {
 public:
  /// Terms are ordered by (hbar power, radicand).
  struct Key {
    unsigned hbar_power = 0;
    std::uint64_t radicand = 1;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using TermMap = std::map<Key, GaussianRational>;

  RadicalScalar() = default;
  RadicalScalar(const GaussianRational& c)  // NOLINT(google-explicit-constructor)
  {
    add_term({0, 1}, c);
  }

  /// c * sqrt(radicand) * hbar^k with the square part of the radicand pulled
  /// into the coefficient. A zero radicand gives the zero scalar.
  static RadicalScalar normalized(const GaussianRational& c, std::uint64_t radicand,
                                  unsigned hbar_power = 0) {
    RadicalScalar r;
    if (radicand == 0 || c.is_zero()) return r;
    auto [root, free] = squarefree_decompose(radicand);
    r.add_term({hbar_power, free}, c * GaussianRational(static_cast<long long>(root)));
    return r;
  }

  static RadicalScalar sqrt(std::uint64_t radicand) { return normalized(1, radicand, 0); }
  static RadicalScalar hbar(unsigned power, const GaussianRational& c = 1) {
    RadicalScalar r;
    r.add_term({power, 1}, c);
    return r;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Key& key, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  RadicalScalar conj() const {
    RadicalScalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conj());
    return r;
  }

  RadicalScalar operator-() const {
    RadicalScalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }

  RadicalScalar& operator+=(const RadicalScalar& b) {
    for (const auto& [k, c] : b.terms_) add_term(k, c);
    return *this;
  }
  RadicalScalar& operator-=(const RadicalScalar& b) {
    for (const auto& [k, c] : b.terms_) add_term(k, -c);
    return *this;
  }

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }

  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    RadicalScalar r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        // sqrt(r1) sqrt(r2) = g sqrt((r1/g)(r2/g)) for squarefree r1, r2 with g = gcd
        const std::uint64_t g = std::gcd(ka.radicand, kb.radicand);
        std::uint64_t radicand = 0;
        if (__builtin_mul_overflow(ka.radicand / g, kb.radicand / g, &radicand)) {
          throw std::overflow_error("radicand product exceeds 64 bits");
        }
        r.add_term({ka.hbar_power + kb.hbar_power, radicand},
                   ca * cb * GaussianRational(static_cast<long long>(g)));
      }
    }
    return r;
  }
  RadicalScalar& operator*=(const RadicalScalar& b) { return *this = *this * b; }

  friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;

  /// Numeric value with sqrt evaluated in floating point and hbar set to `hbar`.
  std::complex<double> evaluate(double hbar = 1.0) const {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [k, c] : terms_) {
      sum += c.to_complex() * std::sqrt(static_cast<double>(k.radicand)) *
             std::pow(hbar, static_cast<double>(k.hbar_power));
    }
    return sum;
  }

  /// Canonical text, e.g. "(3/2+1/2i)*sqrt(6)*hbar^2 - sqrt(2)"; zero is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string factors;
      if (k.radicand != 1) factors += "sqrt(" + std::to_string(k.radicand) + ")";
      if (k.hbar_power != 0) {
        if (!factors.empty()) factors += "*";
        factors += "hbar";
        if (k.hbar_power != 1) factors += "^" + std::to_string(k.hbar_power);
      }
      std::string term;
      if (factors.empty()) {
        term = c.to_string();
      } else if (c == GaussianRational(1)) {
        term = factors;
      } else if (c == GaussianRational(-1)) {
        term = "-" + factors;
      } else {
        term = c.to_string() + "*" + factors;
      }
      if (first) {
        out = term;
      } else if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
      first = false;
    }
    return out;
  }

 private:
  TermMap terms_;
};

}  // namespace moyal
