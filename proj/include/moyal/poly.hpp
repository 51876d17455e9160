#pragma once

#include <algorithm>
#include <compare>
#include <map>

#include "moyal/scalar.hpp"

namespace moyal {

/// Exponent triple of a monomial. `left` and `right` are the powers of the two
/// generators in their canonical order: p then x for phase-space and operator
/// polynomials, a then a-dagger for ladder polynomials.
struct Exponents {
  unsigned left = 0;
  unsigned right = 0;
  unsigned hbar = 0;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

struct PhaseTag {};
struct OpTag {};
struct LadderTag {};

/// Sparse polynomial c * hbar^k * L^left * R^right with Gaussian-rational
/// coefficients. The tag fixes the algebra; only the commutative phase-space
/// algebra gets operator*. No zero coefficient is ever stored.
template <class Tag>
class Poly {
 public:
  using TermMap = std::map<Exponents, GaussianRational>;

  Poly() = default;
  explicit Poly(const GaussianRational& constant) { add_term({0, 0, 0}, constant); }

  static Poly monomial(unsigned left, unsigned right, unsigned hbar = 0,
                       const GaussianRational& c = 1) {
    Poly r;
    r.add_term({left, right, hbar}, c);
    return r;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  GaussianRational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  void add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Largest left + right over all terms (hbar does not count); 0 for zero.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.left + e.right);
    return d;
  }
  unsigned left_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.left);
    return d;
  }
  unsigned right_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.right);
    return d;
  }
  /// Largest min(left, right) over all terms: the number of contractions any
  /// reordering or bidifferential operator can perform on this polynomial.
  unsigned mixed_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::min(e.left, e.right));
    return d;
  }

  bool is_real() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_real(); });
  }
  bool is_hbar_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.hbar == 0; });
  }

  Poly scaled(const GaussianRational& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
  }

  /// Multiplies by hbar^k.
  Poly hbar_shifted(unsigned k) const {
    Poly r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(Exponents{e.left, e.right, e.hbar + k}, v);
    return r;
  }

  Poly conj() const {
    Poly r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v.conj());
    return r;
  }

  Poly operator-() const { return scaled(-1); }

  Poly& operator+=(const Poly& b) {
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& b) {
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const GaussianRational& c, const Poly& a) { return a.scaled(c); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  TermMap terms_;
};

}  // namespace moyal
