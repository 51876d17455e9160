#pragma once

// Phase-space polynomials in (p, x, hbar): derivatives, Poisson bracket, the
// Moyal product and the twisted star products of arbitrary orderings.

#include <string>

#include "moyal/poly.hpp"
#include "moyal/series.hpp"

namespace moyal {

/// Commutative polynomial; term key (p power, x power, hbar power).
using PhasePoly = Poly<PhaseTag>;

enum class Variable { x, p };

namespace phase {
inline PhasePoly x() { return PhasePoly::monomial(0, 1); }
inline PhasePoly p() { return PhasePoly::monomial(1, 0); }
inline PhasePoly hbar() { return PhasePoly::monomial(0, 0, 1); }
inline PhasePoly constant(const GaussianRational& c) { return PhasePoly(c); }
}  // namespace phase

inline PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
  PhasePoly r;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      r.add_term({ea.left + eb.left, ea.right + eb.right, ea.hbar + eb.hbar}, ca * cb);
    }
  }
  return r;
}

inline PhasePoly& operator*=(PhasePoly& a, const PhasePoly& b) { return a = a * b; }

inline PhasePoly pow(const PhasePoly& a, unsigned e) {
  PhasePoly r(1);
  for (unsigned k = 0; k < e; ++k) r *= a;
  return r;
}

/// d^x_times/dx^x_times d^p_times/dp^p_times of a single term, accumulated into out.
inline void add_term_derivative(PhasePoly& out, const Exponents& e, const GaussianRational& c,
                                unsigned x_times, unsigned p_times,
                                const GaussianRational& factor = 1) {
  if (e.right < x_times || e.left < p_times) return;
  const Rational ff(falling_factorial(e.right, x_times) * falling_factorial(e.left, p_times));
  out.add_term({e.left - p_times, e.right - x_times, e.hbar}, c * factor * GaussianRational(ff));
}

inline PhasePoly partial_derivative(const PhasePoly& a, Variable var, unsigned times = 1) {
  PhasePoly r;
  for (const auto& [e, c] : a.terms()) {
    if (var == Variable::x) {
      add_term_derivative(r, e, c, times, 0);
    } else {
      add_term_derivative(r, e, c, 0, times);
    }
  }
  return r;
}

/// {A, B} = dA/dx dB/dp - dA/dp dB/dx.
inline PhasePoly poisson_bracket(const PhasePoly& a, const PhasePoly& b) {
  return partial_derivative(a, Variable::x) * partial_derivative(b, Variable::p) -
         partial_derivative(a, Variable::p) * partial_derivative(b, Variable::x);
}

/// A * B = sum_k (i hbar/2)^k / k! sum_j (-1)^j C(k,j) (d_x^{k-j} d_p^j A)(d_p^{k-j} d_x^j B).
/// The sum stops once k exceeds the available x or p degree on either side.
inline PhasePoly moyal_star(const PhasePoly& a, const PhasePoly& b) {
  PhasePoly r;
  const unsigned kmax = std::min(a.degree(), b.degree());
  const GaussianRational half_i(Rational(0), Rational(1, 2));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (unsigned k = 0; k <= kmax; ++k) {
        const GaussianRational weight = pow(half_i, k) / GaussianRational(Rational(factorial(k)));
        for (unsigned j = 0; j <= k; ++j) {
          // A is differentiated (k-j) times in x and j times in p; B the other way round.
          if (ea.right < k - j || ea.left < j || eb.left < k - j || eb.right < j) continue;
          Rational coeff(binomial(k, j) * falling_factorial(ea.right, k - j) *
                         falling_factorial(ea.left, j) * falling_factorial(eb.left, k - j) *
                         falling_factorial(eb.right, j));
          if (j % 2 == 1) coeff = -coeff;
          r.add_term({ea.left - j + eb.left - (k - j), ea.right - (k - j) + eb.right - j,
                      ea.hbar + eb.hbar + k},
                     ca * cb * weight * GaussianRational(coeff));
        }
      }
    }
  }
  return r;
}

/// series(-hbar d^2/dx dp) applied to A: sum_k c_k (-hbar)^k d_x^k d_p^k A.
inline PhasePoly alpha_transform(const PhasePoly& a, const FormalSeries& series) {
  if (a.mixed_degree() > series.order()) {
    throw Error(ErrorKind::InsufficientOrder,
                "series order " + std::to_string(series.order()) + " below mixed degree " +
                    std::to_string(a.mixed_degree()));
  }
  PhasePoly r;
  for (const auto& [e, c] : a.terms()) {
    const unsigned kmax = std::min(e.left, e.right);
    for (unsigned k = 0; k <= kmax; ++k) {
      if (series[k].is_zero()) continue;
      Rational coeff(falling_factorial(e.left, k) * falling_factorial(e.right, k));
      if (k % 2 == 1) coeff = -coeff;
      r.add_term({e.left - k, e.right - k, e.hbar + k}, c * series[k] * GaussianRational(coeff));
    }
  }
  return r;
}

/// A *_g B = alpha^{-1}[ (alpha A) * (alpha B) ] with * the Moyal product.
inline PhasePoly g_star(const PhasePoly& a, const PhasePoly& b, const Ordering& ordering) {
  const PhasePoly product = moyal_star(alpha_transform(a, ordering.alpha()),
                                       alpha_transform(b, ordering.alpha()));
  return alpha_transform(product, ordering.alpha_inv());
}

inline PhasePoly classical_limit(const PhasePoly& a) {
  PhasePoly r;
  for (const auto& [e, c] : a.terms()) {
    if (e.hbar == 0) r.add_term(e, c);
  }
  return r;
}

/// A / (i hbar). Throws NotDivisible if some term carries no hbar.
inline PhasePoly divide_by_i_hbar(const PhasePoly& a) {
  PhasePoly r;
  const GaussianRational minus_i = -GaussianRational::i();
  for (const auto& [e, c] : a.terms()) {
    if (e.hbar == 0) {
      throw Error(ErrorKind::NotDivisible, "term without hbar cannot be divided by i*hbar");
    }
    r.add_term({e.left, e.right, e.hbar - 1}, c * minus_i);
  }
  return r;
}

}  // namespace moyal
