#pragma once

// The Heisenberg-Weyl enveloping algebra in canonical order (all p-hat left of
// all x-hat), the quantization map W_g into it, the formal adjoint, and the
// map L onto the ladder algebra with [a, a^dagger] = 1.
//
// Words are never stored. Products go through two closed-form reordering
// identities:
//   x^b p^c      = sum_k k! C(b,k) C(c,k) (i hbar)^k p^{c-k} x^{b-k}
//   (a^dag)^n a^c = sum_k (-1)^k k! C(n,k) C(c,k) a^{c-k} (a^dag)^{n-k}

#include "moyal/phase.hpp"

namespace moyal {

/// sum c hbar^k P^left X^right, P before X.
using OpPoly = Poly<OpTag>;
/// sum c hbar^k A^left Ad^right, A before Ad.
using AAPoly = Poly<LadderTag>;

namespace op {
inline OpPoly x() { return OpPoly::monomial(0, 1); }
inline OpPoly p() { return OpPoly::monomial(1, 0); }
inline OpPoly one() { return OpPoly(1); }
}  // namespace op

namespace ladder {
inline AAPoly a() { return AAPoly::monomial(1, 0); }
inline AAPoly adag() { return AAPoly::monomial(0, 1); }
}  // namespace ladder

/// Canonical form of the misordered word x^b p^c.
inline OpPoly normal_reduce_xp(unsigned b, unsigned c) {
  OpPoly r;
  const GaussianRational i = GaussianRational::i();
  for (unsigned k = 0; k <= std::min(b, c); ++k) {
    const Rational weight(factorial(k) * binomial(b, k) * binomial(c, k));
    r.add_term({c - k, b - k, k}, pow(i, k) * GaussianRational(weight));
  }
  return r;
}

/// Canonical form of the misordered word (a^dag)^n a^c.
inline AAPoly normal_reduce_aa(unsigned n, unsigned c) {
  AAPoly r;
  for (unsigned k = 0; k <= std::min(n, c); ++k) {
    Rational weight(factorial(k) * binomial(n, k) * binomial(c, k));
    if (k % 2 == 1) weight = -weight;
    r.add_term({c - k, n - k, 0}, GaussianRational(weight));
  }
  return r;
}

namespace detail {
// (L^a R^b)(L^c R^d) = L^a [R^b L^c] R^d, with the bracketed word supplied by `reduce`.
template <class Tag, class Reduce>
Poly<Tag> canonical_product(const Poly<Tag>& lhs, const Poly<Tag>& rhs, Reduce reduce) {
  Poly<Tag> r;
  for (const auto& [ea, ca] : lhs.terms()) {
    for (const auto& [eb, cb] : rhs.terms()) {
      const GaussianRational c = ca * cb;
      const unsigned hbar = ea.hbar + eb.hbar;
      if (ea.right == 0 || eb.left == 0) {
        r.add_term({ea.left + eb.left, ea.right + eb.right, hbar}, c);
        continue;
      }
      const Poly<Tag> middle = reduce(ea.right, eb.left);
      for (const auto& [em, cm] : middle.terms()) {
        r.add_term({ea.left + em.left, em.right + eb.right, hbar + em.hbar}, c * cm);
      }
    }
  }
  return r;
}
}  // namespace detail

inline OpPoly op_mul(const OpPoly& a, const OpPoly& b) {
  return detail::canonical_product(a, b, normal_reduce_xp);
}

inline AAPoly aa_mul(const AAPoly& a, const AAPoly& b) {
  return detail::canonical_product(a, b, normal_reduce_aa);
}

inline OpPoly operator*(const OpPoly& a, const OpPoly& b) { return op_mul(a, b); }
inline AAPoly operator*(const AAPoly& a, const AAPoly& b) { return aa_mul(a, b); }

/// a*b - b*a
template <class Tag>
Poly<Tag> commutator(const Poly<Tag>& a, const Poly<Tag>& b) {
  return a * b - b * a;
}

/// Formal adjoint: hbar real, p-hat and x-hat self-adjoint, so
/// (c hbar^k P^a X^b)^dagger = conj(c) hbar^k X^b P^a, then reordered.
inline OpPoly op_adjoint(const OpPoly& a) {
  OpPoly r;
  for (const auto& [e, c] : a.terms()) {
    const GaussianRational cc = c.conj();
    const OpPoly reversed = normal_reduce_xp(e.right, e.left);
    for (const auto& [em, cm] : reversed.terms()) {
      r.add_term({em.left, em.right, em.hbar + e.hbar}, cc * cm);
    }
  }
  return r;
}

/// W_g(hbar^k p^m x^n) = hbar^k sum_{s<=min(m,n)} g(m,n,s) hbar^s P^{m-s} X^{n-s}.
inline OpPoly quantize_wg(const PhasePoly& a, const Ordering& ordering) {
  if (a.mixed_degree() > ordering.order()) {
    throw Error(ErrorKind::InsufficientOrder,
                "ordering '" + ordering.name() + "' truncated at order " +
                    std::to_string(ordering.order()) + ", need " + std::to_string(a.mixed_degree()));
  }
  OpPoly r;
  for (const auto& [e, c] : a.terms()) {
    const unsigned m = e.left;
    const unsigned n = e.right;
    for (unsigned s = 0; s <= std::min(m, n); ++s) {
      r.add_term({m - s, n - s, e.hbar + s}, c * g_from_f(ordering.f(), m, n, s));
    }
  }
  return r;
}

/// i hbar W_g({v, A}) - [v-hat, W_g(A)] for v = x or p. Zero for every valid ordering.
inline OpPoly dirac_defect(const PhasePoly& a, const Ordering& ordering, Variable var) {
  const PhasePoly v = var == Variable::x ? phase::x() : phase::p();
  const OpPoly v_hat = var == Variable::x ? op::x() : op::p();
  const OpPoly lhs =
      quantize_wg(poisson_bracket(v, a), ordering).hbar_shifted(1).scaled(GaussianRational::i());
  return lhs - commutator(v_hat, quantize_wg(a, ordering));
}

/// L(x-hat) = a^dagger, L(p-hat) = -i hbar a:
/// hbar^k P^a X^b -> (-i)^a hbar^{k+a} A^a Ad^b.
inline AAPoly l_map(const OpPoly& a) {
  AAPoly r;
  const GaussianRational minus_i = -GaussianRational::i();
  for (const auto& [e, c] : a.terms()) {
    r.add_term({e.left, e.right, e.hbar + e.left}, c * pow(minus_i, e.left));
  }
  return r;
}

}  // namespace moyal
