#pragma once

// Truncated Fock-space matrices over the radical ring.
//
// Storage and accessors are 0-based. The closed forms for F^(m,n) are written
// with the 1-based Fock index j >= 1, so that (a)_{1,2} = sqrt(1); Fock index j
// lives at row/column j - 1. The JSON rendering reports 1-based indices.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "moyal/opalg.hpp"

namespace moyal {

class FockMatrix {
 public:
  explicit FockMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw Error(ErrorKind::DimMismatch, "matrix dimension must be at least 1");
  }

  static FockMatrix identity(std::size_t dim) {
    FockMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m(k, k) = GaussianRational(1);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  RadicalScalar& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const RadicalScalar& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const RadicalScalar& s) { return s.is_zero(); });
  }

  FockMatrix scaled(const RadicalScalar& c) const {
    FockMatrix r(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (!entries_[k].is_zero()) r.entries_[k] = c * entries_[k];
    }
    return r;
  }

  /// Conjugate transpose with hbar treated as real.
  FockMatrix adjoint() const {
    FockMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j).conj();
    }
    return r;
  }

  FockMatrix transpose() const {
    FockMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  FockMatrix& operator+=(const FockMatrix& b) {
    check_dims(b);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += b.entries_[k];
    return *this;
  }
  FockMatrix& operator-=(const FockMatrix& b) {
    check_dims(b);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= b.entries_[k];
    return *this;
  }
  friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { return a += b; }
  friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { return a -= b; }

  friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
    a.check_dims(b);
    const std::size_t n = a.dim_;
    FockMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const RadicalScalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const RadicalScalar& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    }
    return r;
  }

  friend bool operator==(const FockMatrix&, const FockMatrix&) = default;

 private:
  void check_dims(const FockMatrix& b) const {
    if (dim_ != b.dim_) {
      throw Error(ErrorKind::DimMismatch,
                  "dimensions " + std::to_string(dim_) + " and " + std::to_string(b.dim_));
    }
  }

  std::size_t dim_;
  std::vector<RadicalScalar> entries_;
};

struct LadderPair {
  FockMatrix a;
  FockMatrix adag;
};

/// Truncated annihilation matrix, (a)_{j,j+1} = sqrt(j), and its transpose.
inline LadderPair ladder_matrices(std::size_t dim) {
  FockMatrix a(dim);
  for (std::size_t j = 1; j < dim; ++j) a(j - 1, j) = RadicalScalar::sqrt(j);
  FockMatrix adag = a.transpose();
  return {std::move(a), std::move(adag)};
}

inline FockMatrix matrix_power(const FockMatrix& m, unsigned e) {
  FockMatrix r = FockMatrix::identity(m.dim());
  for (unsigned k = 0; k < e; ++k) r = r * m;
  return r;
}

/// a^m (a^dag)^n by repeated truncated multiplication.
inline FockMatrix ladder_word(unsigned m, unsigned n, std::size_t dim) {
  const auto [a, adag] = ladder_matrices(dim);
  return matrix_power(a, m) * matrix_power(adag, n);
}

/// F^(m,n) = (-i hbar a)^m (a^dag)^n by direct multiplication of truncated matrices.
inline FockMatrix f_matrix_direct(unsigned m, unsigned n, std::size_t dim) {
  const RadicalScalar minus_i_hbar = RadicalScalar::hbar(1, -GaussianRational::i());
  const auto [a, adag] = ladder_matrices(dim);
  return matrix_power(a.scaled(minus_i_hbar), m) * matrix_power(adag, n);
}

namespace detail {
// j (j+1) ... (j+len-1)
inline std::uint64_t rising_product(std::uint64_t j, unsigned len) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < len; ++k) {
    if (__builtin_mul_overflow(r, j + k, &r)) throw std::overflow_error("rising product overflow");
  }
  return r;
}
}  // namespace detail

/// F^(m,n) filled from the closed-form nonzero entries (1-based j):
///   (F^(m,0))_{j,j+m}     = (-i hbar)^m sqrt(j..(j+m-1))
///   (F^(0,n))_{j+n,j}     = sqrt(j..(j+n-1))
///   (F^(m,n))_{j,j+m-n}   = (-i hbar)^m (j+m-n)..(j+m-1) sqrt(j..(j+m-n-1))   m > n > 0
///   (F^(m,m))_{j,j}       = (-i hbar)^m j..(j+m-1)
///   (F^(m,n))_{j+n-m,j}   = (-i hbar)^m (j+n-m)..(j+n-1) sqrt(j..(j+n-m-1))   n > m > 0
/// These are entries of the infinite matrices; near the bottom-right corner
/// they differ from the truncated product.
inline FockMatrix f_matrix_closed(unsigned m, unsigned n, std::size_t dim) {
  if (m == 0 && n == 0) {
    throw Error(ErrorKind::UndefinedForUnitCase, "closed forms require m + n > 0");
  }
  FockMatrix r(dim);
  const GaussianRational phase = pow(-GaussianRational::i(), m);
  // Every case places the value for index j at (row, col) with a fixed offset.
  for (std::uint64_t j = 1; j <= dim; ++j) {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    RadicalScalar value;
    if (n == 0) {
      row = j;
      col = j + m;
      value = RadicalScalar::normalized(phase, detail::rising_product(j, m), m);
    } else if (m == 0) {
      row = j + n;
      col = j;
      value = RadicalScalar::sqrt(detail::rising_product(j, n));
    } else if (m > n) {
      row = j;
      col = j + m - n;
      const auto integer_part = static_cast<long long>(detail::rising_product(j + m - n, n));
      value = RadicalScalar::normalized(phase * GaussianRational(integer_part),
                                        detail::rising_product(j, m - n), m);
    } else if (m == n) {
      row = j;
      col = j;
      const auto integer_part = static_cast<long long>(detail::rising_product(j, m));
      value = RadicalScalar::hbar(m, phase * GaussianRational(integer_part));
    } else {
      row = j + n - m;
      col = j;
      const auto integer_part = static_cast<long long>(detail::rising_product(j + n - m, m));
      value = RadicalScalar::normalized(phase * GaussianRational(integer_part),
                                        detail::rising_product(j, n - m), m);
    }
    if (row <= dim && col <= dim) r(row - 1, col - 1) = std::move(value);
  }
  return r;
}

/// Matrix image of each ladder monomial A^m Ad^n scaled by its coefficient and hbar power.
inline FockMatrix substitute_aa(const AAPoly& a, std::size_t dim) {
  FockMatrix r(dim);
  std::map<std::pair<unsigned, unsigned>, FockMatrix> words;
  for (const auto& [e, c] : a.terms()) {
    auto it = words.find({e.left, e.right});
    if (it == words.end()) {
      it = words.emplace(std::pair{e.left, e.right}, ladder_word(e.left, e.right, dim)).first;
    }
    r += it->second.scaled(RadicalScalar::hbar(e.hbar, c));
  }
  return r;
}

/// W~_g(hbar^k p^m x^n) = hbar^k sum_s g(m,n,s) hbar^s F^(m-s,n-s), with the
/// F blocks from direct multiplication.
inline FockMatrix wg_matrix(const PhasePoly& a, const Ordering& ordering, std::size_t dim) {
  if (a.mixed_degree() > ordering.order()) {
    throw Error(ErrorKind::InsufficientOrder,
                "ordering '" + ordering.name() + "' truncated at order " +
                    std::to_string(ordering.order()) + ", need " + std::to_string(a.mixed_degree()));
  }
  FockMatrix r(dim);
  std::map<std::pair<unsigned, unsigned>, FockMatrix> blocks;
  auto block = [&](unsigned m, unsigned n) -> const FockMatrix& {
    auto it = blocks.find({m, n});
    if (it == blocks.end()) it = blocks.emplace(std::pair{m, n}, f_matrix_direct(m, n, dim)).first;
    return it->second;
  };
  for (const auto& [e, c] : a.terms()) {
    const unsigned m = e.left;
    const unsigned n = e.right;
    for (unsigned s = 0; s <= std::min(m, n); ++s) {
      const GaussianRational g = g_from_f(ordering.f(), m, n, s);
      if (g.is_zero()) continue;
      r += block(m - s, n - s).scaled(RadicalScalar::hbar(e.hbar + s, c * g));
    }
  }
  return r;
}

struct BlockMismatch {
  std::size_t row = 0;  // 1-based
  std::size_t col = 0;  // 1-based
  RadicalScalar lhs;
  RadicalScalar rhs;
};

struct BlockComparison {
  bool equal = true;
  std::optional<BlockMismatch> mismatch;
  explicit operator bool() const noexcept { return equal; }
};

/// Exact comparison of the leading (dim - margin) x (dim - margin) block.
inline BlockComparison safe_block_equal(const FockMatrix& a, const FockMatrix& b,
                                        std::size_t margin) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  if (margin >= a.dim()) {
    throw Error(ErrorKind::MarginTooLarge,
                "margin " + std::to_string(margin) + " leaves no block in dimension " +
                    std::to_string(a.dim()));
  }
  const std::size_t limit = a.dim() - margin;
  for (std::size_t i = 0; i < limit; ++i) {
    for (std::size_t j = 0; j < limit; ++j) {
      if (a(i, j) != b(i, j)) return {false, BlockMismatch{i + 1, j + 1, a(i, j), b(i, j)}};
    }
  }
  return {};
}

/// Smallest margin at which the two matrices agree, or nullopt if none below dim does.
inline std::optional<std::size_t> minimal_safe_margin(const FockMatrix& a, const FockMatrix& b) {
  for (std::size_t margin = 0; margin < a.dim(); ++margin) {
    if (safe_block_equal(a, b, margin)) return margin;
  }
  return std::nullopt;
}

namespace detail {
inline std::string format_decimal_pair(std::complex<double> v) {
  auto fmt = [](double d) {
    if (d == 0.0) d = 0.0;  // drop negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return std::string(buf);
  };
  return fmt(v.real()) + "," + fmt(v.imag());
}
}  // namespace detail

/// {"dim": N, "entries": [{"row": i, "col": j, "value": ...}]}, 1-based, zeros
/// omitted. Values are canonical radical strings, or "re,im" decimals when a
/// numeric hbar is supplied.
inline nlohmann::ordered_json to_json(const FockMatrix& m, std::optional<double> hbar = std::nullopt) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const RadicalScalar& v = m(i, j);
      if (v.is_zero()) continue;
      nlohmann::ordered_json entry;
      entry["row"] = i + 1;
      entry["col"] = j + 1;
      entry["value"] = hbar ? detail::format_decimal_pair(v.evaluate(*hbar)) : v.to_string();
      entries.push_back(std::move(entry));
    }
  }
  nlohmann::ordered_json out;
  out["dim"] = m.dim();
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace moyal
