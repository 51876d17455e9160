#pragma once

// Truncated formal power series over Q(i) and the operator-ordering schemes
// they encode. An ordering is fixed by f(y) with f(0) = 1; its twist series is
// alpha(y) = f(y) exp(iy/2), and the quantization coefficients g(m,n,s) follow
// from either series.

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "moyal/scalar.hpp"

namespace moyal {

/// Coefficients c_0 .. c_order of a power series in one variable y; every term
/// of degree above `order` is unknown and dropped.
class FormalSeries {
 public:
  explicit FormalSeries(std::size_t order = 0) : coeffs_(order + 1) {}
  explicit FormalSeries(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
  }

  static FormalSeries one(std::size_t order) {
    FormalSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  /// exp(c y) truncated: coefficients c^k / k!.
  static FormalSeries exponential(const GaussianRational& c, std::size_t order) {
    FormalSeries s(order);
    GaussianRational term(1);
    for (std::size_t k = 0; k <= order; ++k) {
      s.coeffs_[k] = term;
      term = term * c / GaussianRational(static_cast<long long>(k + 1));
    }
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }
  const GaussianRational& operator[](std::size_t k) const { return coeffs_.at(k); }
  GaussianRational& operator[](std::size_t k) { return coeffs_.at(k); }

  /// Same series at another order; new high coefficients are zero.
  FormalSeries resized(std::size_t order) const {
    FormalSeries s(order);
    std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), order + 1), s.coeffs_.begin());
    return s;
  }

  bool is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const GaussianRational& c) { return c.is_real(); });
  }

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<GaussianRational> coeffs_;
};

/// Cauchy product truncated at the common order.
inline FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch, "series orders " + std::to_string(a.order()) + " and " +
                                              std::to_string(b.order()) + " differ");
  }
  FormalSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    GaussianRational sum;
    for (std::size_t k = 0; k <= n; ++k) sum += a[k] * b[n - k];
    r[n] = sum;
  }
  return r;
}

inline FormalSeries series_reciprocal(const FormalSeries& a) {
  if (a[0].is_zero()) throw Error(ErrorKind::NonUnitConstantTerm, "constant term is zero");
  FormalSeries b(a.order());
  const GaussianRational inv0 = GaussianRational(1) / a[0];
  b[0] = inv0;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    GaussianRational sum;
    for (std::size_t k = 1; k <= n; ++k) sum += a[k] * b[n - k];
    b[n] = -inv0 * sum;
  }
  return b;
}

enum class Preset { weyl, standard, antistandard, symmetric, born_jordan };

inline constexpr Preset kAllPresets[] = {Preset::weyl, Preset::standard, Preset::antistandard,
                                         Preset::symmetric, Preset::born_jordan};

constexpr std::string_view preset_name(Preset p) {
  switch (p) {
    case Preset::weyl: return "weyl";
    case Preset::standard: return "standard";
    case Preset::antistandard: return "antistandard";
    case Preset::symmetric: return "symmetric";
    case Preset::born_jordan: return "born_jordan";
  }
  return "";
}

inline std::optional<Preset> find_preset(std::string_view name) {
  for (Preset p : kAllPresets) {
    if (preset_name(p) == name) return p;
  }
  return std::nullopt;
}

inline Preset parse_preset(std::string_view name) {
  if (auto p = find_preset(name)) return *p;
  throw Error(ErrorKind::UnknownPreset, "no ordering preset named '" + std::string(name) + "'");
}

/// f(y) of a preset ordering:
///   weyl          exp(-iy/2)
///   standard      exp(-iy)
///   antistandard  1
///   symmetric     (1 + exp(-iy)) / 2
///   born_jordan   (1 - exp(-iy)) / (iy)
inline FormalSeries preset_f(Preset preset, std::size_t order) {
  const GaussianRational minus_i = -GaussianRational::i();
  switch (preset) {
    case Preset::weyl: return FormalSeries::exponential(minus_i / GaussianRational(2), order);
    case Preset::standard: return FormalSeries::exponential(minus_i, order);
    case Preset::antistandard: return FormalSeries::one(order);
    case Preset::symmetric: {
      FormalSeries s = FormalSeries::exponential(minus_i, order);
      for (std::size_t k = 1; k <= order; ++k) s[k] = s[k] / GaussianRational(2);
      return s;
    }
    case Preset::born_jordan: {
      FormalSeries s(order);
      for (std::size_t k = 0; k <= order; ++k) {
        s[k] = pow(minus_i, static_cast<unsigned>(k)) /
               GaussianRational(Rational(factorial(static_cast<unsigned>(k + 1))));
      }
      return s;
    }
  }
  throw Error(ErrorKind::UnknownPreset, "unhandled preset");
}

inline FormalSeries preset_f(std::string_view name, std::size_t order) {
  return preset_f(parse_preset(name), order);
}

/// An operator-ordering scheme at a fixed truncation order, carrying f, the
/// twist alpha = f exp(iy/2) and its reciprocal.
class Ordering {
 public:
  static Ordering preset(Preset p, std::size_t order) {
    return Ordering(std::string(preset_name(p)), p, {}, order);
  }

  /// Ordering from explicit f coefficients f_0 = 1, f_1, ...; coefficients
  /// beyond the given list are zero.
  static Ordering custom(std::vector<GaussianRational> f_coeffs, std::size_t order,
                         std::string name = "custom") {
    if (f_coeffs.empty() || f_coeffs.front() != GaussianRational(1)) {
      throw Error(ErrorKind::InvalidOrdering, "custom f must start with f_0 = 1");
    }
    return Ordering(std::move(name), std::nullopt, std::move(f_coeffs), order);
  }

  /// The same scheme truncated at another order.
  Ordering with_order(std::size_t order) const {
    return Ordering(name_, preset_, custom_, order);
  }

  const std::string& name() const noexcept { return name_; }
  std::optional<Preset> preset_kind() const noexcept { return preset_; }
  const std::vector<GaussianRational>& custom_coefficients() const noexcept { return custom_; }
  std::size_t order() const noexcept { return f_.order(); }
  const FormalSeries& f() const noexcept { return f_; }
  const FormalSeries& alpha() const noexcept { return alpha_; }
  const FormalSeries& alpha_inv() const noexcept { return alpha_inv_; }

 private:
  Ordering(std::string name, std::optional<Preset> preset, std::vector<GaussianRational> custom,
           std::size_t order)
      : name_(std::move(name)),
        preset_(preset),
        custom_(std::move(custom)),
        f_(preset_ ? preset_f(*preset_, order) : FormalSeries(custom_).resized(order)),
        alpha_(series_mul(f_, FormalSeries::exponential(GaussianRational::i() / GaussianRational(2),
                                                        order))),
        alpha_inv_(series_reciprocal(alpha_)) {}

  std::string name_;
  std::optional<Preset> preset_;
  std::vector<GaussianRational> custom_;
  FormalSeries f_;
  FormalSeries alpha_;
  FormalSeries alpha_inv_;
};

namespace detail {
inline void check_g_indices(std::size_t order, unsigned m, unsigned n, unsigned s) {
  if (s > std::min(m, n)) {
    throw Error(ErrorKind::IndexOutOfRange,
                "s = " + std::to_string(s) + " exceeds min(m, n) = " + std::to_string(std::min(m, n)));
  }
  if (s > order) {
    throw Error(ErrorKind::IndexOutOfRange,
                "s = " + std::to_string(s) + " exceeds series order " + std::to_string(order));
  }
}
}  // namespace detail

/// g(m,n,s) = (-1)^s m! n! / (s! (m-s)! (n-s)!) * f^(s)(0), with f^(s)(0) = s! f_s.
inline GaussianRational g_from_f(const FormalSeries& f, unsigned m, unsigned n, unsigned s) {
  detail::check_g_indices(f.order(), m, n, s);
  Rational scale(falling_factorial(m, s) * falling_factorial(n, s));
  if (s % 2 == 1) scale = -scale;
  return f[s] * GaussianRational(scale);
}

/// g(m,n,s) = (i/2)^s m! n! / ((m-s)! (n-s)!) * sum_k (2i)^k / (s-k)! alpha_k.
inline GaussianRational g_from_alpha(const FormalSeries& alpha, unsigned m, unsigned n,
                                     unsigned s) {
  detail::check_g_indices(alpha.order(), m, n, s);
  const GaussianRational two_i(Rational(0), Rational(2));
  GaussianRational sum;
  for (unsigned k = 0; k <= s; ++k) {
    sum += pow(two_i, k) * alpha[k] / GaussianRational(Rational(factorial(s - k)));
  }
  const GaussianRational half_i(Rational(0), Rational(1, 2));
  return pow(half_i, s) *
         GaussianRational(Rational(falling_factorial(m, s) * falling_factorial(n, s))) * sum;
}

namespace detail {
inline Rational parse_rational_field(std::string_view text, std::size_t line) {
  auto fail = [&] {
    return Error(ErrorKind::InvalidOrdering,
                 "line " + std::to_string(line) + ": bad rational '" + std::string(text) + "'");
  };
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  const auto slash = text.find('/');
  const std::string_view num = trim(text.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? "1" : trim(text.substr(slash + 1));
  auto valid_int = [](std::string_view v, bool allow_sign) {
    if (allow_sign && !v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
    return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!valid_int(num, true) || !valid_int(den, false)) throw fail();
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw fail();
  return Rational(n) / Rational(d);
}
}  // namespace detail

/// Reads f coefficients, one per line as "re_num/re_den,im_num/im_den".
/// Blank lines are skipped; the first coefficient must be exactly 1.
inline std::vector<GaussianRational> parse_custom_f(std::istream& in) {
  std::vector<GaussianRational> coeffs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::InvalidOrdering,
                  "line " + std::to_string(line_no) + ": expected 're,im'");
    }
    const std::string_view view(line);
    coeffs.emplace_back(detail::parse_rational_field(view.substr(0, comma), line_no),
                        detail::parse_rational_field(view.substr(comma + 1), line_no));
  }
  if (coeffs.empty()) throw Error(ErrorKind::InvalidOrdering, "no coefficients");
  if (coeffs.front() != GaussianRational(1)) {
    throw Error(ErrorKind::InvalidOrdering, "first coefficient must be 1");
  }
  return coeffs;
}

inline std::vector<GaussianRational> load_custom_f(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidOrdering, "cannot open '" + path + "'");
  return parse_custom_f(in);
}

/// Resolves a preset name, or otherwise treats `spec` as a custom-f file path.
inline Ordering resolve_ordering(const std::string& spec, std::size_t order) {
  if (auto p = find_preset(spec)) return Ordering::preset(*p, order);
  std::ifstream probe(spec);
  if (!probe) throw Error(ErrorKind::UnknownPreset, "'" + spec + "' is neither a preset nor a readable file");
  return Ordering::custom(parse_custom_f(probe), order, "custom");
}

}  // namespace moyal
