#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "svoa/exact_arith.hpp"

namespace svoa {

/// Exponent index on the 1/48 grid: index n stands for q^(n/48).
using Index = std::int64_t;
inline constexpr Index kGrid = 48;
/// Default truncation: q^10.
inline constexpr Index kDefaultTrunc = 480;

/// Truncated Laurent series in q^(1/48).
///
/// The series is exact for every exponent index below trunc(); nothing is
/// known at or above it. Only nonzero coefficients are stored. Arithmetic
/// propagates truncation the way exact power-series arithmetic does:
/// a sum is known up to the smaller bound, a product a*b up to
/// min(a.trunc + b.lead, b.trunc + a.lead).
template <class Coeff>
class Series {
 public:
  using Terms = std::map<Index, Coeff>;

  explicit Series(Index trunc = 0) : trunc_(trunc) {}

  static Series monomial(Index index, const Coeff& c, Index trunc) {
    Series s(trunc);
    s.set(index, c);
    return s;
  }
  static Series one(Index trunc) { return monomial(0, Coeff(1), trunc); }

  Index trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Index> lead() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  /// Leading index, or trunc() for the zero series (which is O(q^trunc)).
  Index order() const { return terms_.empty() ? trunc_ : terms_.begin()->first; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(Index index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  /// Coefficient at q^(index/48); throws if the index is not below trunc.
  Coeff at(Index index) const {
    if (index >= trunc_)
      throw Error(ErrorKind::insufficient_truncation,
                  "index " + std::to_string(index) + " >= trunc " + std::to_string(trunc_));
    return coeff(index);
  }
  const Coeff& leading_coeff() const {
    if (terms_.empty()) throw Error(ErrorKind::zero_series, "leading coefficient of zero");
    return terms_.begin()->second;
  }

  void set(Index index, Coeff c) {
    if (index >= trunc_) return;
    if (is_zero_coeff(c)) {
      terms_.erase(index);
    } else {
      terms_[index] = std::move(c);
    }
  }
  void add_to(Index index, const Coeff& c) {
    if (index >= trunc_ || is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Series truncated(Index t) const {
    Series out(std::min(t, trunc_));
    for (const auto& [k, v] : terms_) {
      if (k >= out.trunc_) break;
      out.terms_.emplace(k, v);
    }
    return out;
  }
  /// Multiply by q^(by/48).
  Series shifted(Index by) const {
    Series out(trunc_ + by);
    for (const auto& [k, v] : terms_) out.terms_.emplace(k + by, v);
    return out;
  }
  /// Substitute q -> q^factor (factor > 0); indices and trunc scale.
  Series rescaled(Index factor) const {
    Series out(trunc_ * factor);
    for (const auto& [k, v] : terms_) out.terms_.emplace(k * factor, v);
    return out;
  }

  Series& operator+=(const Series& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    terms_.erase(terms_.lower_bound(trunc_), terms_.end());
    for (const auto& [k, v] : o.terms_) {
      if (k >= trunc_) break;
      add_to(k, v);
    }
    return *this;
  }
  Series& operator-=(const Series& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    terms_.erase(terms_.lower_bound(trunc_), terms_.end());
    for (const auto& [k, v] : o.terms_) {
      if (k >= trunc_) break;
      add_to(k, -v);
    }
    return *this;
  }
  Series& operator*=(const Coeff& c) {
    if (is_zero_coeff(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Coeff& c) { return a *= c; }
  friend Series operator*(const Coeff& c, Series a) { return a *= c; }
  Series operator-() const {
    Series out = *this;
    for (auto& [k, v] : out.terms_) v = -v;
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.trunc_ + b.order(), b.trunc_ + a.order()));
    for (const auto& [ka, va] : a.terms_) {
      if (ka + b.order() >= out.trunc_) break;
      for (const auto& [kb, vb] : b.terms_) {
        const Index k = ka + kb;
        if (k >= out.trunc_) break;
        out.add_to(k, va * vb);
      }
    }
    return out;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// Equality of the known parts: compares coefficients below the smaller
  /// truncation.
  bool agrees_with(const Series& o) const { return first_mismatch(o) == std::nullopt; }
  std::optional<Index> first_mismatch(const Series& o) const {
    const Index t = std::min(trunc_, o.trunc_);
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    while (true) {
      const bool a_end = it == terms_.end() || it->first >= t;
      const bool b_end = jt == o.terms_.end() || jt->first >= t;
      if (a_end && b_end) return std::nullopt;
      if (a_end) return jt->first;
      if (b_end) return it->first;
      if (it->first != jt->first) return std::min(it->first, jt->first);
      if (!(it->second == jt->second)) return it->first;
      ++it;
      ++jt;
    }
  }
  friend bool operator==(const Series& a, const Series& b) {
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  static bool is_zero_coeff(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, Cyclotomic48>) {
      return c.is_zero();
    } else {
      return sgn(c) == 0;
    }
  }

 private:
  Index trunc_;
  Terms terms_;
};

using QSeries = Series<Rational>;
using CycSeries = Series<Cyclotomic48>;

// Ring operations beyond +, -, *.

/// Multiplicative inverse; the result has leading index -lead(a).
QSeries series_inv(const QSeries& a);
CycSeries series_inv(const CycSeries& a);
QSeries series_mul(const QSeries& a, const QSeries& b);
/// a^r for rational r. Writes a = c q^e u with u(0) = 1 and uses the
/// exp(r log u) power recurrence. Needs c = 1 unless r is an integer, and
/// r*e on the grid.
QSeries series_pow_rational(const QSeries& a, const Rational& r);
QSeries series_pow(const QSeries& a, long n);
/// Formal d/dq: q^e -> e q^(e-1), an index shift of -48.
QSeries series_derivative(const QSeries& a);
/// Coefficient-wise phase exp(2 pi i e) on q^e, i.e. f|T.
CycSeries t_twist(const QSeries& a);
CycSeries to_cyclotomic(const QSeries& a);
/// Throws non_rational if some coefficient is not rational.
QSeries to_rational(const CycSeries& a);
/// Running lcm of coefficient denominators, one entry per grid index from
/// lead() to trunc() - 1.
std::vector<Integer> denominator_profile(const QSeries& a);
/// Split a series of the form q^(-c/24) * (power series in q^(1/2)) into
/// the parts with integral and half-odd offsets, using the T-twist.
std::pair<QSeries, QSeries> parity_split(const QSeries& chi, const Rational& c);

// Standard q-expansions.

enum class FormKind {
  eta,
  theta_Z,
  theta_Z_half,
  E4,
  delta,
  j,
  cbrt_j,
  j_theta,
  chi_half,
  chi_half_minus,
  chi_ising_0,
  chi_ising_half,
  chi_ising_16,
  cusp1_chi_half,
  vacuum,
  generic_module,
};

struct StandardForm {
  FormKind kind;
  Rational c = 0;  // rank for vacuum / generic_module
  Rational h = 0;  // conformal weight for generic_module
};

/// Parses the catalog name of a standard form ("j", "chi_ising_16", ...).
FormKind parse_form_kind(std::string_view name);
std::string_view form_name(FormKind kind);
const std::vector<FormKind>& all_form_kinds();

/// Exact expansion of a standard series for all indices < trunc.
QSeries standard_series(const StandardForm& form, Index trunc);
inline QSeries standard_series(FormKind kind, Index trunc) {
  return standard_series(StandardForm{kind}, trunc);
}

/// prod_{n>=0} (1 + sign * q^((offset + n*step)/48)) to relative precision
/// `precision` (indices < precision); offset > 0.
QSeries euler_product(Index offset, Index step, int sign, Index precision);

/// Index of q^e on the grid; throws off_grid if 48 e is not an integer.
Index grid_index(const Rational& exponent);
Rational grid_exponent(Index index);

// Text and JSON forms.

/// "q^-1 + 744 + 196884 q + ..." in increasing exponent order.
std::string to_text(const QSeries& s);
/// "q^(-47/48) (1 + 4371 q^(3/2) + ...)": factor out the leading exponent.
std::string to_text_normalized(const QSeries& s, const Rational& factor_exponent);
/// {"grid": 48, "trunc": n, "terms": [[index, "num/den"], ...]}
std::string to_json(const QSeries& s);
QSeries qseries_from_json(const std::string& text);

}  // namespace svoa
