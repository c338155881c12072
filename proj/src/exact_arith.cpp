#include "svoa/exact_arith.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

namespace svoa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::division_by_zero: return "division by zero";
    case ErrorKind::zero_series: return "zero series";
    case ErrorKind::off_grid: return "off-grid exponent";
    case ErrorKind::non_monic: return "non-monic leading coefficient";
    case ErrorKind::non_half_integer_rank: return "rank is not a half-integer";
    case ErrorKind::rank_not_multiple_of_8: return "rank is not a multiple of 8";
    case ErrorKind::closure_cap_exceeded: return "group closure cap exceeded";
    case ErrorKind::non_integral_fusion: return "non-integral fusion coefficient";
    case ErrorKind::singular_system: return "singular linear system";
    case ErrorKind::inconsistent_system: return "inconsistent linear system";
    case ErrorKind::published_mismatch: return "mismatch with published coefficient";
    case ErrorKind::invariance_failure: return "invariance check failed";
    case ErrorKind::not_decomposable: return "not decomposable";
    case ErrorKind::negative_multiplicity: return "negative multiplicity";
    case ErrorKind::insufficient_truncation: return "insufficient truncation";
    case ErrorKind::non_integer_coefficient: return "non-integer coefficient";
    case ErrorKind::non_rational: return "non-rational value";
    case ErrorKind::out_of_range: return "out of range";
    case ErrorKind::unknown_name: return "unknown name";
    case ErrorKind::enumeration_budget: return "enumeration budget exceeded";
    case ErrorKind::parse: return "parse error";
  }
  return "error";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw Error(ErrorKind::parse, "empty rational");
  if (s.front() == '+') s.erase(0, 1);
  // Accept "p/q", integers and finite decimals such as "23.5".
  const auto dot = s.find('.');
  Rational r;
  try {
    if (dot != std::string::npos && s.find('/') == std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const auto frac_len = s.size() - dot - 1;
      if (digits.empty() || digits == "-") throw Error(ErrorKind::parse, s);
      Integer num(digits, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      r = Rational(num, den);
    } else {
      if (r.set_str(s, 10) != 0) throw Error(ErrorKind::parse, "not a rational: " + s);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse, "not a rational: " + s);
  }
  if (r.get_den() == 0) throw Error(ErrorKind::division_by_zero, s);
  r.canonicalize();
  return r;
}

Rational frac(long num, long den) {
  if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

namespace {

std::size_t hash_mpz(const mpz_t z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 0x9e3779b97f4a7c15ULL;
  if (mpz_size(z) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0));
  if (mpz_sgn(z) < 0) h = ~h;
  return h;
}

using Coords = std::array<Rational, Cyclotomic48::kDegree>;

// Fold x^d (d >= 16) using x^16 = x^8 - 1, highest degree first.
template <std::size_t N>
Coords reduce(std::array<Rational, N>& wide) {
  for (std::size_t d = N - 1; d >= 16; --d) {
    if (sgn(wide[d]) == 0) continue;
    wide[d - 8] += wide[d];
    wide[d - 16] -= wide[d];
    wide[d] = 0;
  }
  Coords out;
  for (std::size_t i = 0; i < 16; ++i) out[i] = std::move(wide[i]);
  return out;
}

// Dense univariate polynomials over Q, used for the extended Euclid inverse.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    Rational f = r.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    trim(r);
  }
}

UPoly sub_mul(const UPoly& a, const UPoly& q, const UPoly& b) {
  // a - q*b
  UPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

std::size_t hash_value(const Rational& r) {
  return hash_mpz(r.get_num_mpz_t()) * 31 + hash_mpz(r.get_den_mpz_t());
}

Cyclotomic48 Cyclotomic48::zeta_pow(long k) {
  long m = k % kOrder;
  if (m < 0) m += kOrder;
  std::array<Rational, kOrder> wide{};
  wide[static_cast<std::size_t>(m)] = 1;
  Cyclotomic48 out;
  out.coords_ = reduce(wide);
  return out;
}

Cyclotomic48 Cyclotomic48::sqrt2() { return zeta_pow(6) + zeta_pow(-6); }

bool Cyclotomic48::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic48::is_rational() const {
  for (int i = 1; i < kDegree; ++i)
    if (sgn(coords_[static_cast<std::size_t>(i)]) != 0) return false;
  return true;
}

const Rational& Cyclotomic48::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::non_rational, to_string());
  return coords_[0];
}

Cyclotomic48& Cyclotomic48::operator+=(const Cyclotomic48& o) {
  for (std::size_t i = 0; i < kDegree; ++i)
    if (sgn(o.coords_[i]) != 0) coords_[i] += o.coords_[i];
  return *this;
}

Cyclotomic48& Cyclotomic48::operator-=(const Cyclotomic48& o) {
  for (std::size_t i = 0; i < kDegree; ++i)
    if (sgn(o.coords_[i]) != 0) coords_[i] -= o.coords_[i];
  return *this;
}

Cyclotomic48& Cyclotomic48::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    for (auto& c : coords_) c = 0;
    return *this;
  }
  for (auto& c : coords_)
    if (sgn(c) != 0) c *= r;
  return *this;
}

Cyclotomic48& Cyclotomic48::operator*=(const Cyclotomic48& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic48 operator*(const Cyclotomic48& a, const Cyclotomic48& b) {
  // Most field elements met in practice are sparse (sqrt2, i, roots of unity).
  std::array<int, Cyclotomic48::kDegree> ia{}, ib{};
  int na = 0, nb = 0;
  for (int i = 0; i < Cyclotomic48::kDegree; ++i) {
    if (sgn(a.coords_[static_cast<std::size_t>(i)]) != 0) ia[static_cast<std::size_t>(na++)] = i;
    if (sgn(b.coords_[static_cast<std::size_t>(i)]) != 0) ib[static_cast<std::size_t>(nb++)] = i;
  }
  Cyclotomic48 out;
  if (na == 0 || nb == 0) return out;
  if (na == 1 && ia[0] == 0) {
    out = b;
    out *= a.coords_[0];
    return out;
  }
  if (nb == 1 && ib[0] == 0) {
    out = a;
    out *= b.coords_[0];
    return out;
  }
  std::array<Rational, 2 * Cyclotomic48::kDegree - 1> wide{};
  for (int x = 0; x < na; ++x) {
    const auto i = static_cast<std::size_t>(ia[static_cast<std::size_t>(x)]);
    for (int y = 0; y < nb; ++y) {
      const auto j = static_cast<std::size_t>(ib[static_cast<std::size_t>(y)]);
      wide[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  out.coords_ = reduce(wide);
  return out;
}

Cyclotomic48 Cyclotomic48::operator-() const {
  Cyclotomic48 out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Cyclotomic48 Cyclotomic48::inverse() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero cyclotomic");
  if (is_rational()) return Cyclotomic48(Rational(1 / coords_[0]));
  // Extended Euclid: find s with s*x + t*Phi = g (constant), so x^-1 = s/g.
  UPoly phi(17, Rational(0));
  phi[0] = 1;
  phi[8] = -1;
  phi[16] = 1;
  UPoly x(coords_.begin(), coords_.end());
  trim(x);
  UPoly r0 = phi, r1 = x;
  UPoly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    UPoly q, r;
    divmod(r0, r1, q, r);
    UPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because Phi_48 is irreducible.
  const Rational g = r1.at(0);
  std::array<Rational, 2 * kDegree> wide{};
  for (std::size_t i = 0; i < s1.size(); ++i) wide[i] = s1[i] / g;
  Cyclotomic48 out;
  out.coords_ = reduce(wide);
  return out;
}

Cyclotomic48 Cyclotomic48::conj() const {
  Cyclotomic48 out;
  for (int i = 0; i < kDegree; ++i) {
    const auto& c = coords_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Cyclotomic48 z = zeta_pow(-i);
    z *= c;
    out += z;
  }
  return out;
}

std::size_t Cyclotomic48::hash() const {
  std::size_t h = 0;
  for (const auto& c : coords_) h = h * 1000003 ^ hash_value(c);
  return h;
}

std::string Cyclotomic48::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kDegree; ++i) {
    const auto& c = coords_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z^" << i;
    }
  }
  return os.str();
}

std::complex<double> Cyclotomic48::numeric() const {
  std::complex<double> out{0.0, 0.0};
  for (int i = 0; i < kDegree; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / kOrder;
    out += coords_[static_cast<std::size_t>(i)].get_d() * std::polar(1.0, angle);
  }
  return out;
}

Cyclotomic48 zeta_pow(long k) { return Cyclotomic48::zeta_pow(k); }
Cyclotomic48 cyc_mul(const Cyclotomic48& x, const Cyclotomic48& y) { return x * y; }
Cyclotomic48 cyc_inv(const Cyclotomic48& x) { return x.inverse(); }

int root_of_unity_order(const Cyclotomic48& x) {
  for (int k = 0; k < Cyclotomic48::kOrder; ++k) {
    if (zeta_pow(k) == x) return Cyclotomic48::kOrder / std::gcd(k, Cyclotomic48::kOrder);
  }
  return 0;
}

}  // namespace svoa
