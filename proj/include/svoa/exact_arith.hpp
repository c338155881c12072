#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "svoa/error.hpp"

namespace svoa {

// GMP keeps mpq_class canonical (reduced, positive denominator, 0 == 0/1)
// after every arithmetic operation; parse_rational canonicalizes input.
using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
// num/den in canonical form.
Rational frac(long num, long den);
std::string to_string(const Rational& r);
bool is_integer(const Rational& r);
// Exact floor of a rational.
Integer floor(const Rational& r);
std::size_t hash_value(const Rational& r);

/// Element of the cyclotomic field Q(zeta), zeta = exp(2 pi i / 48).
///
/// Stored as coordinates in the power basis 1, zeta, ..., zeta^15, reduced
/// modulo Phi_48(x) = x^16 - x^8 + 1. The reduced form is canonical, so
/// equality and hashing are coordinate-wise.
class Cyclotomic48 {
 public:
  static constexpr int kOrder = 48;
  static constexpr int kDegree = 16;

  Cyclotomic48() = default;
  Cyclotomic48(const Rational& r) { coords_[0] = r; }  // NOLINT: implicit embedding
  Cyclotomic48(long r) { coords_[0] = r; }              // NOLINT

  /// zeta^k for any integer k (reduced mod 48).
  static Cyclotomic48 zeta_pow(long k);
  /// sqrt(2) = zeta^6 + zeta^-6.
  static Cyclotomic48 sqrt2();
  /// i = zeta^12.
  static Cyclotomic48 imag_unit() { return zeta_pow(12); }

  const Rational& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::array<Rational, kDegree>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Coefficient of 1; throws non_rational unless is_rational().
  const Rational& to_rational() const;

  Cyclotomic48 inverse() const;
  Cyclotomic48 conj() const;

  Cyclotomic48& operator+=(const Cyclotomic48& o);
  Cyclotomic48& operator-=(const Cyclotomic48& o);
  Cyclotomic48& operator*=(const Cyclotomic48& o);
  Cyclotomic48& operator*=(const Rational& r);

  friend Cyclotomic48 operator+(Cyclotomic48 a, const Cyclotomic48& b) { return a += b; }
  friend Cyclotomic48 operator-(Cyclotomic48 a, const Cyclotomic48& b) { return a -= b; }
  friend Cyclotomic48 operator*(const Cyclotomic48& a, const Cyclotomic48& b);
  friend Cyclotomic48 operator/(const Cyclotomic48& a, const Cyclotomic48& b) {
    return a * b.inverse();
  }
  Cyclotomic48 operator-() const;

  friend bool operator==(const Cyclotomic48& a, const Cyclotomic48& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const Cyclotomic48& a, const Cyclotomic48& b) { return !(a == b); }

  std::size_t hash() const;
  std::string to_string() const;
  // Numeric embedding zeta -> exp(2 pi i/48); debug printing only.
  std::complex<double> numeric() const;

 private:
  std::array<Rational, kDegree> coords_{};
};

Cyclotomic48 zeta_pow(long k);
Cyclotomic48 cyc_mul(const Cyclotomic48& x, const Cyclotomic48& y);
Cyclotomic48 cyc_inv(const Cyclotomic48& x);
/// Multiplicative order of a root of unity; 0 if x is not one of zeta^k.
int root_of_unity_order(const Cyclotomic48& x);

}  // namespace svoa

template <>
struct std::hash<svoa::Cyclotomic48> {
  std::size_t operator()(const svoa::Cyclotomic48& x) const noexcept { return x.hash(); }
};
