#pragma once

#include <array>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "svoa/exact_arith.hpp"
#include "svoa/modrep.hpp"
#include "svoa/qseries.hpp"

namespace svoa {

using Exponent3 = std::array<int, 3>;

/// Sparse polynomial in a, b, c; zero coefficients are never stored.
template <class Coeff>
class Poly3 {
 public:
  using Terms = std::map<Exponent3, Coeff>;

  Poly3() = default;
  static Poly3 monomial(int i, int j, int k, const Coeff& v) {
    Poly3 p;
    p.add_to({i, j, k}, v);
    return p;
  }
  static Poly3 variable(int which) {
    Exponent3 e{0, 0, 0};
    e[static_cast<std::size_t>(which)] = 1;
    Poly3 p;
    p.add_to(e, Coeff(1));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coeff(int i, int j, int k) const {
    auto it = terms_.find({i, j, k});
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  /// Total degree if homogeneous, -1 otherwise (or for zero).
  int homogeneous_degree() const {
    int d = -1;
    for (const auto& [e, v] : terms_) {
      const int t = e[0] + e[1] + e[2];
      if (d >= 0 && t != d) return -1;
      d = t;
    }
    return d;
  }

  void add_to(const Exponent3& e, const Coeff& v) {
    if (is_zero_coeff(v)) return;
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Poly3& operator+=(const Poly3& o) {
    for (const auto& [e, v] : o.terms_) add_to(e, v);
    return *this;
  }
  Poly3& operator-=(const Poly3& o) {
    for (const auto& [e, v] : o.terms_) add_to(e, Coeff(-v));
    return *this;
  }
  Poly3& operator*=(const Coeff& s) {
    if (is_zero_coeff(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= s;
    return *this;
  }
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(Poly3 a, const Coeff& s) { return a *= s; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 out;
    for (const auto& [ea, va] : a.terms_)
      for (const auto& [eb, vb] : b.terms_)
        out.add_to({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, Coeff(va * vb));
    return out;
  }
  friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly3& a, const Poly3& b) { return !(a == b); }

  Poly3 pow(int n) const {
    Poly3 out = monomial(0, 0, 0, Coeff(1));
    Poly3 base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) out = out * base;
      if (n > 1) base = base * base;
    }
    return out;
  }
  /// Exchange a and b.
  Poly3 swapped_ab() const {
    Poly3 out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(Exponent3{e[1], e[0], e[2]}, v);
    return out;
  }

  static bool is_zero_coeff(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, Cyclotomic48>) {
      return c.is_zero();
    } else {
      return sgn(c) == 0;
    }
  }

 private:
  Terms terms_;
};

using MultiPoly = Poly3<Rational>;
using CycPoly = Poly3<Cyclotomic48>;

CycPoly to_cyclotomic(const MultiPoly& p);

/// Substitute (a, b, c) -> g (a, b, c): variable x_i becomes sum_j g_ij x_j.
CycPoly poly_act(const CycMatrix& g, const MultiPoly& p);

struct BasisInvariants {
  MultiPoly p1, p2, p3, p4;
};
/// The four generators of the degree-48 invariants used for the moonshine
/// enumerator (p4 expanded from its cube form).
const BasisInvariants& basis_invariants();
/// p1^16, p1^8 p2, p1^8 p3, p2^2, p2 p3, p3^2, p4.
const std::vector<MultiPoly>& degree48_basis();

/// Both generators S and T of character_rep(1/2) fix p. Throws
/// invariance_failure naming the first offending generator when `raise`.
bool is_invariant(const MultiPoly& p, bool raise = false);

struct Constraint {
  Exponent3 e;
  Rational value;
};
using ConstraintSet = std::vector<Constraint>;

/// The seven counts that determine P (vacuum, weight-1 and selected
/// weight-2 highest-weight multiplicities, and the c^48 coefficient).
ConstraintSet default_constraints();
/// Constraint files: one "i j k value" per line, '#' comments.
ConstraintSet parse_constraints(const std::string& text);

/// Published coefficients of the enumerator, one entry per monomial.
const std::vector<std::pair<Exponent3, Integer>>& published_monster_coefficients();

struct MonsterSolution {
  MultiPoly P;
  std::vector<Rational> lambda;  // coordinates in degree48_basis()
};

/// Solves the linear system imposed by cs on the degree-48 basis. With
/// `check_published` every printed coefficient is re-checked (throws
/// published_mismatch on the first difference).
MonsterSolution solve_monster_polynomial(const ConstraintSet& cs, bool check_published = true);
/// Cached solve with the default constraints.
const MultiPoly& monster_polynomial();

/// Substitute a, b, c -> the three Ising characters; exact below trunc.
QSeries evaluate_at_characters(const MultiPoly& p, Index trunc);

/// [[i, j, k, "coeff"], ...] in lexicographic order of (i, j, k).
std::string poly_to_json(const MultiPoly& p);
std::string poly_to_text(const MultiPoly& p);

}  // namespace svoa
