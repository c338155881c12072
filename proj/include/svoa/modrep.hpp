#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "svoa/exact_arith.hpp"

namespace svoa {

/// Square matrix over Q(zeta_48), row-major.
class CycMatrix {
 public:
  CycMatrix() = default;
  explicit CycMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}

  static CycMatrix identity(int n);
  static CycMatrix diagonal(const std::vector<Cyclotomic48>& d);

  int dim() const { return n_; }
  Cyclotomic48& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const Cyclotomic48& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i * n_ + j)];
  }

  bool is_diagonal() const;
  bool is_symmetric() const;
  /// True if every row and column has exactly one nonzero entry, equal to 1.
  bool is_permutation() const;
  CycMatrix transpose() const;
  /// Gauss-Jordan inverse; throws singular_system.
  CycMatrix inverse() const;
  CycMatrix pow(long k) const;

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Cyclotomic48> e_;
};

struct CharacterRep {
  CycMatrix T;
  CycMatrix S;
};

/// T and S on the character vector of a self-dual rank-c SVOA's even part.
/// c in Z+1/2 gives the 3x3 Ising-type matrices; c in Z the 4x4 forms,
/// with S entries +-i/2 for odd c and +-1/2 for even c.
CharacterRep character_rep(const Rational& c);

struct RelationCheck {
  bool s4_identity = false;
  bool s2_equals_st3 = false;
  bool st6_identity = false;
  bool all() const { return s4_identity && s2_equals_st3 && st6_identity; }
};
RelationCheck check_relations(const CharacterRep& rep);

struct MatrixGroup {
  std::vector<CycMatrix> generators;
  std::vector<CycMatrix> elements;  // elements[0] is the identity
  std::size_t order() const { return elements.size(); }
  bool contains(const CycMatrix& m) const;
};

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Closure of the generators under multiplication (breadth first).
MatrixGroup generate_group(const std::vector<CycMatrix>& gens,
                           std::size_t cap = kDefaultClosureCap);

/// Coefficients of t^0..t^maxdeg of (1/|G|) sum_g 1/det(1 - g t).
std::vector<Rational> molien(const MatrixGroup& g, int maxdeg);

/// Structure constants N_{ij}^k of a fusion ring; object 0 is the unit.
class FusionTensor {
 public:
  explicit FusionTensor(int n = 0) : n_(n), N_(static_cast<std::size_t>(n * n * n), 0) {}
  int size() const { return n_; }
  long& operator()(int i, int j, int k) {
    return N_[static_cast<std::size_t>((i * n_ + j) * n_ + k)];
  }
  long operator()(int i, int j, int k) const {
    return N_[static_cast<std::size_t>((i * n_ + j) * n_ + k)];
  }
  bool is_commutative() const;
  bool has_unit() const;
  /// "Ising", "Z/4", "Z/2xZ/2", "Z/2", "trivial" or "other".
  std::string ring_name() const;
  std::string to_string() const;

 private:
  int n_;
  std::vector<long> N_;
};

/// N_{ij}^k = sum_n S_in S_jn (S^-1)_nk / S_0n; throws non_integral_fusion
/// unless every value is a nonnegative integer.
FusionTensor verlinde(const CycMatrix& S);

}  // namespace svoa
