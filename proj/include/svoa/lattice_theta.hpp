#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "svoa/exact_arith.hpp"
#include "svoa/qseries.hpp"

namespace svoa {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// A base lattice (by its Gram matrix) together with coset representatives
/// in basis coordinates. The zero vector is always glue[0].
struct Lattice {
  std::string name;
  int dim = 0;
  RationalMatrix gram;
  std::vector<RationalVector> glue;
  bool formula_backed = false;  // theta from a closed form, not enumerated

  Rational inner(const RationalVector& x, const RationalVector& y) const;
  Rational norm(const RationalVector& x) const { return inner(x, x); }
  Rational determinant() const;
  /// Glue norms and products with the base are integral, and
  /// |glue|^2 det(gram) = 1.
  bool is_self_dual() const;
};

/// Zn(n), Dn(n), Dn_plus(n), E8, E7, E7E7_plus, A15_plus, D12_plus, Leech.
/// "Z3", "D12" and "D12_plus" style short names are accepted too.
Lattice lattice_catalog(std::string_view name);
const std::vector<std::string>& lattice_catalog_names();

/// Theta series through norm 10, i.e. q^5.
inline constexpr Index kDefaultThetaTrunc = 241;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 200'000'000;

/// Sum over all cosets of q^(<x,x>/2), exact for indices < trunc. The
/// budget bounds the number of search nodes.
QSeries theta_series(const Lattice& L, Index trunc = kDefaultThetaTrunc,
                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Theta_L / eta^n, exact for indices < trunc.
QSeries svoa_character(const Lattice& L, Index trunc = kDefaultTrunc);

std::string lattice_to_json(const Lattice& L);

}  // namespace svoa
