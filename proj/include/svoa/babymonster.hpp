#pragma once

#include <optional>

#include "svoa/invariants.hpp"
#include "svoa/qseries.hpp"

namespace svoa {

/// Sector l = 0, 1, 2 of the baby monster SVOA: the Ising module of weight
/// 0, 1/2 or 1/16 sitting at the removed tensor position.
struct BabyDecomposition {
  int l = 0;
  MultiPoly marginal;  // degree 47, coefficients w_{i,j,k}
  QSeries character;
};

/// w_{i,j,k} = (i+1) m_{i+1,j,k}, (j+1) m_{i,j+1,k} or (k+1) m_{i,j,k+1}.
MultiPoly marginal_polynomial(const MultiPoly& P, int l);

/// (1/48) times the marginal evaluated at the Ising characters.
BabyDecomposition baby_decomposition(int l, Index trunc = kDefaultTrunc);
QSeries baby_character(int l, Index trunc = kDefaultTrunc);

struct BabyIdentity {
  bool holds = false;
  std::optional<Index> first_mismatch;  // grid index of the first difference
};

/// chi_VB(0) + chi_VB(1) = chi^47 - 47 chi^23 = -(31/16) chi^47 + (47/16) chi^31 chi_8
/// with chi = chi_1/2, compared below trunc.
BabyIdentity baby_identity_check(Index trunc = kDefaultTrunc);

}  // namespace svoa
