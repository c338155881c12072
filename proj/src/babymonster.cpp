#include "svoa/babymonster.hpp"

namespace svoa {

MultiPoly marginal_polynomial(const MultiPoly& P, int l) {
  if (l < 0 || l > 2) throw Error(ErrorKind::out_of_range, "sector must be 0, 1 or 2");
  const auto slot = static_cast<std::size_t>(l);
  MultiPoly out;
  for (const auto& [e, v] : P.terms()) {
    if (e[slot] == 0) continue;
    Exponent3 w = e;
    --w[slot];
    out.add_to(w, Rational(v * e[slot]));
  }
  return out;
}

BabyDecomposition baby_decomposition(int l, Index trunc) {
  BabyDecomposition d;
  d.l = l;
  d.marginal = marginal_polynomial(monster_polynomial(), l);
  d.character = evaluate_at_characters(d.marginal, trunc);
  d.character *= frac(1, 48);
  for (const auto& [i, v] : d.character.terms())
    if (!is_integer(v))
      throw Error(ErrorKind::non_integer_coefficient,
                  "sector " + std::to_string(l) + " coefficient at q^(" +
                      to_string(grid_exponent(i)) + ") is " + v.get_str());
  return d;
}

QSeries baby_character(int l, Index trunc) { return baby_decomposition(l, trunc).character; }

BabyIdentity baby_identity_check(Index trunc) {
  const QSeries sum = baby_character(0, trunc) + baby_character(1, trunc);
  // chi_1/2 has lead -1/48; 48 extra units cover the negative powers.
  const QSeries chi = standard_series(FormKind::chi_half, trunc + kGrid);
  const QSeries chi8 = standard_series(FormKind::cbrt_j, trunc + kGrid);
  const QSeries first = series_pow(chi, 47) - series_pow(chi, 23) * Rational(47);
  const QSeries second = series_pow(chi, 47) * frac(-31, 16) +
                         series_pow(chi, 31) * chi8 * frac(47, 16);
  BabyIdentity out;
  out.first_mismatch = sum.first_mismatch(first);
  if (!out.first_mismatch) out.first_mismatch = first.first_mismatch(second);
  out.holds = !out.first_mismatch && sum.trunc() >= trunc && first.trunc() >= trunc &&
              second.trunc() >= trunc;
  return out;
}

}  // namespace svoa
