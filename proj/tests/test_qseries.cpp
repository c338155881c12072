#include "doctest.h"

#include "svoa/qseries.hpp"

using namespace svoa;

namespace {

QSeries poly(std::initializer_list<std::pair<Index, long>> terms, Index trunc) {
  QSeries s(trunc);
  for (const auto& [i, v] : terms) s.set(i, Rational(v));
  return s;
}

// Coefficient of q^(lead + rel) where rel is an exponent relative to the lead.
Rational rel(const QSeries& s, const Rational& e) { return s.at(*s.lead() + grid_index(e)); }

}  // namespace

TEST_CASE("truncated products") {
  QSeries a = poly({{0, 1}, {48, 1}}, 480);
  QSeries b = poly({{0, 1}, {48, -1}}, 480);
  QSeries p = a * b;
  CHECK(p.agrees_with(poly({{0, 1}, {96, -1}}, 480)));
  CHECK(p.trunc() == 480);
  QSeries shifted = a.shifted(48);
  CHECK((shifted * b).trunc() == 480 + 48);

  QSeries eta = standard_series(FormKind::eta, 480);
  QSeries d = series_mul(eta, series_pow(eta, 23));
  CHECK(d.agrees_with(standard_series(FormKind::delta, 480)));

  QSeries e4 = standard_series(FormKind::E4, 480);
  QSeries j = series_pow(e4, 3) * series_inv(standard_series(FormKind::delta, 528));
  CHECK(j.at(0) == 744);
  CHECK(j.at(48) == 196884);
  CHECK(j.agrees_with(standard_series(FormKind::j, 480)));
}

TEST_CASE("inverse") {
  QSeries one_minus_q = poly({{0, 1}, {48, -1}}, 480);
  QSeries g = series_inv(one_minus_q);
  for (Index n = 0; n < 480; n += 48) CHECK(g.at(n) == 1);
  CHECK(g.size() == 10);

  QSeries phi = series_inv(standard_series(FormKind::j, 480));
  CHECK(*phi.lead() == 48);
  CHECK(phi.at(48) == 1);
  CHECK(phi.at(96) == -744);

  CHECK_THROWS_AS(series_inv(QSeries(480)), Error);
}

TEST_CASE("rational powers") {
  QSeries a = poly({{0, 1}, {48, 1}}, 480);
  CHECK(series_pow(a, 2).agrees_with(poly({{0, 1}, {48, 2}, {96, 1}}, 480)));
  CHECK(series_pow_rational(a, Rational(2)).agrees_with(series_pow(a, 2)));
  CHECK((series_pow(a, 3) * series_pow(a, -3)).agrees_with(QSeries::one(480)));

  QSeries jt = standard_series(FormKind::j_theta, 480);
  QSeries chi = standard_series(FormKind::chi_half, 480);
  CHECK(series_pow_rational(jt, frac(1, 24)).agrees_with(chi));

  QSeries cj = standard_series(FormKind::cbrt_j, 480);
  CHECK(series_pow(cj, 3).agrees_with(standard_series(FormKind::j, 480)));

  QSeries two = poly({{0, 2}, {48, 1}}, 480);
  try {
    series_pow_rational(two, frac(1, 2));
    FAIL("expected non_monic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_monic);
  }
  QSeries q1 = poly({{1, 1}}, 480);
  try {
    series_pow_rational(q1, frac(1, 2));
    FAIL("expected off_grid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::off_grid);
  }
}

TEST_CASE("derivative") {
  CHECK(series_derivative(poly({{96, 1}}, 480)).agrees_with(poly({{48, 2}}, 432)));
  CHECK(series_derivative(poly({{0, 7}}, 480)).is_zero());
  QSeries d = series_derivative(poly({{24, 1}}, 480));
  CHECK(d.at(-24) == frac(1, 2));

  // Leibniz rule on a pair of standard forms.
  QSeries f = standard_series(FormKind::E4, 480);
  QSeries g = standard_series(FormKind::chi_half, 480);
  QSeries lhs = series_derivative(f * g);
  QSeries rhs = series_derivative(f) * g + f * series_derivative(g);
  CHECK(lhs.agrees_with(rhs));
}

TEST_CASE("T-twist") {
  CHECK(t_twist(QSeries::one(480)) == to_cyclotomic(QSeries::one(480)));
  CycSeries t = t_twist(poly({{24, 1}, {72, 3}, {96, 5}}, 480));
  CHECK(t.coeff(24) == Cyclotomic48(-1));
  CHECK(t.coeff(72) == Cyclotomic48(-3));
  CHECK(t.coeff(96) == Cyclotomic48(5));

  // An integral-offset character times exp(2 pi i c/24) is T-fixed.
  QSeries e8 = standard_series(StandardForm{FormKind::vacuum, Rational(8)}, 480);
  QSeries chi8 = standard_series(FormKind::cbrt_j, 480);
  CycSeries tw = t_twist(chi8);
  CycSeries back(tw.trunc());
  for (const auto& [k, v] : tw.terms()) back.set(k, v * zeta_pow(16));
  CHECK(to_rational(back).agrees_with(chi8));
  CHECK(*e8.lead() == -16);
}

TEST_CASE("standard series") {
  QSeries j = standard_series(FormKind::j, 480);
  CHECK(j.at(-48) == 1);
  CHECK(j.at(0) == 744);
  CHECK(j.at(48) == 196884);
  CHECK(j.at(96) == 21493760);

  QSeries v0 = standard_series(FormKind::chi_ising_0, 480);
  CHECK(*v0.lead() == -1);
  const long ising0[] = {1, 0, 1, 1, 2, 2};
  for (int n = 0; n < 6; ++n) CHECK(rel(v0, Rational(n)) == ising0[n]);
  CHECK(rel(v0, frac(1, 2)) == 0);

  QSeries h = standard_series(FormKind::chi_half, 480);
  const long half[] = {1, 1, 0, 1, 1, 1, 1, 1, 2};
  for (int n = 0; n < 9; ++n) CHECK(rel(h, frac(n, 2)) == half[n]);

  QSeries s16 = standard_series(FormKind::chi_ising_16, 480);
  CHECK(*s16.lead() == 2);
  const long sigma[] = {1, 1, 1, 2, 2};
  for (int n = 0; n < 5; ++n) CHECK(rel(s16, Rational(n)) == sigma[n]);

  QSeries e4 = standard_series(FormKind::E4, 480);
  CHECK(e4.at(48) == 240);
  CHECK(e4.at(96) == 2160);

  QSeries tz = standard_series(FormKind::theta_Z, 480);
  CHECK(tz.at(0) == 1);
  CHECK(tz.at(24) == 2);
  CHECK(tz.at(96) == 2);
  CHECK(tz.at(48) == 0);

  QSeries a = standard_series(FormKind::chi_ising_0, 480);
  QSeries b = standard_series(FormKind::chi_ising_half, 480);
  CHECK((a + b).agrees_with(h));
  CHECK((a - b).agrees_with(standard_series(FormKind::chi_half_minus, 480)));

  for (FormKind k : all_form_kinds()) CHECK(parse_form_kind(form_name(k)) == k);
  CHECK_THROWS_AS(parse_form_kind("no_such_form"), Error);
}

TEST_CASE("truncation bookkeeping") {
  QSeries j = standard_series(FormKind::j, 96);
  CHECK_THROWS_AS(j.at(96), Error);
  QSeries sum = j + standard_series(FormKind::j, 480);
  CHECK(sum.trunc() == 96);
  CHECK(sum.at(48) == 2 * 196884);
}

TEST_CASE("denominator profile") {
  for (const Integer& d : denominator_profile(standard_series(FormKind::j, 480))) CHECK(d == 1);
  QSeries jt = standard_series(FormKind::j_theta, 480);
  for (const Integer& d : denominator_profile(series_pow_rational(jt, frac(1, 24)))) CHECK(d == 1);

  const auto prof = denominator_profile(series_pow_rational(jt.shifted(24), frac(1, 5)));
  CHECK(prof.back() > 1);
  CHECK(prof.back() > prof.front());
}

TEST_CASE("grid helpers") {
  CHECK(grid_index(frac(3, 2)) == 72);
  CHECK(grid_exponent(-47) == frac(-47, 48));
  CHECK_THROWS_AS(grid_index(frac(1, 96)), Error);
}

TEST_CASE("text and JSON forms") {
  QSeries j = standard_series(FormKind::j, 96);
  CHECK(to_text(j) == "q^-1 + 744 + 196884 q + O(q^2)");
  QSeries h = standard_series(FormKind::chi_half, 480);
  QSeries back = qseries_from_json(to_json(h));
  CHECK(back == h);
  QSeries odd = poly({{-3, -1}, {7, 2}}, 20);
  odd.set(9, frac(5, 7));
  CHECK(qseries_from_json(to_json(odd)) == odd);
  CHECK_THROWS_AS(qseries_from_json("{\"grid\": 48}"), Error);
}
