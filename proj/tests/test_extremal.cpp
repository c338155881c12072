#include "doctest.h"

#include "svoa/extremal.hpp"
#include "svoa/lattice_theta.hpp"

using namespace svoa;

namespace {

// Coefficient at relative exponent e (relative to the leading term).
Rational rel(const QSeries& s, const Rational& e) { return s.at(*s.lead() + grid_index(e)); }

// Shadow coefficient at exponent e, measured from q^(-c/24) as in the tables.
Rational shadow_at(const ShadowReport& r, const Rational& e, bool module = true) {
  const QSeries s = module ? r.module_character() : r.B;
  return s.at(grid_index(e - r.c / 24));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::parse;
}

}  // namespace

TEST_CASE("extremal VOA characters") {
  const ExtremalSolution s24 = extremal_voa(Rational(24));
  CHECK(s24.k == 1);
  CHECK(rel(s24.series, 0) == 1);
  CHECK(rel(s24.series, 1) == 0);
  CHECK(rel(s24.series, 2) == 196884);
  CHECK(rel(s24.series, 3) == 21493760);
  CHECK(rel(s24.series, 4) == 864299970);

  const ExtremalSolution s32 = extremal_voa(Rational(32));
  CHECK(rel(s32.series, 2) == 139504);
  CHECK(rel(s32.series, 3) == 69332992);

  const ExtremalSolution s48 = extremal_voa(Rational(48));
  CHECK(rel(s48.series, 2) == 1);
  CHECK(rel(s48.series, 3) == 42987520);
  CHECK(rel(s48.series, 4) == 40491909396);

  for (long c = 8; c <= 72; c += 8) {
    CAPTURE(c);
    CHECK(extremal_voa(Rational(c)).growth_check());
  }
  CHECK(kind_of([] { extremal_voa(Rational(12)); }) == ErrorKind::rank_not_multiple_of_8);
}

TEST_CASE("extremal SVOA characters") {
  const ExtremalSolution vb = extremal_svoa(frac(47, 2));
  CHECK(rel(vb.series, frac(3, 2)) == 4371);
  CHECK(rel(vb.series, 2) == 96256);
  CHECK(rel(vb.series, frac(5, 2)) == 1143745);
  CHECK(rel(vb.series, frac(1, 2)) == 0);
  CHECK(rel(vb.series, 1) == 0);

  const ExtremalSolution d12 = extremal_svoa(Rational(12));
  CHECK(rel(d12.series, 1) == 276);
  CHECK(rel(d12.series, frac(3, 2)) == 2048);
  CHECK(rel(d12.series, 2) == 11202);

  const ExtremalSolution f4 = extremal_svoa(Rational(2));
  const long expect[] = {1, 4, 6, 8, 17};
  for (int n = 0; n < 5; ++n) CHECK(rel(f4.series, frac(n, 2)) == expect[n]);

  CHECK(kind_of([] { extremal_svoa(frac(1, 3)); }) == ErrorKind::non_half_integer_rank);
}

TEST_CASE("Buermann coefficients agree with the solve") {
  CHECK(buermann_alpha(Rational(8), 1, Kind::VOA) == -248);
  CHECK(buermann_alpha(Rational(24), 1, Kind::VOA) == -744);
  for (long c = 24; c <= 72; c += 16) {
    const ExtremalSolution s = extremal_voa(Rational(c));
    for (int r = 1; r <= s.k; ++r) CHECK(buermann_alpha(Rational(c), r, Kind::VOA) == s.a[r]);
  }
  for (long twice : {17L, 24L, 47L, 63L}) {
    const Rational c = frac(twice, 2);
    const ExtremalSolution s = extremal_svoa(c);
    for (int r = 1; r <= s.k; ++r) CHECK(buermann_alpha(c, r, Kind::SVOA) == s.a[r]);
  }
}

TEST_CASE("decompose_character") {
  const Index t = kDefaultTrunc;
  const QSeries chi = standard_series(FormKind::chi_half, t + 96);
  const QSeries x = series_pow(chi, 47) - series_pow(chi, 23) * Rational(47);
  const auto a = decompose_character(x, frac(47, 2), Kind::SVOA);
  const auto b = to_fermi_e8_form(a);
  REQUIRE(b.size() >= 2);
  CHECK(b[0] == frac(-31, 16));
  CHECK(b[1] == frac(47, 16));
  for (std::size_t i = 2; i < b.size(); ++i) CHECK(b[i] == 0);

  const QSeries j = standard_series(FormKind::j, t);
  const auto v = decompose_character(j - QSeries::one(t) * Rational(744), Rational(24), Kind::VOA);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == 1);
  CHECK(v[1] == -744);

  const auto e8 = decompose_character(standard_series(FormKind::cbrt_j, t), Rational(8), Kind::VOA);
  REQUIRE(e8.size() == 1);
  CHECK(e8[0] == 1);

  for (long twice = 1; twice <= 60; twice += 7) {
    const ExtremalSolution s = extremal_svoa(frac(twice, 2));
    CHECK(decompose_character(s.series, s.c, Kind::SVOA) == s.a);
  }
  const ExtremalSolution s40 = extremal_voa(Rational(40));
  CHECK(decompose_character(s40.series, s40.c, Kind::VOA) == s40.a);

  QSeries junk = j;
  junk.set(*junk.lead() + 1, Rational(1));
  CHECK(kind_of([&] { decompose_character(junk, Rational(24), Kind::VOA); }) ==
        ErrorKind::not_decomposable);
}

TEST_CASE("shadow expansions") {
  const ShadowReport d12 = shadow(extremal_svoa(Rational(12)));
  CHECK(d12.first_coeff == 24);
  CHECK(shadow_at(d12, frac(1, 2), false) == 24);
  CHECK(shadow_at(d12, frac(1, 2)) == 12);
  CHECK(shadow_at(d12, frac(3, 2)) == 2048);
  CHECK(shadow_at(d12, frac(5, 2)) == 49152);
  CHECK(d12.integral);
  CHECK(d12.nonneg);

  const ShadowReport s17 = shadow(extremal_svoa(frac(17, 2)));
  CHECK(shadow_at(s17, frac(1, 16)) == frac(17, 16));
  CHECK(shadow_at(s17, frac(17, 16)) == frac(3977, 16));
  CHECK(s17.lead_exponent() == frac(-7, 24));
  CHECK_FALSE(s17.integral);

  CHECK(shadow(extremal_svoa(frac(49, 2))).first_coeff == frac(1911, 2048));

  const ShadowReport s16 = shadow(extremal_svoa(Rational(16)));
  CHECK(shadow_at(s16, 0, false) == frac(-15, 16));
  CHECK(shadow_at(s16, 1, false) == 527);
  CHECK_FALSE(s16.integral);
  CHECK_FALSE(s16.nonneg);
  REQUIRE(s16.first_negative().has_value());
  CHECK(s16.first_negative()->second == frac(-15, 16));

  for (const auto& [c, name] : existence_list()) {
    CAPTURE(to_string(c));
    const ShadowReport r = shadow(extremal_svoa(c));
    CHECK(r.integral);
    CHECK(r.nonneg);
  }
}

TEST_CASE("classification verdicts") {
  const Verdict vb = classify(frac(47, 2));
  CHECK(vb.status == Status::exists_known);
  CHECK(vb.name == "VB");

  const Verdict v20 = classify(Rational(20));
  CHECK(v20.status == Status::ruled_out);
  CHECK(v20.arguments == std::vector<std::string>{"N", "G"});
  REQUIRE(v20.evidence.has_value());
  CHECK(shadow_at(*v20.evidence, frac(1, 2), false) == frac(-35, 4));
  CHECK(shadow_at(*v20.evidence, frac(3, 2), false) == 10310);

  CHECK(classify(Rational(10)).status == Status::conditional_L);
  for (const Rational& c : list_argument_ranks()) CHECK(classify(c).status == Status::conditional_L);

  const Verdict v26 = classify(Rational(26));
  CHECK(v26.status == Status::ruled_out);
  CHECK(v26.arguments == std::vector<std::string>{"G"});
  CHECK(v26.evidence->first_coeff == frac(377, 128));

  const Verdict v17 = classify(frac(17, 2));
  CHECK(v17.arguments == std::vector<std::string>{"G"});

  const Verdict v50 = classify(Rational(50));
  REQUIRE(v50.top_coefficients_negative.has_value());
  CHECK(*v50.top_coefficients_negative);
  CHECK_FALSE(classify(Rational(30)).top_coefficients_negative.has_value());

  const auto rows = classify_range(Rational(8), Rational(9));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].c == 8);
  CHECK(rows[2].c == 9);

  CHECK(kind_of([] { classify(Rational(60)); }) == ErrorKind::out_of_range);
  CHECK(kind_of([] { classify(frac(1, 3)); }) == ErrorKind::non_half_integer_rank);
}

TEST_CASE("verdict JSON") {
  const std::string js = classify(frac(47, 2)).to_json();
  CHECK(js.find(R"("rank":"47/2")") != std::string::npos);
  CHECK(js.find(R"("status":"exists_known")") != std::string::npos);
  CHECK(js.find(R"("name":"VB")") != std::string::npos);
  CHECK(js.find(R"("arguments":[])") != std::string::npos);
  CHECK(js.find(R"("shadow_head")") != std::string::npos);
}

TEST_CASE("highest-weight enumerator") {
  const QSeries vac = standard_series(StandardForm{FormKind::vacuum, Rational(24)}, 480);
  const HighestWeightEnum hv = hw_enumerator(vac, Rational(24));
  CHECK(hv.P.size() == 1);
  CHECK(hv.at(0) == 1);
  CHECK_FALSE(hv.mu.has_value());

  const HighestWeightEnum h = hw_enumerator(extremal_voa(Rational(24)).series, Rational(24));
  CHECK(h.at(2) == 196883);
  CHECK(h.at(3) == 21296876);
  CHECK(h.at(1) == 0);
  REQUIRE(h.mu.has_value());
  CHECK(*h.mu == 2);

  for (long c = 8; c <= 48; c += 8) {
    const ExtremalSolution s = extremal_voa(Rational(c));
    const HighestWeightEnum e = hw_enumerator(s.series, s.c);
    REQUIRE(e.mu.has_value());
    CHECK(*e.mu == s.k + 1);
  }
  // Extremality forces P_i = 0 for 0 < i <= k/2.
  for (const auto& [c, name] : existence_list()) {
    if (c < 8 || c >= 24) continue;
    CAPTURE(to_string(c));
    const ExtremalSolution s = extremal_svoa(c);
    const HighestWeightEnum e = hw_enumerator(s.series, c);
    for (int twice = 1; twice <= s.k; ++twice) CHECK(e.at(frac(twice, 2)) == 0);
    REQUIRE(e.mu.has_value());
    CHECK(*e.mu == frac(s.k + 1, 2));
  }
}

TEST_CASE("Z2 orbifold of a lattice VOA") {
  const QSeries theta = theta_series(lattice_catalog("Leech"), 480);
  const QSeries orb = orbifold_character(theta, Rational(24));
  QSeries j = standard_series(FormKind::j, 480);
  CHECK(orb.agrees_with(j - QSeries::one(480) * Rational(744)));
  CHECK(orb.at(48) == 196884);
  CHECK(orb.at(0) == 0);
}

TEST_CASE("fusion types") {
  CHECK(fusion_type(frac(47, 2)) == FusionCase::a);
  CHECK(fusion_type(Rational(1)) == FusionCase::b);
  CHECK(fusion_type(Rational(24)) == FusionCase::c);
  CHECK(fusion_type(Rational(3)) == FusionCase::b);
  CHECK(to_string(FusionCase::c) == "c");
}
