#include "svoa/extremal.hpp"

#include <algorithm>

#include "json.hpp"

namespace svoa {

namespace {

Index step_of(Kind kind) { return kind == Kind::VOA ? kGrid : kGrid / 2; }

Rational pow2(long n) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(n)));
  return n >= 0 ? Rational(p) : Rational(1 / Rational(p));
}

long half_units(const Rational& c) {
  const Rational twice = c * 2;
  if (!is_integer(twice))
    throw Error(ErrorKind::non_half_integer_rank, "rank " + to_string(c) + " is not in Z/2");
  return twice.get_num().get_si();
}

int rank_k(const Rational& c, Kind kind) {
  const Rational q = kind == Kind::VOA ? Rational(c / 24) : Rational(c / 8);
  return static_cast<int>(floor(q).get_si());
}

void validate(const Rational& c, Kind kind) {
  half_units(c);
  if (kind == Kind::VOA) {
    if (!is_integer(c / 8) || sgn(c) <= 0)
      throw Error(ErrorKind::rank_not_multiple_of_8,
                  "VOA rank " + to_string(c) + " must be a positive multiple of 8");
  } else if (sgn(c) < 0) {
    throw Error(ErrorKind::out_of_range, "negative rank");
  }
}

// Basis characters chi_8^(c/8-3r) or chi_1/2^(2c-24r), r = 0..k, each known
// to relative precision `precision` beyond its own leading term.
std::vector<QSeries> basis_series(const Rational& c, Kind kind, int k, Index precision) {
  std::vector<QSeries> out;
  if (kind == Kind::VOA) {
    const QSeries chi8 = standard_series(FormKind::cbrt_j, -16 + precision);
    const long base = Rational(c / 8).get_num().get_si();
    for (int r = 0; r <= k; ++r) out.push_back(series_pow(chi8, base - 3 * r));
  } else {
    const QSeries chi = standard_series(FormKind::chi_half, -1 + precision);
    const long base = half_units(c);
    for (int r = 0; r <= k; ++r) out.push_back(series_pow(chi, base - 24 * r));
  }
  return out;
}

// Forward substitution: the r-th basis element has leading term 1 at the
// r-th step, so a_r is the target coefficient minus the earlier terms.
std::vector<Rational> triangular_solve(const QSeries& target, const std::vector<QSeries>& basis,
                                       Index lead, Index step) {
  std::vector<Rational> a;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const Index idx = lead + static_cast<Index>(r) * step;
    Rational v = target.at(idx);
    for (std::size_t s = 0; s < r; ++s) v -= a[s] * basis[s].at(idx);
    a.push_back(v / basis[r].at(idx));
  }
  return a;
}

QSeries combine(const std::vector<Rational>& a, const std::vector<QSeries>& basis) {
  QSeries out = basis.front() * a.front();
  for (std::size_t r = 1; r < basis.size(); ++r) out += basis[r] * a[r];
  return out;
}

}  // namespace

Rational ExtremalSolution::first_free() const {
  return Rational(static_cast<long>(k + 1)) * frac(step_of(kind), kGrid);
}

bool ExtremalSolution::growth_check() const {
  const Rational e1 = first_free();
  const Rational e2 = e1 + frac(step_of(kind), kGrid);
  auto i1 = A.find(e1);
  auto i2 = A.find(e2);
  if (i1 == A.end() || i2 == A.end()) return false;
  return sgn(i1->second) > 0 && sgn(i2->second - i1->second) > 0;
}

Index auto_precision(int k) { return std::max<Index>(kGrid * (k + 3), kDefaultTrunc); }

ExtremalSolution extremal(const Rational& c, Kind kind, Index precision) {
  validate(c, kind);
  ExtremalSolution sol;
  sol.c = c;
  sol.kind = kind;
  sol.k = rank_k(c, kind);
  const Index R = precision > 0 ? std::max(precision, kGrid * (sol.k + 3)) : auto_precision(sol.k);
  const Index lead = grid_index(-c / 24);
  const Index step = step_of(kind);
  const auto basis = basis_series(c, kind, sol.k, R);
  const QSeries vac = standard_series(StandardForm{FormKind::vacuum, c}, lead + R);
  sol.a = triangular_solve(vac, basis, lead, step);
  sol.series = combine(sol.a, basis).truncated(lead + R);
  const QSeries ratio = sol.series * series_inv(vac);
  for (Index i = (sol.k + 1) * step; i < ratio.trunc(); i += step)
    sol.A.emplace(grid_exponent(i), ratio.coeff(i));
  return sol;
}

ExtremalSolution extremal_voa(const Rational& c, Index precision) {
  return extremal(c, Kind::VOA, precision);
}

ExtremalSolution extremal_svoa(const Rational& c, Index precision) {
  return extremal(c, Kind::SVOA, precision);
}

Rational buermann_alpha(const Rational& c, int r, Kind kind) {
  validate(c, kind);
  if (r < 1) throw Error(ErrorKind::out_of_range, "Buermann coefficients start at r = 1");
  const Index lead = grid_index(-c / 24);
  // Work in the local variable t = q (VOA) or t = q^(1/2) (SVOA); both are
  // index 48 after rescaling. Precision covers t^(r-1) of f' (t/phi)^r.
  const Index need = kGrid * (r + 2);
  QSeries f;
  QSeries t_over_phi;
  if (kind == Kind::VOA) {
    const QSeries vac = standard_series(StandardForm{FormKind::vacuum, c}, lead + need);
    const QSeries chi8 = standard_series(FormKind::cbrt_j, -16 + need);
    f = vac * series_pow(chi8, -Rational(c / 8).get_num().get_si());
    t_over_phi = standard_series(FormKind::j, -kGrid + need).shifted(kGrid);
  } else {
    const Index q_need = need / 2 + kGrid;
    const QSeries vac = standard_series(StandardForm{FormKind::vacuum, c}, lead + q_need);
    const QSeries chi = standard_series(FormKind::chi_half, -1 + q_need);
    f = (vac * series_pow(chi, -half_units(c))).rescaled(2);
    t_over_phi = standard_series(FormKind::j_theta, -24 + q_need).shifted(24).rescaled(2);
  }
  const QSeries g = series_derivative(f) * series_pow(t_over_phi, r);
  return g.at(kGrid * (r - 1)) / r;
}

std::vector<Rational> decompose_character(const QSeries& x, const Rational& c, Kind kind) {
  validate(c, kind);
  const Index lead = grid_index(-c / 24);
  if (x.is_zero() || *x.lead() < lead)
    throw Error(ErrorKind::not_decomposable, "leading exponent must be -c/24");
  const int k = rank_k(c, kind);
  const Index R = x.trunc() - lead;
  const Index step = step_of(kind);
  if (R <= static_cast<Index>(k) * step)
    throw Error(ErrorKind::insufficient_truncation, "character too short to decompose");
  const auto basis = basis_series(c, kind, k, R);
  const auto a = triangular_solve(x, basis, lead, step);
  const QSeries residual = x - combine(a, basis);
  if (!residual.is_zero())
    throw Error(ErrorKind::not_decomposable,
                "residual at q^(" + to_string(grid_exponent(*residual.lead())) + ")");
  return a;
}

std::vector<Rational> to_fermi_e8_form(const std::vector<Rational>& a) {
  // chi_1/2^-24 = (1 - chi_8 chi_1/2^-16) / 16.
  std::vector<Rational> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t r = i; r < a.size(); ++r) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), r, i);
      Rational term = a[r] * Rational(binom) / pow2(4 * static_cast<long>(r));
      if (i % 2) term = -term;
      b[i] += term;
    }
  }
  return b;
}

QSeries ShadowReport::module_character() const {
  if (is_integer(c)) return B * Rational(1, 2);
  return B;
}

std::optional<std::pair<Rational, Rational>> ShadowReport::first_non_integral() const {
  const Index shift = grid_index(c / 24);
  for (const auto& [i, v] : B.terms())
    if (!is_integer(v)) return std::make_pair(grid_exponent(i + shift), v);
  return std::nullopt;
}

std::optional<std::pair<Rational, Rational>> ShadowReport::first_negative() const {
  const Index shift = grid_index(c / 24);
  for (const auto& [i, v] : B.terms())
    if (sgn(v) < 0) return std::make_pair(grid_exponent(i + shift), v);
  return std::nullopt;
}

ShadowReport shadow(const ExtremalSolution& sol) {
  if (sol.kind != Kind::SVOA)
    throw Error(ErrorKind::out_of_range, "the cusp-1 expansion is defined for SVOA solutions");
  ShadowReport rep;
  rep.c = sol.c;
  const long twice = half_units(sol.c);
  const bool half_odd = twice % 2 != 0;
  rep.s = static_cast<int>(twice - 24L * sol.k);
  const Index lead = grid_index(-sol.c / 24);
  const Index R = sol.series.trunc() - lead;
  // chi_1/2 at the cusp 1 is sqrt2 q^(1/24) prod (1 + q^n) up to a phase.
  const QSeries w = standard_series(FormKind::cusp1_chi_half, 2 + R);
  std::optional<QSeries> B;
  for (int r = 0; r <= sol.k; ++r) {
    if (sgn(sol.a[static_cast<std::size_t>(r)]) == 0) continue;
    const long e = twice - 24L * r;
    // (sqrt2)^e, divided by sqrt2 once more when c is not integral.
    Rational scale = half_odd ? pow2((e - 1) / 2) : pow2(e / 2);
    scale *= sol.a[static_cast<std::size_t>(r)];
    if (r % 2) scale = -scale;
    QSeries term = series_pow(w, e);
    term *= scale;
    B = B ? *B + term : term;
  }
  const Index trunc = 2 * rep.s + R;
  rep.B = B ? B->truncated(trunc) : QSeries(trunc);
  rep.first_coeff = rep.B.coeff(2 * rep.s);
  for (const auto& [i, v] : rep.B.terms()) {
    if (!is_integer(v)) rep.integral = false;
    if (sgn(v) < 0) rep.nonneg = false;
  }
  return rep;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::exists_known: return "exists_known";
    case Status::ruled_out: return "ruled_out";
    case Status::conditional_L: return "conditional_L";
    case Status::open: return "open";
  }
  return "open";
}

const std::vector<std::pair<Rational, std::string>>& existence_list() {
  static const std::vector<std::pair<Rational, std::string>> list = [] {
    std::vector<std::pair<Rational, std::string>> v;
    v.emplace_back(Rational(0), "1");
    v.emplace_back(frac(1, 2), "V_Fermi");
    for (long n = 2; n <= 15; ++n) v.emplace_back(frac(n, 2), "V_Fermi^" + std::to_string(n));
    v.emplace_back(Rational(8), "V_E8");
    v.emplace_back(Rational(12), "V_D12+");
    v.emplace_back(Rational(14), "V_(E7+E7)+");
    v.emplace_back(Rational(15), "V_A15+");
    v.emplace_back(frac(31, 2), "V_E8,2+");
    v.emplace_back(frac(47, 2), "VB");
    v.emplace_back(Rational(24), "Vnatural");
    return v;
  }();
  return list;
}

const std::vector<Rational>& list_argument_ranks() {
  static const std::vector<Rational> list = {Rational(10), Rational(11), frac(25, 2),
                                             Rational(13), frac(27, 2),  frac(29, 2)};
  return list;
}

Verdict classify(const Rational& c, const Rational& max) {
  half_units(c);
  if (sgn(c) < 0 || c > max)
    throw Error(ErrorKind::out_of_range,
                "rank " + to_string(c) + " outside [0, " + to_string(max) + "]");
  Verdict v;
  v.c = c;
  const ExtremalSolution sol = extremal_svoa(c);
  v.evidence = shadow(sol);
  if (c >= 48) {
    const auto& a = sol.a;
    v.top_coefficients_negative = sgn(a[a.size() - 1]) < 0 && sgn(a[a.size() - 2]) < 0;
  }
  for (const auto& [rank, name] : existence_list()) {
    if (rank == c) {
      v.status = Status::exists_known;
      v.name = name;
      return v;
    }
  }
  if (auto neg = v.evidence->first_negative()) {
    v.arguments.push_back("N");
    v.witnesses.push_back({"N", neg->first, neg->second});
  }
  if (auto frac_coeff = v.evidence->first_non_integral()) {
    v.arguments.push_back("G");
    v.witnesses.push_back({"G", frac_coeff->first, frac_coeff->second});
  }
  if (!v.arguments.empty()) {
    v.status = Status::ruled_out;
  } else {
    const auto& L = list_argument_ranks();
    v.status = std::find(L.begin(), L.end(), c) != L.end() ? Status::conditional_L : Status::open;
  }
  return v;
}

std::vector<Verdict> classify_range(const Rational& from, const Rational& to, const Rational& max) {
  std::vector<Verdict> out;
  const long lo = half_units(from);
  const long hi = half_units(to);
  for (long n = std::max(lo, 0L); n <= hi; ++n) out.push_back(classify(frac(n, 2), max));
  return out;
}

std::string Verdict::to_json() const {
  nlohmann::json j;
  j["rank"] = svoa::to_string(c);
  j["status"] = std::string(svoa::to_string(status));
  if (status == Status::exists_known) j["name"] = name;
  if (status == Status::conditional_L)
    j["condition"] = "completeness of the list of self-dual SVOAs with 8 <= c < 16";
  nlohmann::json head = nlohmann::json::array();
  if (evidence) {
    const Index shift = grid_index(c / 24);
    for (const auto& [i, v] : evidence->B.terms()) {
      if (head.size() == 3) break;
      head.push_back({svoa::to_string(grid_exponent(i + shift)), v.get_str()});
    }
    j["first_coeff"] = evidence->first_coeff.get_str();
  }
  j["shadow_head"] = std::move(head);
  j["arguments"] = arguments;
  nlohmann::json wit = nlohmann::json::array();
  for (const auto& w : witnesses)
    wit.push_back({{"argument", w.argument},
                   {"exponent", svoa::to_string(w.exponent)},
                   {"value", w.value.get_str()}});
  j["witnesses"] = std::move(wit);
  if (top_coefficients_negative) j["top_coefficients_negative"] = *top_coefficients_negative;
  return j.dump();
}

Integer HighestWeightEnum::at(const Rational& weight) const {
  if (weight >= known_below)
    throw Error(ErrorKind::insufficient_truncation,
                "weight " + to_string(weight) + " beyond " + to_string(known_below));
  auto it = P.find(weight);
  return it == P.end() ? Integer(0) : it->second;
}

HighestWeightEnum hw_enumerator(const QSeries& x, const Rational& c) {
  if (c <= 1) throw Error(ErrorKind::out_of_range, "highest-weight counts need c > 1");
  const Index lead = grid_index(-c / 24);
  const QSeries y = x.shifted(-lead);
  const Index R = y.trunc();
  if (R <= 0) throw Error(ErrorKind::insufficient_truncation, "character has no terms");
  // Vacuum module q^0 prod_{n>=2} (1-q^n)^-1, generic modules q^h prod (1-q^n)^-1.
  const QSeries phi = euler_product(kGrid, kGrid, -1, R);
  const QSeries vac_unit = series_inv(euler_product(2 * kGrid, kGrid, -1, R));
  QSeries gen = (y - vac_unit) * phi;
  gen += QSeries::one(R);
  HighestWeightEnum out;
  out.c = c;
  out.known_below = grid_exponent(gen.trunc());
  for (const auto& [i, v] : gen.terms()) {
    const Rational w = grid_exponent(i);
    if (!is_integer(v))
      throw Error(ErrorKind::non_integer_coefficient,
                  "P_" + to_string(w) + " = " + v.get_str() + " is not an integer");
    if (sgn(v) < 0)
      throw Error(ErrorKind::negative_multiplicity,
                  "P_" + to_string(w) + " = " + v.get_str() + " is negative");
    out.P.emplace(w, v.get_num());
    if (!out.mu && sgn(w) > 0) out.mu = w;
  }
  return out;
}

QSeries orbifold_character(const QSeries& theta, const Rational& c) {
  if (!is_integer(c / 8) || sgn(c) <= 0)
    throw Error(ErrorKind::rank_not_multiple_of_8, "orbifold rank must be a positive multiple of 8");
  if (theta.is_zero() || *theta.lead() != 0 || theta.leading_coeff() != 1)
    throw Error(ErrorKind::out_of_range, "theta series must start with 1");
  const long n = c.get_num().get_si();
  const Index R = theta.trunc();
  const QSeries minus = series_pow(euler_product(kGrid, kGrid, -1, R), -n);
  const QSeries plus = series_pow(euler_product(kGrid, kGrid, +1, R), -n);
  QSeries untwisted = theta * minus + plus;
  untwisted *= Rational(1, 2);
  const QSeries half_minus = series_pow(euler_product(kGrid / 2, kGrid, -1, R), -n);
  QSeries half_plus = series_pow(euler_product(kGrid / 2, kGrid, +1, R), -n);
  if ((n / 8) % 2) half_plus = -half_plus;
  QSeries twisted = half_minus + half_plus;
  twisted *= pow2(n / 2) / 2;
  const Index lead = grid_index(-c / 24);
  return untwisted.shifted(lead) + twisted.shifted(lead + grid_index(c / 16));
}

FusionCase fusion_type(const Rational& c) {
  const long twice = half_units(c);
  if (twice % 2 != 0) return FusionCase::a;
  return (twice / 2) % 2 != 0 ? FusionCase::b : FusionCase::c;
}

std::string_view to_string(FusionCase f) {
  switch (f) {
    case FusionCase::a: return "a";
    case FusionCase::b: return "b";
    case FusionCase::c: return "c";
  }
  return "a";
}

}  // namespace svoa
