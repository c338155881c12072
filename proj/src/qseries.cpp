#include "svoa/qseries.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"

namespace svoa {

namespace {

// Relative dense view of a series: coefficient k of `coeffs` sits at index
// lead + k * step. `step` is the gcd of all offsets from the lead, so any
// power of the series lives on the same sub-lattice.
template <class Coeff>
struct Dense {
  Index lead = 0;
  Index step = 1;
  Index precision = 0;  // relative: known for offsets < precision
  std::vector<std::pair<std::size_t, Coeff>> nonzero;  // (k, coeff), k >= 1
  Coeff head;                                         // coefficient at k = 0
};

template <class Coeff>
Dense<Coeff> to_dense(const Series<Coeff>& a) {
  if (a.is_zero()) throw Error(ErrorKind::zero_series, "operation needs a nonzero series");
  Dense<Coeff> d;
  d.lead = *a.lead();
  d.precision = a.trunc() - d.lead;
  Index g = 0;
  for (const auto& [k, v] : a.terms()) g = std::gcd(g, k - d.lead);
  d.step = g == 0 ? std::max<Index>(d.precision, 1) : g;
  d.head = a.leading_coeff();
  for (const auto& [k, v] : a.terms()) {
    if (k == d.lead) continue;
    d.nonzero.emplace_back(static_cast<std::size_t>((k - d.lead) / d.step), v);
  }
  return d;
}

template <class Coeff>
std::size_t slots(const Dense<Coeff>& d) {
  return static_cast<std::size_t>((d.precision + d.step - 1) / d.step);
}

template <class Coeff>
Series<Coeff> from_dense(const std::vector<Coeff>& v, Index lead, Index step, Index trunc) {
  Series<Coeff> out(trunc);
  for (std::size_t k = 0; k < v.size(); ++k) out.set(lead + static_cast<Index>(k) * step, v[k]);
  return out;
}

template <class Coeff>
Series<Coeff> inverse_impl(const Series<Coeff>& a) {
  const Dense<Coeff> d = to_dense(a);
  const std::size_t n = slots(d);
  std::vector<Coeff> v(n);
  const Coeff inv_head = Coeff(1) / d.head;
  v[0] = inv_head;
  for (std::size_t m = 1; m < n; ++m) {
    Coeff acc(0);
    for (const auto& [k, u] : d.nonzero) {
      if (k > m) break;
      acc += u * v[m - k];
    }
    v[m] = -(acc * inv_head);
  }
  return from_dense(v, -d.lead, d.step, -d.lead + d.precision);
}

}  // namespace

Index grid_index(const Rational& exponent) {
  Rational scaled = exponent * kGrid;
  if (!is_integer(scaled))
    throw Error(ErrorKind::off_grid, "exponent " + to_string(exponent) + " not on the 1/48 grid");
  return scaled.get_num().get_si();
}

Rational grid_exponent(Index index) {
  return frac(static_cast<long>(index), kGrid);
}

QSeries series_inv(const QSeries& a) { return inverse_impl(a); }

CycSeries series_inv(const CycSeries& a) { return inverse_impl(a); }

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_pow_rational(const QSeries& a, const Rational& r) {
  const Dense<Rational> d = to_dense(a);
  const Rational lead_exp = r * d.lead;
  if (!is_integer(lead_exp))
    throw Error(ErrorKind::off_grid, "leading exponent of power leaves the 1/48 grid");
  const Index new_lead = lead_exp.get_num().get_si();
  Rational head;
  if (is_integer(r)) {
    const long e = r.get_num().get_si();
    head = 1;
    Rational base = e < 0 ? Rational(1 / d.head) : d.head;
    for (long i = 0; i < std::labs(e); ++i) head *= base;
  } else {
    if (d.head != 1)
      throw Error(ErrorKind::non_monic, "fractional power needs leading coefficient 1");
    head = 1;
  }
  // Power recurrence from v' u = r u' v:
  //   m u_0 v_m = sum_{k=1..m} ((r+1) k - m) u_k v_{m-k}.
  const std::size_t n = slots(d);
  std::vector<Rational> v(n);
  v[0] = head;
  const Rational r1 = r + 1;
  const Rational inv_head = 1 / d.head;
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc(0);
    for (const auto& [k, u] : d.nonzero) {
      if (k > m) break;
      Rational w = r1 * static_cast<long>(k) - static_cast<long>(m);
      if (sgn(w) == 0 || sgn(v[m - k]) == 0) continue;
      acc += w * u * v[m - k];
    }
    v[m] = acc * inv_head / static_cast<long>(m);
  }
  return from_dense(v, new_lead, d.step, new_lead + d.precision);
}

QSeries series_pow(const QSeries& a, long n) { return series_pow_rational(a, Rational(n)); }

QSeries series_derivative(const QSeries& a) {
  QSeries out(a.trunc() - kGrid);
  for (const auto& [k, v] : a.terms()) {
    if (k == 0) continue;
    out.set(k - kGrid, Rational(v * grid_exponent(k)));
  }
  return out;
}

CycSeries t_twist(const QSeries& a) {
  CycSeries out(a.trunc());
  for (const auto& [k, v] : a.terms()) {
    Cyclotomic48 z = zeta_pow(static_cast<long>(k % kGrid));
    z *= v;
    out.set(k, std::move(z));
  }
  return out;
}

CycSeries to_cyclotomic(const QSeries& a) {
  CycSeries out(a.trunc());
  for (const auto& [k, v] : a.terms()) out.set(k, Cyclotomic48(v));
  return out;
}

QSeries to_rational(const CycSeries& a) {
  QSeries out(a.trunc());
  for (const auto& [k, v] : a.terms()) out.set(k, v.to_rational());
  return out;
}

std::vector<Integer> denominator_profile(const QSeries& a) {
  std::vector<Integer> out;
  if (a.is_zero()) return out;
  Integer running = 1;
  for (Index k = *a.lead(); k < a.trunc(); ++k) {
    const Rational c = a.coeff(k);
    mpz_lcm(running.get_mpz_t(), running.get_mpz_t(), c.get_den_mpz_t());
    out.push_back(running);
  }
  return out;
}

std::pair<QSeries, QSeries> parity_split(const QSeries& chi, const Rational& c) {
  const Index phase = grid_index(c / 24);  // exp(2 pi i c/24) = zeta^(2c)
  CycSeries twisted = t_twist(chi);
  twisted *= zeta_pow(static_cast<long>(phase));
  const CycSeries plain = to_cyclotomic(chi);
  CycSeries even = plain + twisted;
  CycSeries odd = plain - twisted;
  const Cyclotomic48 half(Rational(1, 2));
  even *= half;
  odd *= half;
  return {to_rational(even), to_rational(odd)};
}

QSeries euler_product(Index offset, Index step, int sign, Index precision) {
  if (precision <= 0) return QSeries(precision);
  std::vector<Integer> v(static_cast<std::size_t>(precision));
  v[0] = 1;
  for (Index e = offset; e < precision; e += step) {
    for (Index i = precision - 1; i >= e; --i) {
      const auto iu = static_cast<std::size_t>(i);
      const auto ju = static_cast<std::size_t>(i - e);
      if (v[ju] == 0) continue;
      if (sign > 0) v[iu] += v[ju];
      else v[iu] -= v[ju];
    }
  }
  QSeries out(precision);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.set(static_cast<Index>(i), Rational(v[i]));
  return out;
}

namespace {

struct FormEntry {
  FormKind kind;
  std::string_view name;
};

constexpr FormEntry kForms[] = {
    {FormKind::eta, "eta"},
    {FormKind::theta_Z, "theta_Z"},
    {FormKind::theta_Z_half, "theta_Z_half"},
    {FormKind::E4, "E4"},
    {FormKind::delta, "delta"},
    {FormKind::j, "j"},
    {FormKind::cbrt_j, "cbrt_j"},
    {FormKind::j_theta, "j_theta"},
    {FormKind::chi_half, "chi_half"},
    {FormKind::chi_half_minus, "chi_half_minus"},
    {FormKind::chi_ising_0, "chi_ising_0"},
    {FormKind::chi_ising_half, "chi_ising_half"},
    {FormKind::chi_ising_16, "chi_ising_16"},
    {FormKind::cusp1_chi_half, "cusp1_chi_half"},
    {FormKind::vacuum, "vacuum"},
    {FormKind::generic_module, "generic_module"},
};

// Euler's product prod_{n>=1} (1 - q^n) to relative precision.
QSeries euler_phi(Index precision) { return euler_product(kGrid, kGrid, -1, precision); }

QSeries theta_Z(Index trunc) {
  QSeries out(trunc);
  for (long n = 0;; ++n) {
    const Index idx = 24 * n * n;
    if (idx >= trunc) break;
    out.set(idx, Rational(n == 0 ? 1 : 2));
  }
  return out;
}

QSeries theta_Z_half(Index trunc) {
  QSeries out(trunc);
  for (long m = 0;; ++m) {
    const Index idx = 6 * (2 * m + 1) * (2 * m + 1);
    if (idx >= trunc) break;
    out.set(idx, Rational(2));
  }
  return out;
}

QSeries eisenstein_E4(Index trunc) {
  QSeries out(trunc);
  out.set(0, Rational(1));
  for (long n = 1; n * kGrid < trunc; ++n) {
    Integer sigma = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sigma += Integer(d) * d * d;
    out.set(n * kGrid, Rational(Integer(240) * sigma));
  }
  return out;
}

// sqrt(theta / eta) with its two T-twist components; shared by the Ising rules.
QSeries fermion_root(Index trunc) {
  // theta_Z/eta has lead -2 and the square root lead -1; relative precision
  // is preserved, so compute everything to relative precision trunc + 1.
  const Index rel = trunc + 1;
  QSeries eta = euler_phi(rel).shifted(2);
  QSeries quotient = theta_Z(rel) * series_inv(eta);
  return series_pow_rational(quotient, Rational(1, 2));
}

}  // namespace

FormKind parse_form_kind(std::string_view name) {
  for (const auto& f : kForms)
    if (f.name == name) return f.kind;
  throw Error(ErrorKind::unknown_name, "unknown standard series '" + std::string(name) + "'");
}

std::string_view form_name(FormKind kind) {
  for (const auto& f : kForms)
    if (f.kind == kind) return f.name;
  return "?";
}

const std::vector<FormKind>& all_form_kinds() {
  static const std::vector<FormKind> kinds = [] {
    std::vector<FormKind> v;
    for (const auto& f : kForms) v.push_back(f.kind);
    return v;
  }();
  return kinds;
}

QSeries standard_series(const StandardForm& form, Index trunc) {
  auto need = [&](Index lead) {
    const Index rel = trunc - lead;
    if (rel <= 0)
      throw Error(ErrorKind::insufficient_truncation,
                  std::string(form_name(form.kind)) + " has no terms below trunc");
    return rel;
  };
  switch (form.kind) {
    case FormKind::eta: {
      const Index rel = need(2);
      return euler_phi(rel).shifted(2);
    }
    case FormKind::theta_Z:
      need(0);
      return theta_Z(trunc);
    case FormKind::theta_Z_half:
      need(6);
      return theta_Z_half(trunc);
    case FormKind::E4:
      need(0);
      return eisenstein_E4(trunc);
    case FormKind::delta: {
      const Index rel = need(48);
      return series_pow(euler_phi(rel), 24).shifted(48);
    }
    case FormKind::j: {
      // E4^3 / Delta
      const Index rel = need(-48);
      QSeries e4 = eisenstein_E4(rel);
      return (series_pow(e4, 3) * series_pow(euler_phi(rel), -24)).shifted(-48);
    }
    case FormKind::cbrt_j: {
      // E4 / eta^8
      const Index rel = need(-16);
      return (eisenstein_E4(rel) * series_pow(euler_phi(rel), -8)).shifted(-16);
    }
    case FormKind::j_theta: {
      const Index rel = need(-24);
      return series_pow(euler_product(24, kGrid, +1, rel), 24).shifted(-24);
    }
    case FormKind::chi_half: {
      const Index rel = need(-1);
      return euler_product(24, kGrid, +1, rel).shifted(-1);
    }
    case FormKind::chi_half_minus: {
      const Index rel = need(-1);
      return euler_product(24, kGrid, -1, rel).shifted(-1);
    }
    case FormKind::chi_ising_0:
    case FormKind::chi_ising_half: {
      need(form.kind == FormKind::chi_ising_0 ? -1 : 23);
      auto [even, odd] = parity_split(fermion_root(trunc), Rational(1, 2));
      return (form.kind == FormKind::chi_ising_0 ? even : odd).truncated(trunc);
    }
    case FormKind::chi_ising_16: {
      // (1/sqrt2) sqrt(Theta_{Z+1/2}/eta) = sqrt(Theta_{Z+1/2} / (2 eta))
      const Index rel = need(2);
      QSeries eta = euler_phi(rel + 2).shifted(2);
      QSeries quotient = theta_Z_half(rel + 6) * series_inv(eta);
      quotient *= Rational(1, 2);
      return series_pow_rational(quotient, Rational(1, 2)).truncated(trunc);
    }
    case FormKind::cusp1_chi_half: {
      const Index rel = need(2);
      return euler_product(kGrid, kGrid, +1, rel).shifted(2);
    }
    case FormKind::vacuum: {
      const Index lead = grid_index(-form.c / 24);
      const Index rel = need(lead);
      return series_inv(euler_product(2 * kGrid, kGrid, -1, rel)).shifted(lead);
    }
    case FormKind::generic_module: {
      const Index lead = grid_index(-form.c / 24 + form.h);
      const Index rel = need(lead);
      return series_inv(euler_phi(rel)).shifted(lead);
    }
  }
  throw Error(ErrorKind::unknown_name, "unhandled standard form");
}

namespace {

std::string exponent_text(const Rational& e) {
  if (e == 1) return "q";
  if (is_integer(e)) return "q^" + e.get_str();
  return "q^(" + e.get_str() + ")";
}

std::string terms_text(const QSeries& s, Index shift) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : s.terms()) {
    const Rational e = grid_exponent(k - shift);
    const bool neg = sgn(v) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Rational a = abs(v);
    if (sgn(e) == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << " ";
      os << exponent_text(e);
    }
  }
  if (first) os << "0";
  os << " + O(" << exponent_text(grid_exponent(s.trunc() - shift)) << ")";
  return os.str();
}

}  // namespace

std::string to_text(const QSeries& s) { return terms_text(s, 0); }

std::string to_text_normalized(const QSeries& s, const Rational& factor_exponent) {
  const Index shift = grid_index(factor_exponent);
  return exponent_text(factor_exponent) + " (" + terms_text(s, shift) + ")";
}

std::string to_json(const QSeries& s) {
  nlohmann::json j;
  j["grid"] = kGrid;
  j["trunc"] = s.trunc();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, v] : s.terms()) terms.push_back({k, v.get_str()});
  j["terms"] = std::move(terms);
  return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  try {
    if (!j.contains("grid") || j["grid"].get<Index>() != kGrid)
      throw Error(ErrorKind::parse, "series JSON must use grid 48");
    QSeries out(j.at("trunc").get<Index>());
    for (const auto& term : j.at("terms")) {
      out.set(term.at(0).get<Index>(), parse_rational(term.at(1).get<std::string>()));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

}  // namespace svoa
