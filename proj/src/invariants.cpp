#include "svoa/invariants.hpp"

#include <sstream>

#include "json.hpp"

namespace svoa {

CycPoly to_cyclotomic(const MultiPoly& p) {
  CycPoly out;
  for (const auto& [e, v] : p.terms()) out.add_to(e, Cyclotomic48(v));
  return out;
}

namespace {

CycPoly linear_form(const CycMatrix& g, int row) {
  CycPoly out;
  for (int j = 0; j < 3; ++j) {
    Exponent3 e{0, 0, 0};
    e[static_cast<std::size_t>(j)] = 1;
    out.add_to(e, g(row, j));
  }
  return out;
}

std::vector<Cyclotomic48> powers(const Cyclotomic48& x, int n) {
  std::vector<Cyclotomic48> out(static_cast<std::size_t>(n) + 1);
  out[0] = Cyclotomic48(1L);
  for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] * x;
  return out;
}

}  // namespace

CycPoly poly_act(const CycMatrix& g, const MultiPoly& p) {
  if (g.dim() != 3) throw Error(ErrorKind::out_of_range, "poly_act needs a 3x3 matrix");
  int maxdeg = 0;
  std::map<int, std::map<int, std::vector<std::pair<int, Rational>>>> grouped;
  for (const auto& [e, v] : p.terms()) {
    grouped[e[0]][e[1]].emplace_back(e[2], v);
    maxdeg = std::max({maxdeg, e[0], e[1], e[2]});
  }
  if (g.is_diagonal()) {
    const auto pa = powers(g(0, 0), maxdeg);
    const auto pb = powers(g(1, 1), maxdeg);
    const auto pc = powers(g(2, 2), maxdeg);
    CycPoly out;
    for (const auto& [e, v] : p.terms()) {
      Cyclotomic48 f = pa[static_cast<std::size_t>(e[0])] * pb[static_cast<std::size_t>(e[1])] *
                       pc[static_cast<std::size_t>(e[2])];
      f *= v;
      out.add_to(e, f);
    }
    return out;
  }
  // Nested Horner: sum_i La^i (sum_j Lb^j (sum_k m_ijk Lc^k)).
  const CycPoly La = linear_form(g, 0);
  const CycPoly Lb = linear_form(g, 1);
  const CycPoly Lc = linear_form(g, 2);
  std::vector<CycPoly> lc_pow{CycPoly::monomial(0, 0, 0, Cyclotomic48(1L))};
  for (int k = 1; k <= maxdeg; ++k) lc_pow.push_back(lc_pow.back() * Lc);
  CycPoly result;
  const int imax = grouped.empty() ? -1 : grouped.rbegin()->first;
  for (int i = imax; i >= 0; --i) {
    result = result * La;
    auto it = grouped.find(i);
    if (it == grouped.end()) continue;
    CycPoly inner;
    const int jmax = it->second.rbegin()->first;
    for (int j = jmax; j >= 0; --j) {
      inner = inner * Lb;
      auto jt = it->second.find(j);
      if (jt == it->second.end()) continue;
      for (const auto& [k, v] : jt->second) {
        CycPoly term = lc_pow[static_cast<std::size_t>(k)];
        term *= Cyclotomic48(v);
        inner += term;
      }
    }
    result += inner;
  }
  return result;
}

namespace {

MultiPoly sym_ab(int i, int j, int k, long coeff) {
  MultiPoly p = MultiPoly::monomial(i, j, k, Rational(coeff));
  if (i != j) p += MultiPoly::monomial(j, i, k, Rational(coeff));
  return p;
}

BasisInvariants build_basis() {
  BasisInvariants b;
  b.p1 = MultiPoly::monomial(2, 0, 1, Rational(1)) + MultiPoly::monomial(0, 2, 1, Rational(-1));

  const std::pair<int, long> p2_ab[] = {{23, -1}, {21, 1}, {19, 21}, {17, -85}, {15, 134}, {13, -70}};
  for (const auto& [i, v] : p2_ab) b.p2 += sym_ab(i, 24 - i, 0, v);
  const std::pair<int, long> p2_c8[] = {{16, -2}, {14, -240}, {12, -3640}, {10, -16016}, {8, -25740}};
  for (const auto& [i, v] : p2_c8) b.p2 += sym_ab(i, 16 - i, 8, v);
  b.p2 += sym_ab(7, 1, 16, 256);
  b.p2 += sym_ab(5, 3, 16, 1792);

  const std::pair<int, long> p3_ab[] = {{23, 3},      {21, 253},     {19, 5313},
                                        {17, 43263},  {15, 163438},  {13, 312018}};
  for (const auto& [i, v] : p3_ab) b.p3 += sym_ab(i, 24 - i, 0, v);
  b.p3 += MultiPoly::monomial(0, 0, 24, Rational(-256));

  const MultiPoly a = MultiPoly::variable(0);
  const MultiPoly bb = MultiPoly::variable(1);
  MultiPoly e8 = ((a + bb).pow(16) + (a - bb).pow(16)) * Rational(1, 2);
  e8 += MultiPoly::monomial(0, 0, 16, Rational(128));
  b.p4 = e8.pow(3);
  return b;
}

// Exact Gauss-Jordan on an augmented system; returns the unique solution.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / m[r][col];
    for (auto& x : m[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(rhs[i]) != 0) throw Error(ErrorKind::inconsistent_system, "constraints are inconsistent");
  if (r < cols)
    throw Error(ErrorKind::singular_system,
                "constraints determine only " + std::to_string(r) + " of " + std::to_string(cols) +
                    " coordinates");
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace

const BasisInvariants& basis_invariants() {
  static const BasisInvariants b = build_basis();
  return b;
}

const std::vector<MultiPoly>& degree48_basis() {
  static const std::vector<MultiPoly> basis = [] {
    const auto& b = basis_invariants();
    const MultiPoly p1_8 = b.p1.pow(8);
    return std::vector<MultiPoly>{p1_8 * p1_8,  p1_8 * b.p2,  p1_8 * b.p3, b.p2 * b.p2,
                                  b.p2 * b.p3,  b.p3 * b.p3,  b.p4};
  }();
  return basis;
}

bool is_invariant(const MultiPoly& p, bool raise) {
  const CharacterRep rep = character_rep(Rational(1, 2));
  const CycPoly ref = to_cyclotomic(p);
  const std::pair<const char*, const CycMatrix*> gens[] = {{"T", &rep.T}, {"S", &rep.S}};
  for (const auto& [name, g] : gens) {
    if (poly_act(*g, p) != ref) {
      if (raise)
        throw Error(ErrorKind::invariance_failure,
                    std::string("polynomial is not fixed by ") + name +
                        " under the substitution (a,b,c) -> g(a,b,c)");
      return false;
    }
  }
  return true;
}

ConstraintSet default_constraints() {
  return {
      {{48, 0, 0}, Rational(1)},    {{46, 2, 0}, Rational(0)},    {{39, 1, 8}, Rational(0)},
      {{32, 0, 16}, Rational(0)},   {{44, 4, 0}, Rational(804)},  {{16, 0, 32}, Rational(9024)},
      {{0, 0, 48}, Rational(2048)},
  };
}

ConstraintSet parse_constraints(const std::string& text) {
  ConstraintSet cs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    Constraint c;
    std::string value;
    try {
      c.e[0] = std::stoi(first);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": bad exponent");
    }
    if (!(ls >> c.e[1] >> c.e[2] >> value))
      throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": expected 'i j k value'");
    if (c.e[0] < 0 || c.e[1] < 0 || c.e[2] < 0 || c.e[0] + c.e[1] + c.e[2] != 48)
      throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": exponents must sum to 48");
    c.value = parse_rational(value);
    for (const auto& o : cs)
      if (o.e == c.e) throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": duplicate triple");
    cs.push_back(c);
  }
  return cs;
}

const std::vector<std::pair<Exponent3, Integer>>& published_monster_coefficients() {
  static const std::vector<std::pair<Exponent3, Integer>> table = [] {
    // (c power, a power, coefficient); b power = 48 - a - c, and the a <-> b
    // mirror carries the same value.
    struct Row {
      int k;
      int i;
      const char* v;
    };
    static const Row rows[] = {
        {0, 48, "1"},
        {0, 44, "804"},
        {0, 42, "10560"},
        {0, 40, "174306"},
        {0, 38, "1615680"},
        {0, 36, "16382612"},
        {0, 34, "116707584"},
        {0, 32, "554455407"},
        {0, 30, "1786512640"},
        {0, 28, "4077522504"},
        {0, 26, "6680893824"},
        {0, 24, "7891186524"},
        {8, 37, "1536"},
        {8, 35, "155136"},
        {8, 33, "4773888"},
        {8, 31, "70699008"},
        {8, 29, "596299776"},
        {8, 27, "3100876800"},
        {8, 25, "10370684928"},
        {8, 23, "22879881216"},
        {8, 21, "33843588096"},
        {16, 30, "16512"},
        {16, 28, "1112832"},
        {16, 26, "28038528"},
        {16, 24, "325307904"},
        {16, 22, "1996192896"},
        {16, 20, "6985020672"},
        {16, 18, "14585195904"},
        {16, 16, "18596004864"},
        {24, 23, "168960"},
        {24, 21, "14306304"},
        {24, 19, "300432384"},
        {24, 17, "2446205952"},
        {24, 15, "9241528320"},
        {24, 13, "17642698752"},
        {32, 16, "9024"},
        {32, 14, "941568"},
        {32, 12, "14445312"},
        {32, 10, "63361536"},
        {32, 8, "102007680"},
        {40, 7, "135168"},
        {40, 5, "946176"},
        {48, 0, "2048"},
    };
    std::vector<std::pair<Exponent3, Integer>> out;
    for (const auto& r : rows) {
      const int j = 48 - r.k - r.i;
      out.push_back({{r.i, j, r.k}, Integer(r.v)});
      if (r.i != j) out.push_back({{j, r.i, r.k}, Integer(r.v)});
    }
    return out;
  }();
  return table;
}

MonsterSolution solve_monster_polynomial(const ConstraintSet& cs, bool check_published) {
  const auto& basis = degree48_basis();
  if (cs.size() < basis.size())
    throw Error(ErrorKind::singular_system, "need at least " + std::to_string(basis.size()) +
                                                " constraints, got " + std::to_string(cs.size()));
  std::vector<std::vector<Rational>> m;
  std::vector<Rational> rhs;
  for (const auto& c : cs) {
    std::vector<Rational> row;
    for (const auto& b : basis) row.push_back(b.coeff(c.e[0], c.e[1], c.e[2]));
    m.push_back(std::move(row));
    rhs.push_back(c.value);
  }
  MonsterSolution sol;
  sol.lambda = solve_exact(std::move(m), std::move(rhs));
  for (std::size_t i = 0; i < basis.size(); ++i) sol.P += basis[i] * sol.lambda[i];
  if (check_published) {
    const auto& table = published_monster_coefficients();
    for (const auto& [e, v] : table) {
      const Rational got = sol.P.coeff(e[0], e[1], e[2]);
      if (got != Rational(v))
        throw Error(ErrorKind::published_mismatch,
                    "m_{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                        std::to_string(e[2]) + "} = " + got.get_str() + ", printed " + v.get_str());
    }
    if (sol.P.size() != table.size())
      throw Error(ErrorKind::published_mismatch,
                  "solution has " + std::to_string(sol.P.size()) + " monomials, printed " +
                      std::to_string(table.size()));
  }
  return sol;
}

const MultiPoly& monster_polynomial() {
  static const MultiPoly P = solve_monster_polynomial(default_constraints()).P;
  return P;
}

QSeries evaluate_at_characters(const MultiPoly& p, Index trunc) {
  if (p.is_zero()) return QSeries(trunc);
  const Index work = trunc + kGrid + 24;
  const QSeries x[3] = {standard_series(FormKind::chi_ising_0, work),
                        standard_series(FormKind::chi_ising_half, work),
                        standard_series(FormKind::chi_ising_16, work)};
  int maxdeg = 0;
  for (const auto& [e, v] : p.terms()) maxdeg = std::max({maxdeg, e[0], e[1], e[2]});
  std::vector<QSeries> pw[3];
  for (int v = 0; v < 3; ++v) {
    pw[v].push_back(QSeries::one(work));
    for (int n = 1; n <= maxdeg; ++n) pw[v].push_back(pw[v].back() * x[v]);
  }
  // Group by a-power so each a^i multiplies one accumulated series.
  std::map<int, QSeries> by_a;
  for (const auto& [e, v] : p.terms()) {
    QSeries term = pw[1][static_cast<std::size_t>(e[1])] * pw[2][static_cast<std::size_t>(e[2])];
    term *= v;
    auto [it, inserted] = by_a.try_emplace(e[0], term);
    if (!inserted) it->second += term;
  }
  QSeries out(work);
  for (const auto& [i, s] : by_a) out += pw[0][static_cast<std::size_t>(i)] * s;
  if (out.trunc() < trunc)
    throw Error(ErrorKind::insufficient_truncation, "character substitution lost precision");
  return out.truncated(trunc);
}

std::string poly_to_json(const MultiPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, v] : p.terms()) j.push_back({e[0], e[1], e[2], v.get_str()});
  return j.dump();
}

std::string poly_to_text(const MultiPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, v] = *it;
    os << (first ? (sgn(v) < 0 ? "-" : "") : (sgn(v) < 0 ? " - " : " + "));
    first = false;
    const Rational a = abs(v);
    const bool constant = e[0] + e[1] + e[2] == 0;
    if (a != 1 || constant) os << a.get_str();
    const char names[] = {'a', 'b', 'c'};
    for (int t = 0; t < 3; ++t) {
      if (e[static_cast<std::size_t>(t)] == 0) continue;
      os << names[t];
      if (e[static_cast<std::size_t>(t)] > 1) os << "^" << e[static_cast<std::size_t>(t)];
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace svoa
