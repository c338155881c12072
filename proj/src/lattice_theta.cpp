#include "svoa/lattice_theta.hpp"

#include "json.hpp"
#include <map>
#include <regex>

#include "svoa/error.hpp"

namespace svoa {
namespace {

RationalMatrix zero_matrix(int n) {
  return RationalMatrix(static_cast<std::size_t>(n), RationalVector(static_cast<std::size_t>(n)));
}

RationalMatrix gram_of(const RationalMatrix& basis) {
  const std::size_t n = basis.size();
  RationalMatrix g = zero_matrix(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < basis[i].size(); ++k) g[i][j] += basis[i][k] * basis[j][k];
  return g;
}

/// Solves M^T x = v, i.e. writes v as a combination of the rows of M.
RationalVector coordinates(const RationalMatrix& rows, const RationalVector& v) {
  const std::size_t n = rows.size();
  RationalMatrix a(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[j][i];
    a[i][n] = v[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a[p][col]) == 0) ++p;
    if (p == n) throw Error(ErrorKind::singular_system, "degenerate lattice basis");
    std::swap(a[p], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

/// Column i of the inverse: the fundamental weight dual to basis vector i.
RationalVector dual_vector(const RationalMatrix& gram, int i) {
  RationalVector e(gram.size());
  e[static_cast<std::size_t>(i)] = 1;
  return coordinates(gram, e);  // gram is symmetric
}

RationalMatrix cartan_chain(int n) {
  RationalMatrix g = zero_matrix(n);
  for (int i = 0; i < n; ++i) {
    g[i][i] = 2;
    if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = -1;
  }
  return g;
}

/// E_n for n = 7, 8 in Bourbaki labelling: chain 1-3-4-...-n with node 2 on 4.
RationalMatrix cartan_e(int n) {
  RationalMatrix g = zero_matrix(n);
  auto link = [&](int a, int b) { g[a - 1][b - 1] = g[b - 1][a - 1] = -1; };
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  link(1, 3);
  link(2, 4);
  for (int i = 3; i < n; ++i) link(i, i + 1);
  return g;
}

RationalMatrix dn_basis(int n) {
  RationalMatrix b = zero_matrix(n);
  for (int i = 0; i + 1 < n; ++i) {
    b[i][i] = 1;
    b[i][i + 1] = -1;
  }
  b[n - 1][n - 2] = 1;
  b[n - 1][n - 1] = 1;
  return b;
}

/// Glue class [k] of D_n in ambient coordinates.
RationalVector dn_glue_ambient(int n, int k) {
  RationalVector v(static_cast<std::size_t>(n));
  if (k == 2) {
    v.back() = 1;
  } else if (k == 1 || k == 3) {
    for (auto& x : v) x = frac(1, 2);
    if (k == 3) v.back() = frac(-1, 2);
  }
  return v;
}

RationalMatrix block_sum(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  RationalMatrix g = zero_matrix(static_cast<int>(n + m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = a[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b[i][j];
  return g;
}

Lattice make(std::string name, RationalMatrix gram, std::vector<RationalVector> glue = {}) {
  Lattice L;
  L.name = std::move(name);
  L.dim = static_cast<int>(gram.size());
  L.glue.push_back(RationalVector(gram.size()));
  for (auto& g : glue) L.glue.push_back(std::move(g));
  L.gram = std::move(gram);
  return L;
}

Lattice zn(int n) {
  RationalMatrix g = zero_matrix(n);
  for (int i = 0; i < n; ++i) g[i][i] = 1;
  return make("Zn(" + std::to_string(n) + ")", std::move(g));
}

Lattice dn(int n, bool plus) {
  if (n < 2) throw Error(ErrorKind::out_of_range, "D_n needs n >= 2");
  if (plus && n % 2 != 0) throw Error(ErrorKind::out_of_range, "D_n^+ needs even n");
  const RationalMatrix b = dn_basis(n);
  std::vector<RationalVector> glue;
  if (plus) glue.push_back(coordinates(b, dn_glue_ambient(n, 1)));
  return make((plus ? "Dn_plus(" : "Dn(") + std::to_string(n) + ")", gram_of(b), std::move(glue));
}

int e7_minuscule_node(const RationalMatrix& e7) {
  for (int i = 0; i < 7; ++i)
    if (dual_vector(e7, i)[static_cast<std::size_t>(i)] == frac(3, 2)) return i;
  throw Error(ErrorKind::singular_system, "no minuscule weight for E7");
}

struct Ldl {
  RationalVector d;
  RationalMatrix u;  // unit upper triangular: gram = U^T diag(d) U
};

Ldl ldl(const RationalMatrix& g) {
  const std::size_t n = g.size();
  Ldl f{RationalVector(n), zero_matrix(static_cast<int>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    Rational di = g[i][i];
    for (std::size_t k = 0; k < i; ++k) di -= f.d[k] * f.u[k][i] * f.u[k][i];
    if (sgn(di) <= 0) throw Error(ErrorKind::out_of_range, "Gram matrix is not positive definite");
    f.d[i] = di;
    f.u[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = g[i][j];
      for (std::size_t k = 0; k < i; ++k) s -= f.d[k] * f.u[k][i] * f.u[k][j];
      f.u[i][j] = s / di;
    }
  }
  return f;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// The search in integers. With X = D x and w_i = sum_{j>=i} U_ij X_j,
/// M Q(x) = sum_i c_i w_i^2 where U = den_i u and c_i = M d_i / (den_i D)^2.
struct ScaledForm {
  Integer D, M, bound;  // bound = floor(M * norm bound)
  std::vector<Integer> den, c;
  std::vector<std::vector<Integer>> U;
  std::vector<std::vector<Integer>> glue;  // D g for every coset
};

ScaledForm scale(const Ldl& f, const std::vector<RationalVector>& glue, const Rational& bound) {
  const std::size_t n = f.d.size();
  ScaledForm s;
  s.D = 1;
  for (const auto& g : glue)
    for (const auto& v : g) s.D = lcm_of(s.D, v.get_den());
  s.den.assign(n, Integer(1));
  s.U.assign(n, std::vector<Integer>(n));
  s.M = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) s.den[i] = lcm_of(s.den[i], f.u[i][j].get_den());
    for (std::size_t j = i; j < n; ++j) s.U[i][j] = Rational(f.u[i][j] * s.den[i]).get_num();
    const Integer scale_i = s.den[i] * s.D;
    s.M = lcm_of(s.M, Integer(scale_i * scale_i * f.d[i].get_den()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Integer scale_i = s.den[i] * s.D;
    s.c.push_back(Rational(f.d[i] * s.M / (scale_i * scale_i)).get_num());
  }
  s.bound = floor_of(bound * s.M);
  for (const auto& g : glue) {
    std::vector<Integer> X;
    for (const auto& v : g) X.push_back(Rational(v * s.D).get_num());
    s.glue.push_back(std::move(X));
  }
  return s;
}

/// True if every intermediate of the search fits comfortably in 64 bits.
bool fits_int64(const ScaledForm& s) {
  const Integer limit = Integer(1) << 60;
  Integer worst = s.bound;
  for (std::size_t i = 0; i < s.c.size(); ++i) {
    const Integer step = s.den[i] * s.D;
    const Integer over = s.c[i] * step * step;
    if (over > limit) return false;
    worst += over;
    Integer row = 0;
    for (const auto& u : s.U[i]) row += abs(u);
    if (row * s.D * 64 > Integer(1) << 30) return false;
  }
  return 4 * worst < limit;
}

template <class Int>
Int convert(const Integer& z) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return z;
  } else {
    return static_cast<Int>(z.get_si());
  }
}

template <class Int>
Int floor_div(const Int& a, const Int& b) {  // b > 0
  if constexpr (std::is_same_v<Int, Integer>) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  } else {
    Int q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
  }
}

template <class Int>
class Enumerator {
 public:
  Enumerator(const ScaledForm& s, std::uint64_t budget) : n_(s.c.size()), budget_(budget) {
    D_ = convert<Int>(s.D);
    bound_ = convert<Int>(s.bound);
    for (std::size_t i = 0; i < n_; ++i) {
      den_.push_back(convert<Int>(s.den[i]));
      c_.push_back(convert<Int>(s.c[i]));
      std::vector<Int> row;
      for (const auto& u : s.U[i]) row.push_back(convert<Int>(u));
      U_.push_back(std::move(row));
    }
    X_.assign(n_, Int(0));
  }

  /// Adds the partial-norm totals M Q(x) of all vectors in the coset.
  void run(const std::vector<Integer>& glue, std::map<Integer, std::uint64_t>& totals) {
    totals_ = &totals;
    glue_.clear();
    for (const auto& g : glue) glue_.push_back(convert<Int>(g));
    if (n_ == 0) {
      ++totals[Integer(0)];
      return;
    }
    descend(n_ - 1, Int(0));
  }

 private:
  void descend(std::size_t i, const Int& partial) {
    Int s = 0;
    for (std::size_t j = i + 1; j < n_; ++j) s += U_[i][j] * X_[j];
    const Int room = bound_ - partial;
    const Int d = den_[i];
    // X_i = g_i + D t; w = d X_i + s is smallest near X_i = -s / d.
    const Int t0 = floor_div<Int>(Int(-s - d * glue_[i]), Int(d * D_));
    for (int dir : {-1, 1}) {
      for (Int t = dir < 0 ? t0 : Int(t0 + 1);; t += dir) {
        if (++nodes_ > budget_)
          throw Error(ErrorKind::enumeration_budget,
                      "more than " + std::to_string(budget_) + " search nodes");
        X_[i] = glue_[i] + D_ * t;
        const Int w = d * X_[i] + s;
        const Int term = c_[i] * w * w;
        if (term > room) break;
        if (i == 0) {
          ++(*totals_)[to_integer(Int(partial + term))];
        } else {
          descend(i - 1, Int(partial + term));
        }
      }
    }
  }

  static Integer to_integer(const Int& v) {
    if constexpr (std::is_same_v<Int, Integer>) {
      return v;
    } else {
      return Integer(static_cast<long>(v));
    }
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Int D_, bound_;
  std::vector<Int> den_, c_, glue_, X_;
  std::vector<std::vector<Int>> U_;
  std::map<Integer, std::uint64_t>* totals_ = nullptr;
};

int parse_dim(const std::string& s) {
  const long n = std::stol(s);
  if (n < 1 || n > 64) throw Error(ErrorKind::out_of_range, "lattice dimension " + s);
  return static_cast<int>(n);
}

}  // namespace

Rational Lattice::inner(const RationalVector& x, const RationalVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j) s += x[i] * gram[i][j] * y[j];
  return s;
}

Rational Lattice::determinant() const {
  Rational det = 1;
  for (const auto& di : ldl(gram).d) det *= di;
  return det;
}

bool Lattice::is_self_dual() const {
  if (formula_backed) return true;
  for (const auto& g : glue) {
    for (const auto& h : glue)
      if (!is_integer(inner(g, h))) return false;
    for (std::size_t i = 0; i < gram.size(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < gram.size(); ++j) s += gram[i][j] * g[j];
      if (!is_integer(s)) return false;
    }
  }
  const Rational index(static_cast<long>(glue.size()));
  return determinant() == index * index;
}

const std::vector<std::string>& lattice_catalog_names() {
  static const std::vector<std::string> names = {"Zn(n)", "Dn(n)", "Dn_plus(n)", "E8", "E7",
                                                 "E7E7_plus", "A15_plus", "D12_plus", "Leech"};
  return names;
}

Lattice lattice_catalog(std::string_view name) {
  const std::string s(name);
  static const std::regex call(R"(^(Zn|Dn|Dn_plus)\((\d+)\)$)");
  static const std::regex shortform(R"(^(Z|D)(\d+)(_plus)?$)");
  std::smatch m;
  if (std::regex_match(s, m, call)) {
    const int n = parse_dim(m[2]);
    if (m[1] == "Zn") return zn(n);
    return dn(n, m[1] == "Dn_plus");
  }
  if (s == "E8") return make("E8", cartan_e(8));
  if (s == "E7") return make("E7", cartan_e(7));
  if (s == "E7E7_plus") {
    const RationalMatrix e7 = cartan_e(7);
    const RationalVector w = dual_vector(e7, e7_minuscule_node(e7));
    RationalVector g = w;
    g.insert(g.end(), w.begin(), w.end());
    return make("E7E7_plus", block_sum(e7, e7), {g});
  }
  if (s == "A15_plus") {
    const RationalMatrix a15 = cartan_chain(15);
    return make("A15_plus", a15, {dual_vector(a15, 3), dual_vector(a15, 7), dual_vector(a15, 11)});
  }
  if (s == "Leech") {
    Lattice L;
    L.name = "Leech";
    L.dim = 24;
    L.formula_backed = true;
    return L;
  }
  if (std::regex_match(s, m, shortform)) {
    const int n = parse_dim(m[2]);
    if (m[1] == "Z" && !m[3].matched) return zn(n);
    if (m[1] == "D") {
      Lattice L = dn(n, m[3].matched);
      if (s == "D12_plus") L.name = s;
      return L;
    }
  }
  throw Error(ErrorKind::unknown_name, "unknown lattice '" + s + "'");
}

QSeries theta_series(const Lattice& L, Index trunc, std::uint64_t budget) {
  if (L.formula_backed) {
    const QSeries e4 = standard_series(FormKind::E4, trunc);
    return series_pow(e4, 3) - standard_series(FormKind::delta, trunc) * Rational(720);
  }
  QSeries out(trunc);
  if (trunc <= 0) return out;
  const ScaledForm form = scale(ldl(L.gram), L.glue, frac(trunc - 1, 24));
  std::map<Integer, std::uint64_t> totals;
  if (fits_int64(form)) {
    Enumerator<std::int64_t> e(form, budget);
    for (const auto& g : form.glue) e.run(g, totals);
  } else {
    Enumerator<Integer> e(form, budget);
    for (const auto& g : form.glue) e.run(g, totals);
  }
  for (const auto& [total, count] : totals) {
    Rational index(total * 24, form.M);
    index.canonicalize();
    if (!is_integer(index)) throw Error(ErrorKind::off_grid, "vector norm " + to_string(index / 24));
    out.add_to(index.get_num().get_si(), Rational(Integer(static_cast<unsigned long>(count))));
  }
  return out;
}

QSeries svoa_character(const Lattice& L, Index trunc) {
  const Index n = L.dim;
  const QSeries theta = theta_series(L, trunc + 2 * n);
  const QSeries eta_n = series_pow(standard_series(FormKind::eta, trunc + 4 * n), n);
  return (theta * series_inv(eta_n)).truncated(trunc);
}

std::string lattice_to_json(const Lattice& L) {
  nlohmann::ordered_json j;
  j["name"] = L.name;
  j["dim"] = L.dim;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : L.gram) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& v : r) row.push_back(to_string(v));
    rows.push_back(row);
  }
  j["gram"] = rows;
  auto glue = nlohmann::ordered_json::array();
  for (const auto& g : L.glue) {
    auto vec = nlohmann::ordered_json::array();
    for (const auto& v : g) vec.push_back(to_string(v));
    glue.push_back(vec);
  }
  j["glue"] = glue;
  j["formula_backed"] = L.formula_backed;
  return j.dump();
}

}  // namespace svoa
