#include "svoa/modrep.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "svoa/qseries.hpp"

namespace svoa {

CycMatrix CycMatrix::identity(int n) {
  CycMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyclotomic48(1L);
  return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<Cyclotomic48>& d) {
  CycMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

bool CycMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool CycMatrix::is_symmetric() const { return *this == transpose(); }

bool CycMatrix::is_permutation() const {
  const Cyclotomic48 one(1L);
  for (int i = 0; i < n_; ++i) {
    int row = 0;
    int col = 0;
    for (int j = 0; j < n_; ++j) {
      const auto& a = (*this)(i, j);
      const auto& b = (*this)(j, i);
      if (!a.is_zero()) {
        if (a != one) return false;
        ++row;
      }
      if (!b.is_zero()) ++col;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CycMatrix CycMatrix::inverse() const {
  CycMatrix a = *this;
  CycMatrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    while (pivot < n_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) throw Error(ErrorKind::singular_system, "matrix is not invertible");
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Cyclotomic48 p = a(col, col).inverse();
    for (int j = 0; j < n_; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (int i = 0; i < n_; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Cyclotomic48 f = a(i, col);
      for (int j = 0; j < n_; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

CycMatrix CycMatrix::pow(long k) const {
  CycMatrix base = k < 0 ? inverse() : *this;
  CycMatrix out = identity(n_);
  for (long e = std::labs(k); e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  const int n = a.n_;
  CycMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const auto& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

std::size_t CycMatrix::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& x : e_) h = h * 1000003u ^ x.hash();
  return h;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

CharacterRep character_rep(const Rational& c) {
  const Rational twice = c * 2;
  if (!is_integer(twice))
    throw Error(ErrorKind::non_half_integer_rank, "rank " + to_string(c) + " is not in Z/2");
  // Phases on the 1/48 grid: exp(2 pi i (-c/24)) = zeta^(-2c), the
  // weight-1/2 sector adds 24, the remaining sector adds 48 c/8 = 6c.
  const long base = -twice.get_num().get_si();
  const Rational half(1, 2);
  CharacterRep rep;
  if (!is_integer(c)) {
    const long rest = base + 3 * twice.get_num().get_si();
    rep.T = CycMatrix::diagonal({zeta_pow(base), zeta_pow(base + 24), zeta_pow(rest)});
    const Cyclotomic48 r = Cyclotomic48::sqrt2() * Cyclotomic48(half);
    CycMatrix S(3);
    S(0, 0) = half;
    S(0, 1) = half;
    S(0, 2) = r;
    S(1, 0) = half;
    S(1, 1) = half;
    S(1, 2) = -r;
    S(2, 0) = r;
    S(2, 1) = -r;
    rep.S = S;
    return rep;
  }
  const long ci = c.get_num().get_si();
  const long rest = base + 6 * ci;
  rep.T = CycMatrix::diagonal({zeta_pow(base), zeta_pow(base + 24), zeta_pow(rest), zeta_pow(rest)});
  // The sign pattern of the lower block is fixed by requiring S^2 = (ST)^3:
  // it flips with c mod 4 (positive for c = 1, 2 mod 4).
  const long m = ((ci % 4) + 4) % 4;
  const long s = (m == 1 || m == 2) ? 1 : -1;
  Cyclotomic48 x = (ci % 2 != 0) ? Cyclotomic48::imag_unit() * Cyclotomic48(half) : Cyclotomic48(half);
  if (s < 0) x = -x;
  CycMatrix S(4);
  for (int j = 0; j < 4; ++j) S(0, j) = half;
  S(1, 0) = half;
  S(1, 1) = half;
  S(1, 2) = Cyclotomic48(-half);
  S(1, 3) = Cyclotomic48(-half);
  S(2, 0) = half;
  S(2, 1) = Cyclotomic48(-half);
  S(2, 2) = -x;
  S(2, 3) = x;
  S(3, 0) = half;
  S(3, 1) = Cyclotomic48(-half);
  S(3, 2) = x;
  S(3, 3) = -x;
  rep.S = S;
  return rep;
}

RelationCheck check_relations(const CharacterRep& rep) {
  const int n = rep.S.dim();
  const CycMatrix id = CycMatrix::identity(n);
  const CycMatrix s2 = rep.S * rep.S;
  const CycMatrix st = rep.S * rep.T;
  const CycMatrix st3 = st * st * st;
  RelationCheck out;
  out.s4_identity = s2 * s2 == id;
  out.s2_equals_st3 = s2 == st3;
  out.st6_identity = st3 * st3 == id;
  return out;
}

namespace {

struct MatrixHash {
  std::size_t operator()(const CycMatrix& m) const { return m.hash(); }
};

}  // namespace

bool MatrixGroup::contains(const CycMatrix& m) const {
  for (const auto& e : elements)
    if (e == m) return true;
  return false;
}

MatrixGroup generate_group(const std::vector<CycMatrix>& gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorKind::out_of_range, "no generators");
  MatrixGroup g;
  g.generators = gens;
  std::unordered_set<CycMatrix, MatrixHash> seen;
  const CycMatrix id = CycMatrix::identity(gens.front().dim());
  seen.insert(id);
  g.elements.push_back(id);
  // In a finite group the monoid generated is already the group.
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const auto& s : gens) {
      CycMatrix next = g.elements[head] * s;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::closure_cap_exceeded,
                      "group closure exceeded " + std::to_string(cap) + " elements");
        g.elements.push_back(std::move(next));
      }
    }
  }
  return g;
}

namespace {

Cyclotomic48 determinant(const CycMatrix& m, const std::vector<int>& idx) {
  const std::size_t k = idx.size();
  if (k == 1) return m(idx[0], idx[0]);
  // Laplace expansion along the first row of the principal submatrix.
  Cyclotomic48 det(0L);
  std::vector<int> rows(idx.begin() + 1, idx.end());
  for (std::size_t j = 0; j < k; ++j) {
    const auto& a = m(idx[0], idx[j]);
    if (a.is_zero()) continue;
    std::vector<int> cols;
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) cols.push_back(idx[t]);
    // Minor with distinct row and column index sets.
    CycMatrix sub(static_cast<int>(k - 1));
    for (std::size_t r = 0; r < k - 1; ++r)
      for (std::size_t s = 0; s < k - 1; ++s)
        sub(static_cast<int>(r), static_cast<int>(s)) = m(rows[r], cols[s]);
    std::vector<int> all(k - 1);
    for (std::size_t t = 0; t < k - 1; ++t) all[t] = static_cast<int>(t);
    Cyclotomic48 term = a * determinant(sub, all);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

// Elementary symmetric functions of the eigenvalues: sums of principal minors.
std::vector<Cyclotomic48> char_coefficients(const CycMatrix& m) {
  const int n = m.dim();
  std::vector<Cyclotomic48> e(static_cast<std::size_t>(n) + 1, Cyclotomic48(0L));
  e[0] = Cyclotomic48(1L);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    e[idx.size()] += determinant(m, idx);
  }
  return e;
}

struct VecHash {
  std::size_t operator()(const std::vector<Cyclotomic48>& v) const {
    std::size_t h = 0;
    for (const auto& x : v) h = h * 31u ^ x.hash();
    return h;
  }
};

}  // namespace

std::vector<Rational> molien(const MatrixGroup& g, int maxdeg) {
  if (maxdeg < 0) return {};
  // det(1 - g t) depends only on the characteristic polynomial, so sum over
  // classes of equal coefficients.
  std::unordered_map<std::vector<Cyclotomic48>, long, VecHash> classes;
  for (const auto& m : g.elements) ++classes[char_coefficients(m)];
  const Index trunc = maxdeg + 1;
  CycSeries total(trunc);
  for (const auto& [e, count] : classes) {
    CycSeries d(trunc);
    for (std::size_t k = 0; k < e.size(); ++k) {
      Cyclotomic48 v = e[k];
      if (k % 2) v = -v;
      d.set(static_cast<Index>(k), v);
    }
    CycSeries inv = series_inv(d);
    inv *= Cyclotomic48(count);
    total += inv;
  }
  std::vector<Rational> out;
  const Rational order(static_cast<long>(g.order()));
  for (Index k = 0; k < trunc; ++k) {
    const Cyclotomic48 v = total.coeff(k);
    if (!v.is_rational())
      throw Error(ErrorKind::non_rational, "Molien coefficient is not rational");
    out.push_back(v.to_rational() / order);
  }
  return out;
}

bool FusionTensor::is_commutative() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if ((*this)(i, j, k) != (*this)(j, i, k)) return false;
  return true;
}

bool FusionTensor::has_unit() const {
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k)
      if ((*this)(0, j, k) != (j == k ? 1 : 0)) return false;
  return true;
}

std::string FusionTensor::ring_name() const {
  if (!has_unit() || !is_commutative()) return "other";
  if (n_ == 1) return "trivial";
  // Group rings: every product of two simples is a single simple.
  bool group_like = true;
  std::vector<int> mult(static_cast<std::size_t>(n_ * n_), -1);
  for (int i = 0; i < n_ && group_like; ++i) {
    for (int j = 0; j < n_; ++j) {
      int target = -1;
      long total = 0;
      for (int k = 0; k < n_; ++k) {
        total += (*this)(i, j, k);
        if ((*this)(i, j, k) == 1) target = k;
      }
      if (total != 1 || target < 0) {
        group_like = false;
        break;
      }
      mult[static_cast<std::size_t>(i * n_ + j)] = target;
    }
  }
  if (group_like) {
    int max_order = 1;
    for (int i = 0; i < n_; ++i) {
      int x = i;
      int ord = 1;
      while (x != 0) {
        x = mult[static_cast<std::size_t>(x * n_ + i)];
        ++ord;
        if (ord > n_) return "other";
      }
      max_order = std::max(max_order, ord);
    }
    if (n_ == 2) return "Z/2";
    if (n_ == 4 && max_order == 4) return "Z/4";
    if (n_ == 4 && max_order == 2) return "Z/2xZ/2";
    return "other";
  }
  // Ising: 1, eps, sigma with sigma^2 = 1 + eps, sigma eps = sigma, eps^2 = 1.
  if (n_ == 3) {
    const auto& N = *this;
    for (int e = 1; e <= 2; ++e) {
      const int s = 3 - e;
      const bool ok = N(e, e, 0) == 1 && N(e, e, e) == 0 && N(e, e, s) == 0 && N(s, e, s) == 1 &&
                      N(s, e, 0) == 0 && N(s, e, e) == 0 && N(s, s, 0) == 1 && N(s, s, e) == 1 &&
                      N(s, s, s) == 0;
      if (ok) return "Ising";
    }
  }
  return "other";
}

std::string FusionTensor::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      os << "M" << i << " x M" << j << " =";
      bool first = true;
      for (int k = 0; k < n_; ++k) {
        const long v = (*this)(i, j, k);
        if (v == 0) continue;
        os << (first ? " " : " + ");
        if (v != 1) os << v << " ";
        os << "M" << k;
        first = false;
      }
      if (first) os << " 0";
      os << "\n";
    }
  }
  return os.str();
}

FusionTensor verlinde(const CycMatrix& S) {
  const int n = S.dim();
  const CycMatrix Sinv = S.inverse();
  std::vector<Cyclotomic48> inv_first(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    if (S(0, m).is_zero()) throw Error(ErrorKind::division_by_zero, "S has a zero in its first row");
    inv_first[static_cast<std::size_t>(m)] = S(0, m).inverse();
  }
  FusionTensor N(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Cyclotomic48 acc(0L);
        for (int m = 0; m < n; ++m)
          acc += S(i, m) * S(j, m) * Sinv(m, k) * inv_first[static_cast<std::size_t>(m)];
        if (!acc.is_rational() || !is_integer(acc.to_rational()) || sgn(acc.to_rational()) < 0)
          throw Error(ErrorKind::non_integral_fusion,
                      "N_{" + std::to_string(i) + std::to_string(j) + "}^" + std::to_string(k) +
                          " = " + acc.to_string());
        N(i, j, k) = acc.to_rational().get_num().get_si();
      }
    }
  }
  return N;
}

}  // namespace svoa
