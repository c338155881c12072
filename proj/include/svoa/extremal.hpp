#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svoa/exact_arith.hpp"
#include "svoa/qseries.hpp"

namespace svoa {

enum class Kind { VOA, SVOA };

struct ExtremalSolution {
  Rational c;
  Kind kind = Kind::SVOA;
  int k = 0;                 // [c/24] for VOAs, [c/8] for SVOAs
  std::vector<Rational> a;   // coordinates in the chi_8 or chi_1/2 power basis
  QSeries series;            // the extremal character
  /// series / vacuum(c) = 1 + sum A[e] q^e, keyed by the exponent e.
  std::map<Rational, Rational> A;
  /// Relative exponent of the first coefficient left free by the solve.
  Rational first_free() const;
  /// True if the first two free coefficients A1, A2 satisfy A1 > 0 and
  /// A2 - A1 > 0 (integer steps for VOAs, half steps for SVOAs).
  bool growth_check() const;
};

/// Relative precision used when none is requested: enough grid units for
/// the solve (48 (k + 3)) and never less than the default window.
Index auto_precision(int k);

/// Extremal VOA character sum_{r<=k} a_r chi_8^(c/8 - 3r) for c in 8Z.
ExtremalSolution extremal_voa(const Rational& c, Index precision = 0);
/// Extremal SVOA character sum_{r<=k} a_r chi_1/2^(2c - 24r) for c in Z/2.
ExtremalSolution extremal_svoa(const Rational& c, Index precision = 0);
ExtremalSolution extremal(const Rational& c, Kind kind, Index precision = 0);

/// Lagrange-Buermann coefficient alpha_r of the vacuum character expanded
/// in powers of 1/j (VOA) or 1/j_theta (SVOA, in p = q^(1/2)).
Rational buermann_alpha(const Rational& c, int r, Kind kind);

/// Coefficients a_r of x in the basis of the given kind; throws
/// not_decomposable if a residual survives below the truncation.
std::vector<Rational> decompose_character(const QSeries& x, const Rational& c, Kind kind);

/// Rewrite sum a_r chi_1/2^(2c-24r) as sum b_i chi_1/2^(2c-16i) chi_8^i.
std::vector<Rational> to_fermi_e8_form(const std::vector<Rational>& a);

struct ShadowReport {
  Rational c;
  int s = 0;      // 2c - 24 [c/8]
  QSeries B;      // sqrt(2)-normalized expansion at the cusp 1
  Rational first_coeff;
  bool integral = true;
  bool nonneg = true;
  /// Exponent of the leading term of B, i.e. s / 24.
  Rational lead_exponent() const { return frac(s, 24); }
  /// Character of the module V(2): B itself for c in Z+1/2, B/2 for c in Z
  /// (where B is the sum of the two equal characters of V(2) and V(3)).
  QSeries module_character() const;
  /// Leading non-integral / negative coefficient, if any (exponent, value).
  std::optional<std::pair<Rational, Rational>> first_non_integral() const;
  std::optional<std::pair<Rational, Rational>> first_negative() const;
};

ShadowReport shadow(const ExtremalSolution& sol);

enum class Status { exists_known, ruled_out, conditional_L, open };
std::string_view to_string(Status s);

struct Verdict {
  Rational c;
  Status status = Status::open;
  std::string name;                    // for exists_known
  std::vector<std::string> arguments;  // subset of {"N", "G"}
  std::optional<ShadowReport> evidence;
  // Witnesses: (argument, relative exponent, coefficient).
  struct Witness {
    std::string argument;
    Rational exponent;
    Rational value;
  };
  std::vector<Witness> witnesses;
  /// For c >= 48: a_k < 0 and a_{k-1} < 0.
  std::optional<bool> top_coefficients_negative;
  std::string to_json() const;
};

inline constexpr long kDefaultClassifyMax = 56;

/// Ranks with a known extremal SVOA and its name, in increasing order.
const std::vector<std::pair<Rational, std::string>>& existence_list();
/// Ranks where only the completeness of the list for 8 <= c < 16 decides.
const std::vector<Rational>& list_argument_ranks();

Verdict classify(const Rational& c, const Rational& max = Rational(kDefaultClassifyMax));
/// All half-integral ranks from..to, ordered by rank.
std::vector<Verdict> classify_range(const Rational& from, const Rational& to,
                                    const Rational& max = Rational(kDefaultClassifyMax));

struct HighestWeightEnum {
  Rational c;
  std::map<Rational, Integer> P;  // nonzero dimensions only, keyed by weight
  Rational known_below;           // weights below this are all reported
  std::optional<Rational> mu;     // minimal weight, none if no P_i in range
  Integer at(const Rational& weight) const;
};

/// Virasoro highest-weight counts of a character x of rank c.
HighestWeightEnum hw_enumerator(const QSeries& x, const Rational& c);

/// Character of the Z2-orbifold of a lattice VOA with theta series theta.
QSeries orbifold_character(const QSeries& theta, const Rational& c);

enum class FusionCase { a, b, c };
FusionCase fusion_type(const Rational& c);
std::string_view to_string(FusionCase f);

}  // namespace svoa
