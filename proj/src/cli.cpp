#include "svoa/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "svoa/babymonster.hpp"
#include "svoa/error.hpp"
#include "svoa/extremal.hpp"
#include "svoa/invariants.hpp"
#include "svoa/lattice_theta.hpp"
#include "svoa/modrep.hpp"
#include "svoa/qseries.hpp"

namespace svoa {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::optional<Index> order;
  bool json() const { return format == "json"; }
};

Rational rank_of(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError("'" + text + "' is not a rational number");
  }
}

Index parse_order(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
}

/// --order, then SVOA_ORDER, then the command's own default.
Index order_or(const Options& o, Index fallback) {
  if (o.order) return *o.order;
  if (const char* env = std::getenv("SVOA_ORDER")) return parse_order(env, "SVOA_ORDER");
  return fallback;
}

/// Extremal solves take a relative precision; 0 selects auto_precision.
Index precision_of(const Options& o) { return order_or(o, 0); }

json parsed(const std::string& text) { return json::parse(text); }

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string rationals_text(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + to_string(x);
  return s;
}

/// q^(c/24) x, i.e. the series with the vacuum exponent removed.
QSeries normalized(const QSeries& x, const Rational& c) { return x.shifted(grid_index(c / 24)); }

/// The first n terms; the O(...) bound marks the next known exponent.
QSeries first_terms(const QSeries& x, std::size_t n) {
  if (x.size() <= n) return x;
  auto it = x.terms().begin();
  std::advance(it, static_cast<long>(n));
  return x.truncated(it->first);
}

/// Terms with relative exponent below `below`.
QSeries below_exponent(const QSeries& x, const Rational& c, const Rational& below) {
  return x.truncated(grid_index(below - c / 24));
}

std::string kind_name(Kind k) { return k == Kind::VOA ? "VOA" : "SVOA"; }

json solution_json(const ExtremalSolution& sol) {
  json j;
  j["rank"] = to_string(sol.c);
  j["kind"] = kind_name(sol.kind);
  j["k"] = sol.k;
  j["a"] = rationals_json(sol.a);
  if (sol.kind == Kind::SVOA) j["fermi_e8"] = rationals_json(to_fermi_e8_form(sol.a));
  j["first_free"] = to_string(sol.first_free());
  j["growth_check"] = sol.growth_check();
  j["series"] = parsed(to_json(sol.series));
  return j;
}

void print_solution(std::ostream& out, const ExtremalSolution& sol) {
  out << "rank " << to_string(sol.c) << " (" << kind_name(sol.kind) << "), k = " << sol.k
      << "\n";
  out << "a = " << rationals_text(sol.a) << "\n";
  if (sol.kind == Kind::SVOA) out << "fermi-e8 form b = " << rationals_text(to_fermi_e8_form(sol.a)) << "\n";
  out << "chi = " << to_text_normalized(sol.series, -sol.c / 24) << "\n";
  out << "first free exponent " << to_string(sol.first_free())
      << ", growth check " << (sol.growth_check() ? "holds" : "fails") << "\n";
}

json shadow_json(const ShadowReport& r) {
  json j;
  j["rank"] = to_string(r.c);
  j["s"] = r.s;
  j["lead_exponent"] = to_string(r.lead_exponent());
  j["first_coeff"] = to_string(r.first_coeff);
  j["integral"] = r.integral;
  j["nonneg"] = r.nonneg;
  j["B"] = parsed(to_json(r.B));
  j["module_character"] = parsed(to_json(r.module_character()));
  return j;
}

void print_shadow(std::ostream& out, const ShadowReport& r) {
  out << "rank " << to_string(r.c) << ", s = " << r.s << "\n";
  out << "B = " << to_text_normalized(r.B, -r.c / 24) << "\n";
  out << "chi_V(2) = " << to_text_normalized(r.module_character(), -r.c / 24) << "\n";
  out << "first coefficient " << to_string(r.first_coeff) << ", integral "
      << (r.integral ? "yes" : "no") << ", nonnegative " << (r.nonneg ? "yes" : "no") << "\n";
}

std::string arguments_text(const Verdict& v) {
  switch (v.status) {
    case Status::exists_known: return "E";
    case Status::conditional_L: return "L";
    case Status::open: return "?";
    case Status::ruled_out: break;
  }
  std::string s;
  for (const auto& a : v.arguments) s += (s.empty() ? "" : ",") + a;
  return s;
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "c = " << to_string(v.c) << ": " << to_string(v.status);
  if (v.status == Status::exists_known) out << " " << v.name;
  if (v.status == Status::ruled_out) out << " " << arguments_text(v);
  for (const auto& w : v.witnesses)
    out << " [" << w.argument << ": " << to_string(w.value) << " at q^(" << to_string(w.exponent)
        << ")]";
  if (v.top_coefficients_negative)
    out << " top coefficients negative: " << (*v.top_coefficients_negative ? "yes" : "no");
  out << "\n";
}

// Regenerated tables.

const std::vector<long> kVoaTableRanks = {8, 16, 24, 32, 40, 48, 72};

bool in_existence_list(const Rational& c) {
  for (const auto& [rank, name] : existence_list())
    if (rank == c) return true;
  return false;
}

bool only_integral_exponents(const QSeries& x, const Rational& c) {
  const QSeries y = normalized(x, c);
  for (const auto& [i, v] : y.terms())
    if (i % kGrid != 0) return false;
  return true;
}

void table_voa(std::ostream& out, const Options& o) {
  json rows = json::array();
  for (long n : kVoaTableRanks) {
    const Rational c(n);
    const ExtremalSolution sol = extremal_voa(c, precision_of(o));
    const QSeries chi = below_exponent(sol.series, c, Rational(7));
    if (o.json()) {
      rows.push_back({{"rank", to_string(c)}, {"series", parsed(to_json(chi))}});
    } else {
      out << "c = " << n << ": " << to_text_normalized(chi, -c / 24) << "\n";
    }
  }
  if (o.json()) out << rows.dump() << "\n";
}

void table_svoa(std::ostream& out, const Options& o) {
  json rows = json::array();
  for (const auto& [c, name] : existence_list()) {
    const ExtremalSolution sol = extremal_svoa(c, std::max<Index>(precision_of(o), 7 * kGrid));
    const QSeries chi = below_exponent(sol.series, c, Rational(6));
    const bool voa = only_integral_exponents(sol.series, c);
    std::optional<QSeries> second;
    if (!voa) {
      const QSeries m = shadow(sol).module_character();
      second = below_exponent(m, c, Rational(6));
    }
    if (o.json()) {
      json row = {{"rank", to_string(c)}, {"name", name}, {"series", parsed(to_json(chi))}};
      row["module_character"] = second ? parsed(to_json(*second)) : json(nullptr);
      rows.push_back(row);
    } else {
      out << "c = " << to_string(c) << " " << name << "\n";
      out << "  " << to_text_normalized(chi, -c / 24) << "\n";
      out << "  " << (second ? to_text_normalized(*second, -c / 24) : std::string("VOA")) << "\n";
    }
  }
  if (o.json()) out << rows.dump() << "\n";
}

void table_shadow(std::ostream& out, const Options& o) {
  json rows = json::array();
  for (long n = 17; n <= 46; ++n) {
    const Rational c = frac(n, 2);
    if (in_existence_list(c)) continue;
    const Verdict v = classify(c);
    const ExtremalSolution sol = extremal_svoa(c, precision_of(o));
    const QSeries chi = below_exponent(sol.series, c, frac(7, 2));
    const QSeries head = first_terms(normalized(v.evidence->B, c), 3);
    if (o.json()) {
      rows.push_back({{"rank", to_string(c)},
                      {"character", parsed(to_json(chi))},
                      {"shadow", parsed(to_json(head.shifted(-grid_index(c / 24))))},
                      {"arguments", arguments_text(v)}});
    } else {
      out << "c = " << to_string(c) << " | " << to_text(normalized(chi, c)) << " | "
          << to_text(head) << " | " << arguments_text(v) << "\n";
    }
  }
  if (o.json()) out << rows.dump() << "\n";
}

void table_shadow_large(std::ostream& out, const Options& o) {
  json rows = json::array();
  for (long n = 49; n <= 95; ++n) {
    const Rational c = frac(n, 2);
    const Verdict v = classify(c);
    const std::string b = to_string(v.evidence->first_coeff);
    if (o.json()) {
      rows.push_back({{"rank", to_string(c)}, {"B*", b}, {"arguments", arguments_text(v)}});
    } else {
      out << "c = " << to_string(c) << ": B* = " << b << " " << arguments_text(v) << "\n";
    }
  }
  if (o.json()) out << rows.dump() << "\n";
}

std::string molien_text(const std::vector<Rational>& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < m.size(); ++d) {
    if (sgn(m[d]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0 || m[d] != 1) os << to_string(m[d]) << (d == 0 ? "" : " ");
    if (d == 1) os << "t";
    if (d > 1) os << "t^" << d;
  }
  if (first) os << "0";
  os << " + O(t^" << m.size() << ")";
  return os.str();
}

json fusion_json(const FusionTensor& N) {
  json a = json::array();
  for (int i = 0; i < N.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < N.size(); ++j) {
      json col = json::array();
      for (int k = 0; k < N.size(); ++k) col.push_back(N(i, j, k));
      row.push_back(col);
    }
    a.push_back(row);
  }
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit_series(std::ostream& out, const Options& o, const QSeries& s) {
  out << (o.json() ? to_json(s) : to_text(s)) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characters of self-dual vertex operator superalgebras", "svoa"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string order_text;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--order", order_text,
                 "Truncation: grid index bound (1/48 units); overrides SVOA_ORDER");

  std::string series_name, series_rank = "0", series_weight = "0";
  auto* series = app.add_subcommand("series", "Expansion of a standard series");
  series->add_option("name", series_name, "Series name, e.g. j, E4, chi_half, vacuum")->required();
  series->add_option("--rank", series_rank, "Rank c for vacuum and generic_module")->capture_default_str();
  series->add_option("--weight", series_weight, "Weight h for generic_module")->capture_default_str();

  std::string rank;
  auto* voa = app.add_subcommand("extremal-voa", "Extremal VOA character (c in 8Z)");
  voa->add_option("--rank", rank, "Rank c")->required();
  auto* svoa_cmd = app.add_subcommand("extremal-svoa", "Extremal SVOA character (c in Z/2)");
  svoa_cmd->add_option("--rank", rank, "Rank c")->required();
  auto* shadow_cmd = app.add_subcommand("shadow", "Expansion of the extremal character at the cusp 1");
  shadow_cmd->add_option("--rank", rank, "Rank c")->required();

  std::string from = "0", to = "24", max = std::to_string(kDefaultClassifyMax);
  auto* classify_cmd = app.add_subcommand("classify", "Existence verdicts for a range of ranks");
  classify_cmd->add_option("--from", from, "First rank")->capture_default_str();
  classify_cmd->add_option("--to", to, "Last rank")->capture_default_str();
  classify_cmd->add_option("--max", max, "Largest admissible rank")->capture_default_str();

  std::string constraints_path;
  bool check_published = false;
  auto* monster = app.add_subcommand("monster-poly", "Solve for the moonshine weight enumerator");
  monster->add_option("--constraints", constraints_path, "File with 'i j k value' lines")
      ->check(CLI::ExistingFile);
  monster->add_flag("--check-published", check_published,
                    "Compare with the published coefficients even for custom constraints");

  int sector = -1;
  auto* baby = app.add_subcommand("baby", "Characters of the baby monster SVOA sectors");
  baby->add_option("--sector", sector, "Sector 0, 1 or 2 (default: all)")->check(CLI::Range(0, 2));

  int degree = 48;
  auto* molien_cmd = app.add_subcommand("molien", "Molien series of the character group");
  molien_cmd->add_option("--rank", rank, "Rank c")->required();
  molien_cmd->add_option("--deg", degree, "Highest degree")->check(CLI::Range(0, 1000))->capture_default_str();

  auto* verlinde_cmd = app.add_subcommand("verlinde", "Fusion ring from the S-matrix");
  verlinde_cmd->add_option("--rank", rank, "Rank c")->required();

  std::string lattice_name;
  bool character = false;
  auto* theta = app.add_subcommand("theta", "Theta series of a catalog lattice");
  theta->add_option("--lattice", lattice_name, "Catalog name")->required();
  theta->add_flag("--character", character, "Print Theta/eta^n instead");
  auto* orbifold = app.add_subcommand("orbifold", "Character of the Z2-orbifold of a lattice VOA");
  orbifold->add_option("--lattice", lattice_name, "Catalog name")->required();

  std::string table_name;
  auto* table = app.add_subcommand("table", "Regenerate a result table");
  table->add_option("name", table_name, "voa, svoa, shadow or shadow-large")
      ->required()
      ->check(CLI::IsMember({"voa", "svoa", "shadow", "shadow-large"}));

  auto* lattice = app.add_subcommand("lattice", "Lattice catalog data");
  lattice->add_option("name", lattice_name, "Catalog name (default: list names)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!order_text.empty()) o.order = parse_order(order_text, "--order");

    if (*series) {
      const StandardForm f{parse_form_kind(series_name), rank_of(series_rank),
                           rank_of(series_weight)};
      emit_series(out, o, standard_series(f, order_or(o, kDefaultTrunc)));
    } else if (*voa || *svoa_cmd) {
      const ExtremalSolution sol = extremal(rank_of(rank), *voa ? Kind::VOA : Kind::SVOA,
                                            precision_of(o));
      if (o.json()) {
        out << solution_json(sol).dump() << "\n";
      } else {
        print_solution(out, sol);
      }
    } else if (*shadow_cmd) {
      const ShadowReport r = shadow(extremal_svoa(rank_of(rank), precision_of(o)));
      if (o.json()) {
        out << shadow_json(r).dump() << "\n";
      } else {
        print_shadow(out, r);
      }
    } else if (*classify_cmd) {
      const auto verdicts = classify_range(rank_of(from), rank_of(to), rank_of(max));
      json rows = json::array();
      for (const auto& v : verdicts) {
        if (o.json()) {
          rows.push_back(parsed(v.to_json()));
        } else {
          print_verdict(out, v);
        }
      }
      if (o.json()) out << rows.dump() << "\n";
    } else if (*monster) {
      ConstraintSet cs = default_constraints();
      bool check = true;
      if (!constraints_path.empty()) {
        cs = parse_constraints(read_file(constraints_path));
        check = check_published;
      }
      const MonsterSolution sol = solve_monster_polynomial(cs, check);
      if (o.json()) {
        json j;
        j["lambda"] = rationals_json(sol.lambda);
        j["terms"] = parsed(poly_to_json(sol.P));
        out << j.dump() << "\n";
      } else {
        out << "lambda = " << rationals_text(sol.lambda) << "\n";
        out << "P = " << poly_to_text(sol.P) << "\n";
      }
    } else if (*baby) {
      const Index trunc = order_or(o, kDefaultTrunc);
      json rows = json::array();
      for (int l = 0; l < 3; ++l) {
        if (sector >= 0 && l != sector) continue;
        const QSeries x = baby_character(l, trunc);
        if (o.json()) {
          rows.push_back({{"sector", l}, {"series", parsed(to_json(x))}});
        } else {
          out << "VB(" << l << "): " << to_text_normalized(x, frac(-47, 48)) << "\n";
        }
      }
      if (o.json()) out << (sector >= 0 ? rows[0] : rows).dump() << "\n";
    } else if (*molien_cmd) {
      const CharacterRep rep = character_rep(rank_of(rank));
      const MatrixGroup g = generate_group({rep.S, rep.T});
      const auto m = molien(g, degree);
      if (o.json()) {
        out << json{{"rank", rank}, {"group_order", g.order()}, {"coefficients", rationals_json(m)}}.dump()
            << "\n";
      } else {
        out << "|G| = " << g.order() << "\n" << molien_text(m) << "\n";
      }
    } else if (*verlinde_cmd) {
      const FusionTensor N = verlinde(character_rep(rank_of(rank)).S);
      if (o.json()) {
        out << json{{"rank", rank}, {"ring", N.ring_name()}, {"N", fusion_json(N)}}.dump() << "\n";
      } else {
        out << N.ring_name() << "\n" << N.to_string();
      }
    } else if (*theta) {
      const Lattice L = lattice_catalog(lattice_name);
      if (character) {
        emit_series(out, o, svoa_character(L, order_or(o, kDefaultThetaTrunc - 2 * L.dim)));
      } else {
        emit_series(out, o, theta_series(L, order_or(o, kDefaultThetaTrunc)));
      }
    } else if (*orbifold) {
      const Lattice L = lattice_catalog(lattice_name);
      const QSeries th = theta_series(L, order_or(o, kDefaultThetaTrunc));
      emit_series(out, o, orbifold_character(th, Rational(L.dim)));
    } else if (*table) {
      if (table_name == "voa") table_voa(out, o);
      if (table_name == "svoa") table_svoa(out, o);
      if (table_name == "shadow") table_shadow(out, o);
      if (table_name == "shadow-large") table_shadow_large(out, o);
    } else if (*lattice) {
      if (lattice_name.empty()) {
        if (o.json()) {
          out << json(lattice_catalog_names()).dump() << "\n";
        } else {
          for (const auto& n : lattice_catalog_names()) out << n << "\n";
        }
      } else {
        const Lattice L = lattice_catalog(lattice_name);
        if (o.json()) {
          out << lattice_to_json(L) << "\n";
        } else {
          out << L.name << ": dim " << L.dim;
          if (L.formula_backed) {
            out << ", theta from E4^3 - 720 Delta\n";
          } else {
            out << ", det " << to_string(L.determinant()) << ", " << L.glue.size()
                << " coset(s), " << (L.is_self_dual() ? "self-dual" : "not self-dual") << "\n";
          }
        }
      }
    }
  } catch (const UsageError& e) {
    err << "svoa: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "svoa: error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("svoa");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace svoa
