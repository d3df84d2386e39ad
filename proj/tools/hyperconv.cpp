#include "hyperconv/bimodule.hpp"
#include "hyperconv/dualities.hpp"
#include "hyperconv/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hyperconv;
using nlohmann::json;

namespace {

std::size_t max_n() {
  if (const char* s = std::getenv("HYPERCONV_MAX_N")) {
    try {
      return std::stoul(s);
    } catch (...) {
      throw InputError("HYPERCONV_MAX_N is not a number");
    }
  }
  return 12;
}

void check_size(std::size_t n) {
  if (n > max_n()) throw InputError("n = " + std::to_string(n) + " exceeds HYPERCONV_MAX_N = " + std::to_string(max_n()));
}

struct ArrangementOpts {
  std::string file, vandermonde, polarize;
  std::size_t k = 1;
  std::optional<Flavor> side;

  void attach(CLI::App* app) {
    app->add_option("--file", file, "arrangement JSON");
    app->add_option("--vandermonde", vandermonde, "comma-separated points z_1,...,z_n");
    app->add_option("--k", k, "dimension for --vandermonde");
    app->add_option("--polarize", polarize, "left:z0 or right:z_{n+1}");
  }

  ArrangementDoc build() {
    ArrangementDoc doc = [&] {
      if (!file.empty()) return load_arrangement(file);
      if (vandermonde.empty()) throw InputError("give --file or --vandermonde");
      RationalVector z;
      std::stringstream ss(vandermonde);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          z.push_back(parse_rational(tok));
        } catch (const std::exception&) {
          throw InputError("bad point '" + tok + "'");
        }
      }
      check_size(z.size());
      if (k > z.size()) throw InputError("--k exceeds the number of points");
      try {
        if (polarize.empty()) return ArrangementDoc{vandermonde_arrangement(z), {}, {}};
        auto colon = polarize.find(':');
        if (colon == std::string::npos) throw InputError("--polarize expects left:z0 or right:z");
        auto which = polarize.substr(0, colon);
        Rational extra = parse_rational(polarize.substr(colon + 1));
        PolarizedArrangement V = [&] {
          if (which == "left") {
            side = Flavor::Left;
            return vandermonde_left(extra, z, k);
          }
          if (which == "right") {
            side = Flavor::Right;
            return vandermonde_right(z, extra, k);
          }
          throw InputError("--polarize side must be left or right");
        }();
        return ArrangementDoc{V.base(), V.x(), {}};
      } catch (const ArrangementError& e) {
        throw InputError(e.what());
      }
    }();
    check_size(doc.base.n());
    return doc;
  }

  Arrangement vandermonde_arrangement(const RationalVector& z) const { return hyperconv::vandermonde(z, k); }
};

Flavor parse_side(const std::string& s) {
  if (s == "left") return Flavor::Left;
  if (s == "right") return Flavor::Right;
  throw InputError("--side must be left or right");
}

void check_nk(std::size_t n, std::size_t k) {
  check_size(n);
  if (k > n) throw InputError("k must not exceed n");
}

std::string degree_text(const MultiDegree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

// Prints the report and returns the exit code.
int report(bool as_json, json j, bool pass, const std::optional<std::string>& witness) {
  j["pass"] = pass;
  j["witness"] = witness ? json(*witness) : json(nullptr);
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << (pass ? "PASS" : "FAIL: " + witness.value_or("check failed")) << "\n";
  return pass ? 0 : 1;
}

std::string set_flags(const RegionSets& S, const SignSequence& a) {
  std::string f;
  f += S.F.count(a) ? "F" : ".";
  f += S.B.count(a) ? "B" : ".";
  f += S.P.count(a) ? "P" : ".";
  f += S.K.count(a) ? "K" : ".";
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convolution algebras of polarized hyperplane arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  ArrangementOpts arr;
  std::size_t n = 0, k = 0, index = 1;
  int window = 4, fk_window = 3, bound = 8;
  std::string side_name = "left", variant = "left", out;
  bool presented = false, alt_gale_flag = false;
  std::string algebra = "b";

  auto* regions = app.add_subcommand("regions", "feasible, bounded and compact sign sequences");
  arr.attach(regions);
  auto* dualize = app.add_subcommand("dualize", "Gale dual of a polarized arrangement");
  arr.attach(dualize);
  dualize->add_flag("--alt", alt_gale_flag, "apply alt and polarization reversal as well");
  CLI::App* ops[3];
  const char* op_names[3] = {"delete", "restrict", "signed-restrict"};
  for (int i = 0; i < 3; ++i) {
    ops[i] = app.add_subcommand(op_names[i], std::string(op_names[i]) + " the i-th hyperplane");
    arr.attach(ops[i]);
    ops[i]->add_option("--i", index, "1-based hyperplane index")->required();
  }
  auto* ranks = app.add_subcommand("algebra-ranks", "graded ranks of B~(V) or A~(V)");
  arr.attach(ranks);
  ranks->add_option("--window", window, "total degree bound");
  ranks->add_option("--algebra", algebra, "b or a")->check(CLI::IsMember({"a", "b"}));
  ranks->add_flag("--presented", presented, "compare against the quiver presentation");
  auto* center = app.add_subcommand("center", "graded ranks of the center of B_l or B_r");
  auto* iso = app.add_subcommand("verify-iso", "OSz presentation against B~(V)");
  auto* fk = app.add_subcommand("verify-fk", "F_k homomorphism, F_k F_{k+1} = 0 and the factorization");
  auto* quiver = app.add_subcommand("export-quiver", "DOT file of an OSz quiver");
  for (auto* c : {center, iso, fk, quiver}) {
    c->add_option("--n", n)->required();
    c->add_option("--k", k)->required();
  }
  for (auto* c : {center, iso}) c->add_option("--side", side_name)->check(CLI::IsMember({"left", "right"}));
  center->add_option("--bound", bound, "degree bound");
  iso->add_option("--window", window);
  fk->add_option("--window", fk_window);
  quiver->add_option("--variant", variant)->check(CLI::IsMember({"full", "left", "right", "prime"}));
  quiver->add_option("--out", out, "output file (stdout if omitted)");
  auto* altgale = app.add_subcommand("verify-altgale", "Gale duality swaps F and B; right/left cyclic exchange");
  arr.attach(altgale);
  auto* delrest = app.add_subcommand("verify-delrest", "deletion/restriction homomorphisms and composites");
  arr.attach(delrest);
  delrest->add_option("--i", index, "1-based hyperplane index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (regions->parsed()) {
      auto doc = arr.build();
      RegionSets S;
      if (doc.polarized()) {
        S = enumerate_sets(doc.polarization(), max_n());
      } else {
        S.F = feasible_set(doc.base, max_n());
        S.K = compact_set(doc.base, max_n());
      }
      std::set<SignSequence> shown = S.F;
      shown.insert(S.B.begin(), S.B.end());
      auto dots = [&](const SignSequence& a) -> std::optional<DotSet> {
        if (!S.P.count(a) || !arr.side) return std::nullopt;
        return *arr.side == Flavor::Left ? kappa_l(a, doc.base.k()) : kappa_r(a, doc.base.k());
      };
      if (as_json) {
        json rows = json::array();
        for (const auto& a : shown) {
          json r = {{"sign", a}, {"flags", set_flags(S, a)}};
          if (auto d = dots(a)) r["dots"] = *d;
          rows.push_back(r);
        }
        json j = {{"n", doc.base.n()}, {"k", doc.base.k()}, {"regions", rows},
                  {"counts", {{"F", S.F.size()}, {"B", S.B.size()}, {"P", S.P.size()}, {"K", S.K.size()}}}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "sign";
        std::cout << std::string(doc.base.n() > 4 ? doc.base.n() - 2 : 2, ' ') << "FBPK  dots\n";
        for (const auto& a : shown) {
          std::cout << a << "  " << set_flags(S, a);
          if (auto d = dots(a)) std::cout << "  " << format_dots(*d);
          std::cout << "\n";
        }
        std::cout << "|F|=" << S.F.size() << " |B|=" << S.B.size() << " |P|=" << S.P.size() << " |K|=" << S.K.size()
                  << "\n";
      }
      return 0;
    }

    if (dualize->parsed()) {
      auto V = arr.build().polarization();
      std::cout << dump_arrangement(alt_gale_flag ? alt_gale(V) : gale_dual(V));
      return 0;
    }

    for (int i = 0; i < 3; ++i) {
      if (!ops[i]->parsed()) continue;
      auto doc = arr.build();
      if (index < 1 || index > doc.base.n()) throw InputError("--i out of range");
      if (doc.polarized()) {
        auto V = doc.polarization();
        auto W = i == 0 ? delete_hyperplane(V, index) : i == 1 ? restrict_hyperplane(V, index) : signed_restrict(V, index);
        std::cout << dump_arrangement(W);
      } else {
        auto W = i == 0 ? delete_hyperplane(doc.base, index)
                        : i == 1 ? restrict_hyperplane(doc.base, index) : signed_restrict(doc.base, index);
        std::cout << dump_arrangement(ArrangementDoc{W, {}, {}});
      }
      return 0;
    }

    if (ranks->parsed()) {
      auto V = arr.build().polarization();
      if (window < 0) throw InputError("--window must be non-negative");
      BTilde B(algebra == "a" ? gale_dual(V) : V);
      RankTable t{algebra == "a" ? "A~" : "B~", window, {}};
      for (const auto& a : B.P())
        for (const auto& b : B.P())
          for (const auto& d : degrees_up_to(V.n(), window))
            if (int r = B.graded_rank(a, b, d)) t.entries.push_back({a, b, d, std::size_t(r)});
      std::optional<RankComparison> cmp;
      if (presented) {
        auto q = std::make_shared<QuiverPresentation>(algebra == "a" ? atilde_presentation(V) : btilde_presentation(V));
        cmp = compare_presented_ranks(PresentedAlgebra(q, window), B, window);
      }
      if (as_json) {
        std::cout << dump_rank_table(t);
      } else {
        for (const auto& e : t.entries)
          std::cout << e.src << " " << e.tgt << " " << degree_text(e.degree) << " " << e.rank << "\n";
      }
      if (cmp && !cmp->ok()) {
        const auto& m = *cmp->witness;
        std::cerr << "presented rank " << m.presented << " != " << m.expected << " at " << m.src << " " << m.tgt << " "
                  << degree_text(m.d) << "\n";
        return 1;
      }
      if (cmp && !as_json) std::cout << "presented ranks agree on " << cmp->cells << " cells\n";
      return 0;
    }

    if (center->parsed()) {
      check_nk(n, k);
      auto rep = center_check(n, k, parse_side(side_name), bound);
      json rows = json::array();
      for (const auto& r : rep.rows)
        rows.push_back({{"degree", r.degree}, {"commutant", r.commutant}, {"formula", r.formula}});
      std::optional<std::string> w;
      for (const auto& r : rep.rows)
        if (r.commutant != r.formula && !w)
          w = "degree " + std::to_string(r.degree) + ": commutant " + std::to_string(r.commutant) + " vs " +
              std::to_string(r.formula);
      if (!rep.sum_u_central && !w) w = "sum of U_i is not central";
      if (!as_json)
        for (const auto& r : rep.rows) std::cout << "degree " << r.degree << ": " << r.commutant << "\n";
      return report(as_json, {{"check", "center"}, {"n", n}, {"k", k}, {"rows", rows}}, rep.ok(), w);
    }

    if (iso->parsed()) {
      check_nk(n, k);
      if (k == 0 || k >= n + 1) throw InputError("verify-iso needs 1 <= k <= n");
      auto rep = verify_isomorphism(n, k, parse_side(side_name), window);
      json j = {{"check", "verify-iso"}, {"n", n}, {"k", k}, {"side", side_name}, {"window", window}, {"cells", rep.cells}};
      return report(as_json, j, rep.ok(), rep.witness);
    }

    if (fk->parsed()) {
      check_nk(n, k);
      if (k + 1 > n) throw InputError("verify-fk needs k+1 <= n");
      auto h = check_fk_homomorphism(n, k);
      json j = {{"check", "verify-fk"}, {"n", n}, {"k", k}, {"window", fk_window}, {"homomorphism", h.ok()}};
      std::optional<std::string> w = h.failure;
      bool pass = h.ok();
      if (k + 2 <= n) {
        auto f = f_squared_zero(n, k, fk_window);
        j["f_squared_zero"] = f.ok();
        pass = pass && f.ok();
        if (!w) w = f.witness;
      }
      auto fac = factorization_check(n, k, fk_window);
      j["factorization"] = fac.ok();
      j["factorization_cells"] = fac.cells;
      pass = pass && fac.ok();
      if (!w) w = fac.witness;
      return report(as_json, j, pass, w);
    }

    if (quiver->parsed()) {
      check_nk(n, k);
      auto v = parse_variant(variant);
      auto q = osz_presentation({n, k, v});
      auto dot = to_dot(q, "B_" + variant + "(" + std::to_string(n) + "," + std::to_string(k) + ")");
      if (out.empty()) {
        std::cout << dot;
      } else {
        std::ofstream f(out);
        if (!f) throw InputError("cannot write " + out);
        f << dot;
      }
      return 0;
    }

    if (altgale->parsed()) {
      auto V = arr.build().polarization();
      auto D = gale_dual(V);
      auto S = enumerate_sets(V, max_n()), T = enumerate_sets(D, max_n());
      std::optional<std::string> w;
      if (S.F != T.B || S.B != T.F) w = "Gale dual does not swap feasible and bounded sequences";
      json j = {{"check", "verify-altgale"}, {"n", V.n()}, {"k", V.k()}};
      if (V.k() >= 1 && V.k() < V.n()) {
        bool right = is_right_cyclic(V), left = is_left_cyclic(alt_gale(V));
        j["right_cyclic"] = right;
        j["alt_gale_left_cyclic"] = left;
        if (right != left && !w) w = "right cyclicity of V differs from left cyclicity of its alt Gale dual";
      }
      return report(as_json, j, !w, w);
    }

    if (delrest->parsed()) {
      auto V = arr.build().polarization();
      if (index < 1 || index > V.n()) throw InputError("--i out of range");
      auto rep = composition_check(V, index);
      json j = {{"check", "verify-delrest"}, {"i", index}, {"generators", rep.generators},
                {"well_defined", rep.well_defined}, {"zero_when_signs_differ", rep.zero_when_signs_differ},
                {"independent_of_sign", rep.independent_of_sign}, {"primed_matches", rep.primed_matches}};
      std::optional<std::string> w = rep.witness;
      bool pass = rep.ok();
      if (arr.side && V.k() >= 2 && V.k() + 1 < V.n()) {
        auto keep = *arr.side == Flavor::Left ? is_left_cyclic : is_right_cyclic;
        bool del = keep(delete_hyperplane(V, index)), res = keep(signed_restrict(V, index));
        j["deletion_cyclic"] = del;
        j["signed_restriction_cyclic"] = res;
        if (!(del && res)) {
          pass = false;
          if (!w) w = "cyclicity not preserved";
        }
      }
      return report(as_json, j, pass, w);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArrangementError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
