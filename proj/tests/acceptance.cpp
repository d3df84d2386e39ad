// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.
#include "hyperconv/bimodule.hpp"
#include "hyperconv/dualities.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <queue>

using namespace hyperconv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;  // summary on success, first witness on failure
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

// Records the first failure and keeps going so the summary counts everything.
struct Tally {
  Outcome out;
  std::size_t checks = 0;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
  Outcome finish(const std::string& summary) {
    if (out.ok) out.detail = summary + ", " + std::to_string(checks) + " checks";
    return out;
  }
};

std::string nk(std::size_t n, std::size_t k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

const char* side_name(Flavor f) { return f == Flavor::Left ? "left" : "right"; }

PolarizedArrangement fixture(Flavor f, std::size_t n, std::size_t k) {
  return f == Flavor::Left ? reference_left(n, k) : reference_right(n, k);
}

Outcome region_census() {
  Tally t;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 1}, {4, 2}, {5, 2}, {6, 3}})
    for (auto f : {Flavor::Left, Flavor::Right}) {
      auto S = enumerate_sets(fixture(f, n, k));
      std::string at = std::string(side_name(f)) + nk(n, k);
      for (const auto& a : all_sign_sequences(n)) {
        auto c = combinatorial_feasibility(f, a, k);
        auto cyc = combinatorial_feasibility(Flavor::Cyclic, a, k);
        t.expect(S.F.count(a) == c.feasible && S.F.count(a) == cyc.feasible, "F differs at " + a + " " + at);
        t.expect(S.B.count(a) == c.bounded, "B differs at " + a + " " + at);
        t.expect(S.P.count(a) == (c.feasible && c.bounded), "P differs at " + a + " " + at);
        t.expect(S.K.count(a) == c.compact, "K differs at " + a + " " + at);
      }
      t.expect(S.P.size() == oracle::binom(n, k), "|P| != C(n,k) for " + at);
      t.expect(S.K.size() == oracle::binom(n - 1, k), "|K| != C(n-1,k) for " + at);
    }
  return t.finish("8 fixtures");
}

Outcome duality_suite() {
  Tally t;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (auto f : {Flavor::Left, Flavor::Right}) {
        auto V = fixture(f, n, k);
        std::string at = std::string(side_name(f)) + nk(n, k);
        auto D = gale_dual(V);
        auto s = enumerate_sets(V), d = enumerate_sets(D);
        t.expect(s.F == d.B && s.B == d.F, "Gale dual does not swap F and B for " + at);
        auto a = alt_map(alt_map(V));
        t.expect(a.A() == V.A() && a.w() == V.w() && a.x() == V.x(), "alt is not an involution on " + at);
        auto p = polarization_reverse(polarization_reverse(V));
        t.expect(p.A() == V.A() && p.w() == V.w() && p.x() == V.x(), "reversal is not an involution on " + at);
        if (f == Flavor::Right && k >= 1 && k < n) {
          t.expect(is_right_cyclic(V), at + " is not right cyclic");
          t.expect(is_left_cyclic(alt_gale(V)), "alt Gale dual of " + at + " is not left cyclic");
        }
      }
  return t.finish("n <= 6, all k");
}

Outcome algebra_consistency() {
  Tally t;
  std::size_t cells = 0;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{3, 1}, {4, 1}, {4, 2}})
    for (auto f : {Flavor::Left, Flavor::Right}) {
      auto V = fixture(f, n, k);
      auto q = std::make_shared<QuiverPresentation>(btilde_presentation(V));
      PresentedAlgebra A(q, 6);
      BTilde B(V);
      auto r = compare_presented_ranks(A, B, 6);
      cells += r.cells;
      std::string w;
      if (r.witness)
        w = "rank " + std::to_string(r.witness->presented) + " vs " + std::to_string(r.witness->expected) + " at " +
            r.witness->src + "->" + r.witness->tgt;
      t.expect(r.ok(), w + " on " + side_name(f) + nk(n, k));
    }
  return t.finish(std::to_string(cells) + " cells");
}

Outcome isomorphisms() {
  Tally t;
  std::size_t cells = 0;
  for (auto f : {Flavor::Left, Flavor::Right})
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}}) {
      auto r = verify_isomorphism(n, k, f, 4);
      cells += r.cells;
      t.expect(r.ok(), r.witness.value_or("") + " on " + side_name(f) + nk(n, k));
    }
  return t.finish(std::to_string(cells) + " cells");
}

Outcome center() {
  Tally t;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {3, 2}, {4, 2}})
    for (auto f : {Flavor::Left, Flavor::Right}) {
      auto r = center_check(n, k, f, 8);
      for (const auto& row : r.rows)
        t.expect(row.commutant == row.formula, "degree " + std::to_string(row.degree) + " on " + nk(n, k) + ": " +
                                                   std::to_string(row.commutant) + " vs " + std::to_string(row.formula));
      t.expect(r.sum_u_central && r.basis_central, "central elements fail on " + nk(n, k));
    }
  return t.finish("degrees <= 8");
}

Outcome deletion_restriction() {
  Tally t;
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (auto f : {Flavor::Left, Flavor::Right}) {
        auto V = fixture(f, n, k);
        std::string at = std::string(side_name(f)) + nk(n, k);
        for (std::size_t i = 1; i <= n; ++i) {
          for (char s : {'+', '-'}) {
            auto name = " i=" + std::to_string(i) + " s=" + s + " on " + at;
            t.expect(check_well_defined(del_btilde(V, i, s), BTilde(V)).ok(), "del_B" + name);
            t.expect(check_well_defined(rest_btilde(V, i, s), BTilde(restrict_hyperplane(V, i))).ok(), "rest_B" + name);
            t.expect(check_well_defined(rest_atilde(V, i, s), BTilde(gale_dual(V))).ok(), "rest_A" + name);
            if (k + 1 < n)
              t.expect(check_well_defined(del_atilde(V, i, s), BTilde(gale_dual(delete_hyperplane(V, i)))).ok(),
                       "del_A" + name);
            t.expect(!rest_prime_btilde(V, i, s).check(2).has_value(), "rest'_B" + name);
            if (k + 1 < n) t.expect(!del_prime_atilde(V, i, s).check(2).has_value(), "del'_A" + name);
          }
          if (k + 1 < n) {
            auto c = composition_check(V, i);
            t.expect(c.ok(), c.witness.value_or("composite") + " i=" + std::to_string(i) + " on " + at);
          }
        }
      }
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t i = 1; i <= n; ++i) {
        auto L = reference_left(n, k), R = reference_right(n, k);
        std::string at = nk(n, k) + " i=" + std::to_string(i);
        if (k + 1 < n) {
          t.expect(is_left_cyclic(delete_hyperplane(L, i)), "deletion loses left cyclicity " + at);
          t.expect(is_right_cyclic(delete_hyperplane(R, i)), "deletion loses right cyclicity " + at);
        }
        t.expect(is_left_cyclic(signed_restrict(L, i)), "signed restriction loses left cyclicity " + at);
        t.expect(is_right_cyclic(signed_restrict(R, i)), "signed restriction loses right cyclicity " + at);
      }
  return t.finish("n <= 6");
}

Outcome bimodules() {
  Tally t;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}}) {
    auto h = check_fk_homomorphism(n, k);
    t.expect(h.ok(), h.failure.value_or("") + " for h" + nk(n, k));
    auto f = f_squared_zero(n, k, 3);
    t.expect(f.ok(), f.witness.value_or("idempotent survives") + " for F" + nk(n, k));
  }
  std::size_t cells = 0;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{3, 0}, {3, 1}, {4, 1}}) {
    auto r = factorization_check(n, k, 3);
    cells += r.cells;
    t.expect(r.ok(), r.witness.value_or("") + " for factorization" + nk(n, k));
    t.expect(r.nonzero_cells > 0, "factorization check is vacuous for " + nk(n, k));
  }
  return t.finish(std::to_string(cells) + " factorization cells");
}

// x < y generated by moving one dot one step (right for left fixtures, left for right ones).
std::vector<std::vector<bool>> dot_order(const std::vector<DotSet>& xs, int step) {
  std::map<DotSet, std::size_t> idx;
  for (std::size_t i = 0; i < xs.size(); ++i) idx[xs[i]] = i;
  std::vector<std::vector<std::size_t>> up(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs[i].size(); ++j) {
      DotSet y = xs[i];
      y[j] += step;
      std::sort(y.begin(), y.end());
      if (std::adjacent_find(y.begin(), y.end()) != y.end()) continue;
      if (auto it = idx.find(y); it != idx.end()) up[i].push_back(it->second);
    }
  std::vector<std::vector<bool>> less(xs.size(), std::vector<bool>(xs.size(), false));
  for (std::size_t s = 0; s < xs.size(); ++s) {
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : up[v])
        if (!less[s][w]) {
          less[s][w] = true;
          q.push(w);
        }
    }
  }
  return less;
}

Outcome order_theory() {
  Tally t;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (auto f : {Flavor::Left, Flavor::Right}) {
        auto V = fixture(f, n, k);
        std::string at = std::string(side_name(f)) + nk(n, k);
        auto po = partial_order(V);
        std::vector<DotSet> xs;
        for (const auto& a : po.elements) xs.push_back(f == Flavor::Left ? kappa_l(a, k) : kappa_r(a, k));
        t.expect(dot_order(xs, f == Flavor::Left ? 1 : -1) == po.less, "order differs from the dot order on " + at);
        for (const auto& e : mu_bijection(V)) {
          auto x = f == Flavor::Left ? kappa_l(e.alpha, k) : kappa_r(e.alpha, k);
          std::vector<int> expect;
          for (int i : x) expect.push_back(f == Flavor::Left ? i + 1 : i);
          t.expect(e.basis == expect, "vertex set of " + e.alpha + " on " + at);
        }
      }
  return t.finish("n <= 6");
}

Outcome sign_variation() {
  Tally t;
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t m = 0; m < total; ++m) {
      std::string z;
      for (std::size_t i = 0, r = m; i < n; ++i, r /= 3) z += "+-0"[r % 3];
      if (z.find_first_not_of('0') == std::string::npos) continue;
      t.expect(var(alt(z)) + var_bar(z) == n - 1, "var(alt z) != n-1-var_bar(z) at " + z);
      t.expect(var_bar(z) == oracle::brute_var_bar(z), "var_bar scan differs from brute force at " + z);
    }
  }
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      RationalVector z;
      for (std::size_t i = 1; i <= n; ++i) z.push_back(Rational(long(i)));
      t.expect(projection_variation_check(vandermonde(z, k)), "var(u) != k on " + nk(n, k));
      t.expect(projection_variation_check(reference_left(n, k).base()), "var(u) != k on left" + nk(n, k));
    }
  return t.finish("n <= 7");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "region census", 5, region_census},
      {2, "duality suite", 10, duality_suite},
      {3, "algebra self-consistency", 60, algebra_consistency},
      {4, "small-step isomorphisms", 120, isomorphisms},
      {5, "center", 60, center},
      {6, "deletion/restriction", 30, deletion_restriction},
      {7, "gl(1|1) bimodules", 120, bimodules},
      {8, "order theory", 10, order_theory},
      {9, "sign variation", 10, sign_variation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_s;
    bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail;
    if (!in_time) std::cout << " (time limit exceeded)";
    std::cout << " [" << std::fixed << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.limit_s
              << " s]\n";
  }
  return failures == 0 ? 0 : 1;
}
