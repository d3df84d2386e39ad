#include "doctest.h"
#include "hyperconv/arrangement.hpp"
#include "hyperconv/dualities.hpp"
#include "oracles.hpp"

using namespace hyperconv;

namespace {
RationalVector zs(std::initializer_list<int> v) {
  RationalVector z;
  for (int x : v) z.push_back(x);
  return z;
}
std::set<SignSequence> S(std::initializer_list<const char*> v) {
  std::set<SignSequence> s;
  for (auto x : v) s.insert(x);
  return s;
}
}  // namespace

TEST_CASE("region polyhedron for the n=4 k=1 fixture") {
  auto V = vandermonde(zs({1, 2, 3, 4}), 1);
  auto p = region_polyhedron(V, "+---");
  REQUIRE(p.ineqs.size() == 4);
  CHECK(p.ineqs[0].normal == RationalVector{1});
  CHECK(p.ineqs[0].offset == -1);
  for (int i = 1; i < 4; ++i) {
    CHECK(p.ineqs[i].normal == RationalVector{-1});
    CHECK(p.ineqs[i].offset == i + 1);
  }
  auto q = region_polyhedron(V, "++++");
  for (int i = 0; i < 4; ++i) CHECK(q.ineqs[i].offset == -(i + 1));
  CHECK_FALSE(is_feasible(V, "-+--"));
}

TEST_CASE("region sets of the left n=4 k=1 fixture") {
  auto V = reference_left(4, 1);
  auto s = enumerate_sets(V);
  CHECK(s.F == S({"----", "+---", "++--", "+++-", "++++"}));
  CHECK(s.K == S({"+---", "++--", "+++-"}));
  CHECK(s.P == S({"----", "+---", "++--", "+++-"}));
  for (auto& a : s.K) CHECK(s.P.count(a));
  for (auto& a : s.P) CHECK(s.F.count(a));
  auto two = enumerate_sets(vandermonde_left(0, zs({1, 2}), 1));
  CHECK(two.P.size() == 2);
  CHECK(two.K.size() == 1);
  CHECK(enumerate_sets(reference_left(5, 2)).P.size() == 10);
  CHECK_THROWS_AS(enumerate_sets(V, 3), ArrangementError);
}

TEST_CASE("sign variation") {
  CHECK(var("+-+-") == 3);
  CHECK(var("+0+") == 0);
  CHECK(var_bar("+0+") == 2);
  CHECK(var(alt("+++")) == 2);
  CHECK(var_l("----") == 1);
  CHECK(var_l("-+--") == 3);
  CHECK(var_r("++++", 1) == 1);
}

TEST_CASE("var_bar scan agrees with brute force") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t m = 0; m < total; ++m) {
      std::string z;
      std::size_t t = m;
      for (std::size_t i = 0; i < n; ++i, t /= 3) z += "+-0"[t % 3];
      if (z.find_first_not_of('0') == std::string::npos) continue;
      CHECK(var_bar(z) == oracle::brute_var_bar(z));
    }
  }
}

TEST_CASE("cyclicity") {
  auto V = vandermonde(zs({1, 2, 3, 4}), 1);
  CHECK(is_cyclic(V));
  RationalVector w = V.w();
  for (auto& e : w) e = -e;
  CHECK_FALSE(is_cyclic(Arrangement(V.A(), w)));
  RationalMatrix B = RationalMatrix::from_rows({{1, 0}, {0, 1}, {-1, 0}});
  CHECK_FALSE(is_cyclic(Arrangement(B, {Rational(1), Rational(1, 3), Rational(1, 7)})));
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      RationalVector z;
      for (std::size_t i = 0; i < n; ++i) z.push_back(Rational(int(i * i) + 1, 2));
      CHECK(is_cyclic(vandermonde(z, k)));
    }
}

TEST_CASE("left and right cyclicity") {
  CHECK(is_left_cyclic(reference_left(4, 1)));
  CHECK(is_right_cyclic(reference_right(4, 1)));
  CHECK_FALSE(is_left_cyclic(reference_right(4, 1)));
  auto L = reference_left(4, 1);
  CHECK_FALSE(is_left_cyclic(polarization_reverse(L)));
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(is_left_cyclic(reference_left(n, k)));
      CHECK(is_right_cyclic(reference_right(n, k)));
    }
}

TEST_CASE("vandermonde constructions") {
  auto V1 = vandermonde(zs({1, 2, 3, 4}), 1);
  CHECK(V1.A() == RationalMatrix::from_rows({{1}, {1}, {1}, {1}}));
  CHECK(V1.w() == zs({-1, -2, -3, -4}));
  auto V2 = vandermonde(zs({1, 2, 3, 4}), 2);
  CHECK(V2.A() == RationalMatrix::from_rows({{1, 1}, {1, 2}, {1, 3}, {1, 4}}));
  CHECK(V2.w() == zs({1, 4, 9, 16}));
  CHECK(vandermonde_left(0, zs({1, 2, 3, 4}), 2).x() == zs({1, 0}));
  CHECK(vandermonde_right(zs({1, 2, 3, 4}), 5, 1).x() == zs({-1}));
  CHECK_THROWS_AS(vandermonde(zs({1, 3, 2}), 1), ArrangementError);
  auto V0 = vandermonde(zs({1, 2, 3}), 0);
  CHECK(V0.k() == 0);
  CHECK(V0.w() == zs({1, 1, 1}));
}

TEST_CASE("combinatorial feasibility matches LP on all fixtures n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t k = 0; k <= std::min<std::size_t>(n, 4); ++k) {
      if (n == 7 && k > 2) continue;
      for (int side = 0; side < 2; ++side) {
        auto V = side == 0 ? reference_left(n, k) : reference_right(n, k);
        Flavor fl = side == 0 ? Flavor::Left : Flavor::Right;
        for (const auto& a : all_sign_sequences(n)) {
          auto c = combinatorial_feasibility(fl, a, k);
          auto cyc = combinatorial_feasibility(Flavor::Cyclic, a, k);
          auto v = V.verdict(a);
          CHECK_MESSAGE(c.feasible == v.feasible, a);
          CHECK_MESSAGE(cyc.feasible == v.feasible, a);
          CHECK_MESSAGE(c.bounded == v.bounded, a);
          CHECK_MESSAGE(c.compact == v.compact, a);
        }
      }
    }
  CHECK_FALSE(combinatorial_feasibility(Flavor::Left, "-+--", 1).feasible);
}

TEST_CASE("dots bijections") {
  CHECK(kappa_l("----", 1) == DotSet{0});
  CHECK(kappa_l("+---", 1) == DotSet{1});
  CHECK(kappa_l_inv({2}, 4) == "++--");
  CHECK_THROWS_AS(kappa_l("-+--", 1), ArrangementError);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      auto P = enumerate_sets(reference_left(n, k)).P;
      CHECK(P.size() == oracle::binom(n, k));
      std::set<DotSet> seen;
      for (auto& a : P) {
        auto x = kappa_l(a, k);
        for (int d : x) CHECK((d >= 0 && d < int(n)));
        CHECK(kappa_l_inv(x, n) == a);
        seen.insert(x);
      }
      CHECK(seen.size() == P.size());
      auto Pr = enumerate_sets(reference_right(n, k)).P;
      CHECK(Pr.size() == oracle::binom(n, k));
      for (auto& a : Pr) {
        auto x = kappa_r(a, k);
        for (int d : x) CHECK((d >= 1 && d <= int(n)));
        CHECK(kappa_r_inv(x, n, k) == a);
      }
      if (n >= 1) CHECK(enumerate_sets(reference_left(n, k)).K.size() == oracle::binom(n - 1, k));
    }
}

TEST_CASE("mu bijection and order on the left n=4 k=1 fixture") {
  auto V = reference_left(4, 1);
  auto mu = mu_bijection(V);
  std::map<SignSequence, std::vector<int>> m;
  for (auto& e : mu) m[e.alpha] = e.basis;
  CHECK(m["----"] == std::vector<int>{1});
  CHECK(m["+---"] == std::vector<int>{2});
  for (auto& e : mu) {
    auto x = kappa_l(e.alpha, 1);
    CHECK(e.basis == std::vector<int>{x[0] + 1});
  }
  auto po = partial_order(V);
  auto idx = [&](const char* a) {
    return std::size_t(std::find(po.elements.begin(), po.elements.end(), a) - po.elements.begin());
  };
  CHECK(po.less[idx("----")][idx("+---")]);
  CHECK(po.less[idx("+---")][idx("++--")]);
  CHECK(po.less[idx("++--")][idx("+++-")]);
  CHECK(po.less[idx("----")][idx("+++-")]);
  CHECK_FALSE(po.less[idx("+++-")][idx("----")]);
}

TEST_CASE("equivalence") {
  auto a = vandermonde(zs({1, 2, 3, 4}), 2), b = vandermonde(zs({1, 3, 7, 20}), 2);
  CHECK(equivalent(a, b));
  CHECK(equivalent(a, a));
  CHECK_FALSE(equivalent(reference_left(4, 1), reference_right(4, 1)));
  CHECK(equivalent(reference_left(4, 2), vandermonde_left(Rational(-1, 2), zs({1, 3, 7, 20}), 2)));
  CHECK_THROWS_AS(equivalent(a, vandermonde(zs({1, 2, 3}), 2)), ArrangementError);
  RationalVector w = a.w();
  for (auto& e : w) e = -e;
  CHECK_FALSE(equivalent(a, Arrangement(a.A(), w)));
}

TEST_CASE("strong lifts") {
  auto V = vandermonde_left(0, zs({1, 2}), 1);
  auto c = find_strong_lift(V, Flavor::Left);
  REQUIRE(c);
  CHECK(is_positive(strong_lift_matrix(V, Flavor::Left, *c)));
  CHECK_FALSE(find_strong_lift(reference_right(4, 1), Flavor::Left));
}

TEST_CASE("projection variation") {
  CHECK(projection_variation_check(vandermonde(zs({1, 2, 3, 4}), 1)));
  CHECK(projection_variation_check(vandermonde(zs({1, 2, 3, 4}), 2)));
  CHECK(projection_variation_check(vandermonde(zs({1, 2, 3}), 1)));
}

TEST_CASE("validation rejects degenerate input") {
  RationalMatrix A = RationalMatrix::from_rows({{1}, {1}, {1}});
  CHECK_THROWS_AS(Arrangement(A, zs({1, 1, 2})), ArrangementError);
  CHECK_THROWS_AS(Arrangement(RationalMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}}), zs({0, 0, 0})), ArrangementError);
  CHECK_THROWS_AS(Arrangement(RationalMatrix::from_rows({{1, 2}, {2, 4}}), zs({0, 1})), ArrangementError);
  auto V2 = vandermonde(zs({1, 2, 3, 4}), 2);
  CHECK_THROWS_AS(PolarizedArrangement(V2, zs({0, 0})), ArrangementError);
}
