#include "doctest.h"
#include "hyperconv/lp.hpp"
#include "oracles.hpp"

using namespace hyperconv;

namespace {
Inequality ineq(std::initializer_list<Rational> normal, Rational off) { return {RationalVector(normal), off}; }

Polyhedron interval12() { return {1, {ineq({1}, -1), ineq({-1}, 2)}}; }

// Brute force over a rational grid: used as an independent oracle for small 2-d systems.
bool grid_feasible(const Polyhedron& p, int radius, int den) {
  for (int a = -radius * den; a <= radius * den; ++a)
    for (int b = -radius * den; b <= radius * den; ++b)
      if (p.contains({Rational(a, den), Rational(b, den)})) return true;
  return false;
}
}  // namespace

TEST_CASE("is_nonempty examples") {
  auto r = is_nonempty(interval12());
  CHECK(r.nonempty);
  REQUIRE(r.witness);
  CHECK((*r.witness)[0] == Rational(3, 2));

  Polyhedron empty{1, {ineq({1}, -2), ineq({-1}, 1)}};
  CHECK_FALSE(is_nonempty(empty).nonempty);

  auto z = is_nonempty(Polyhedron{0, {}});
  CHECK(z.nonempty);
  CHECK(z.witness->empty());
}

TEST_CASE("bounded_above examples") {
  Polyhedron ray{1, {ineq({1}, -1)}};
  auto b = bounded_above(ray, {-1});
  CHECK(b.status == LpStatus::NonemptyBounded);
  CHECK(*b.optimum == -1);
  auto u = bounded_above(ray, {1});
  CHECK(u.status == LpStatus::NonemptyUnbounded);
  REQUIRE(u.direction);
  CHECK((*u.direction)[0] > 0);
  Polyhedron empty{1, {ineq({1}, -2), ineq({-1}, 1)}};
  auto e = bounded_above(empty, {1});
  CHECK(e.status == LpStatus::Empty);
  CHECK_FALSE(e.witness);
}

TEST_CASE("argmax_vertex examples") {
  auto up = argmax_vertex(interval12(), {1});
  CHECK(up.point == RationalVector{2});
  CHECK(up.active == std::vector<std::size_t>{1});
  auto down = argmax_vertex(interval12(), {-1});
  CHECK(down.point == RationalVector{1});
  CHECK(down.active == std::vector<std::size_t>{0});

  Polyhedron square{2, {ineq({1, 0}, 0), ineq({-1, 0}, 1), ineq({0, 1}, 0), ineq({0, -1}, 1)}};
  auto c = argmax_vertex(square, {1, 1});
  CHECK(c.point == RationalVector{1, 1});
  CHECK(c.active.size() == 2);
  CHECK_THROWS_WITH_AS(argmax_vertex(square, {1, 0}), "degenerate objective", LpError);
}

TEST_CASE("random 2-d systems: witnesses, monotonicity, optimum attained") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 150; ++t) {
    Polyhedron p{2, {}};
    int m = 2 + t % 4;
    for (int i = 0; i < m; ++i) p.ineqs.push_back(ineq({d(rng), d(rng)}, d(rng)));
    auto r = is_nonempty(p);
    if (r.nonempty) CHECK(p.contains(*r.witness));
    // Grid oracle: an empty verdict must not be contradicted by any grid point.
    if (!r.nonempty) CHECK_FALSE(grid_feasible(p, 3, 4));
    RationalVector obj{d(rng), d(rng)};
    auto v = bounded_above(p, obj);
    if (v.status == LpStatus::NonemptyBounded) {
      CHECK(p.contains(*v.witness));
      CHECK(dot(obj, *v.witness) == *v.optimum);
      Polyhedron q = p;
      q.ineqs.push_back(ineq({d(rng), d(rng)}, d(rng)));
      auto w = bounded_above(q, obj);
      CHECK(w.status != LpStatus::NonemptyUnbounded);
      if (w.status == LpStatus::NonemptyBounded) CHECK(*w.optimum <= *v.optimum);
    } else if (v.status == LpStatus::NonemptyUnbounded) {
      for (auto& q : p.ineqs) CHECK(dot(q.normal, *v.direction) >= 0);
      CHECK(dot(obj, *v.direction) > 0);
    }
  }
}
