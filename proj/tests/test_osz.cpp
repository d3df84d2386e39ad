#include "doctest.h"
#include "hyperconv/bimodule.hpp"
#include "oracles.hpp"

using namespace hyperconv;

namespace {

std::uint32_t vtx(const QuiverPresentation& q, const DotSet& x) { return q.vertex(format_dots(x)); }

// Direct count of small steps x -> x - {i-1} + {i} inside the index range.
std::size_t count_moves(std::size_t n, std::size_t k, int lo, int hi) {
  std::size_t count = 0;
  for (const auto& c : combinations(std::size_t(hi - lo + 1), k)) {
    std::set<int> x;
    for (auto j : c) x.insert(lo + int(j));
    for (int i = std::max(lo + 1, 1); i <= std::min(hi, int(n)); ++i)
      if (x.count(i - 1) && !x.count(i)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("small-step quiver shape") {
  auto q = osz_presentation({2, 1, OszVariant::Left});
  CHECK(q.vertices == std::vector<std::string>{"{0}", "{1}"});
  CHECK(q.arrows.size() == 2);
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      auto full = osz_presentation({n, k, OszVariant::Full});
      CHECK(full.vertices.size() == oracle::binom(n + 1, k));
      CHECK(full.arrows.size() == 2 * count_moves(n, k, 0, int(n)));
      CHECK(osz_presentation({n, k, OszVariant::Left}).vertices.size() == oracle::binom(n, k));
      CHECK(osz_presentation({n, k, OszVariant::Right}).arrows.size() == 2 * count_moves(n, k, 1, int(n)));
      CHECK(osz_presentation({n, k, OszVariant::Prime}).vertices.size() == oracle::binom(n - 1, k));
    }
  CHECK(parse_dots("{0,2}") == DotSet{0, 2});
  CHECK(parse_dots("{}").empty());
  CHECK(parse_variant("prime") == OszVariant::Prime);
  CHECK_THROWS_AS(parse_variant("middle"), AlgebraError);
}

TEST_CASE("psi_OSz is an involutive anti-automorphism") {
  auto q = osz_presentation({4, 2, OszVariant::Full});
  for (const auto& g : presentation_generators(q)) CHECK(psi_osz(q, psi_osz(q, g)) == g);
  std::uint32_t x = vtx(q, {0, 2}), y = vtx(q, {1, 2});
  auto R = q.arrow(std::uint32_t(q.find_arrow(x, y)));
  auto L = q.arrow(std::uint32_t(q.find_arrow(y, x)));
  CHECK(psi_osz(q, R) == L);
  CHECK(psi_osz(q, R * L) == psi_osz(q, L) * psi_osz(q, R));
}

TEST_CASE("dot sets match the region picture") {
  auto I = identify(4, 1, Flavor::Left);
  CHECK(I.alpha_of({0}) == "----");
  CHECK(I.alpha_of({1}) == "+---");
  CHECK(I.alpha_of({3}) == "+++-");
  CHECK(I.phi_canonical(I.osz->idempotent(vtx(*I.osz, {2}))) == I.B->e("++--"));
  for (const auto& a : I.B->P()) CHECK(I.alpha_of(I.dots_of(a)) == a);
}

TEST_CASE("isomorphism on small cases") {
  for (auto side : {Flavor::Left, Flavor::Right})
    for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
      auto r = verify_isomorphism(n, k, side, 3);
      CHECK_MESSAGE(r.ok(), r.witness.value_or(""));
      CHECK(r.cells > 0);
    }
}

TEST_CASE("Phi sends U_i summed over idempotents to u_i") {
  auto I = identify(3, 2, Flavor::Right);
  for (std::size_t j = 0; j < 3; ++j) {
    PathElement s;
    for (std::uint32_t v = 0; v < I.osz->vertices.size(); ++v) s += I.osz->central(v, j);
    CHECK(I.phi_canonical(s) == I.B->u(j));
  }
  auto c = center_check(2, 1, Flavor::Left, 6);
  CHECK(c.ok());
  CHECK(c.rows[2].commutant == 2);
}

TEST_CASE("the homomorphism h") {
  auto h = fk_homomorphism(3, 1);
  const auto& dom = *h.domain;
  const auto& cod = *h.codomain;
  CHECK(h.vertex[vtx(dom, {0, 2})] == std::optional<std::uint32_t>(vtx(cod, {2})));
  CHECK_FALSE(h.vertex[vtx(dom, {1, 2})].has_value());
  auto u = h.apply(dom.central(vtx(dom, {0, 2}), 0));
  CHECK(u == cod.central(vtx(cod, {2}), 0));
  CHECK(h.apply(dom.central(vtx(dom, {1, 2}), 0)).empty());
  // R_1 moves the dot at 0 away
  auto r1 = dom.find_arrow(vtx(dom, {0, 2}), vtx(dom, {1, 2}));
  REQUIRE(r1 >= 0);
  CHECK(h.apply(dom.arrow(std::uint32_t(r1))).empty());
  CHECK(h.preserves_single_grading());
  for (auto [n, k] : {std::pair{3, 0}, {3, 2}, {4, 1}}) CHECK(check_fk_homomorphism(n, k).ok());
}

TEST_CASE("F_k and E''_k pieces") {
  for (auto [n, k] : {std::pair{3, 0}, {3, 1}, {4, 2}}) {
    auto F = fk_bimodule(n, k);
    std::size_t zero = 0;
    for (const auto& p : F.pieces(0)) zero += p.basis.size();
    CHECK(zero == oracle::binom(n - 1, k));
    auto E = e2k_bimodule(n, k);
    std::size_t ezero = 0;
    for (const auto& p : E.pieces(0)) ezero += p.basis.size();
    CHECK(ezero == zero);
  }
  auto F = fk_bimodule(3, 1);
  const auto& R = F.right_algebra();
  MultiDegree d0(3, 0);
  auto p = F.piece(vtx(F.left_algebra(), {2}), vtx(R, {0, 2}), d0);
  REQUIRE(p.basis.size() == 1);
  auto act = F.action(p, R.idempotent(vtx(R, {0, 2})), false);
  REQUIRE(act.has_value());
  CHECK(act->matrix == std::vector<std::vector<std::int64_t>>{{1}});
  CHECK_FALSE(F.action(p, R.idempotent(vtx(R, {1, 2})), false).has_value());
  CHECK(F.piece(vtx(F.left_algebra(), {2}), vtx(R, {1, 2}), d0).basis.empty());
  // left and right actions commute
  auto L = F.left_algebra();
  for (const auto& piece : F.pieces(2))
    for (const auto& a : presentation_generators(L))
      for (const auto& b : presentation_generators(R)) {
        BTildeElement m;
        m.add(piece.basis[0], 1);
        CHECK(F.act_right(F.act_left(a, m), b) == F.act_left(a, F.act_right(m, b)));
      }
}

TEST_CASE("F_k F_{k+1} = 0") {
  for (auto [n, k] : {std::pair{3, 0}, {4, 1}}) {
    auto r = f_squared_zero(n, k, 3);
    CHECK_MESSAGE(r.ok(), r.witness.value_or(""));
    std::size_t gens = 0;
    for (const auto& c : r.cells) gens += c.generators;
    CHECK(gens > 0);
  }
  CHECK_THROWS_AS(f_squared_zero(3, 2, 3), AlgebraError);
}

TEST_CASE("F_k factors through deletion and signed restriction") {
  for (auto [n, k] : {std::pair{3, 1}, {4, 0}}) {
    auto r = factorization_check(n, k, 3);
    CHECK_MESSAGE(r.ok(), r.witness.value_or(""));
    CHECK(r.nonzero_cells > 0);
    CHECK(r.generators > 0);
  }
}
