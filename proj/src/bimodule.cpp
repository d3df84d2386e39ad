#include "hyperconv/bimodule.hpp"

#include "hyperconv/dualities.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace hyperconv {

namespace {

BTildeElement single(const BTerm& t) {
  BTildeElement x;
  x.add(t, 1);
  return x;
}

std::uint32_t alpha_index(const OszIdentification& I, std::uint32_t v) {
  auto a = I.alpha_of(parse_dots(I.osz->vertices[v]));
  auto i = I.B->index(a);
  if (!i) throw AlgebraError("dot set " + I.osz->vertices[v] + " has no bounded feasible sequence");
  return *i;
}

MultiDegree drop_first(const MultiDegree& d) { return MultiDegree(d.begin() + 1, d.end()); }

std::string str(const MultiDegree& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

// Generators m (x) n of a tensor product in one multidegree, modulo the balancing relations.
class Coequalizer {
 public:
  using Key = std::tuple<std::uint32_t, BTerm, BTerm>;

  void add_generator(const Key& k) { index_.emplace(k, std::uint32_t(index_.size())); }
  bool has(const Key& k) const { return index_.count(k) > 0; }
  std::size_t generators() const { return index_.size(); }
  std::size_t relations() const { return rows_.size(); }

  void add_relation(const std::vector<std::pair<Key, std::int64_t>>& terms) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> v;
    for (const auto& [k, c] : terms) {
      auto it = index_.find(k);
      if (it == index_.end()) throw AlgebraError("tensor relation leaves the generator set");
      v.emplace_back(it->second, c);
    }
    auto s = sparse_from_terms(std::move(v));
    if (!s.empty()) rows_.push_back(std::move(s));
  }

  QuotientRank solve() const {
    IntLattice L(index_.size());
    for (const auto& r : rows_) L.add(r);
    return quotient_rank(L);
  }

 private:
  std::map<Key, std::uint32_t> index_;
  std::vector<SparseVec> rows_;
};

}  // namespace

HomBimodule::HomBimodule(std::size_t n, std::size_t k, BimoduleKind kind)
    : n_(n), k_(k), kind_(kind), small_(identify(n, k, Flavor::Left)), hom_(fk_homomorphism(n, k)) {
  if (hom_.codomain->vertices != small_.osz->vertices) throw AlgebraError("h codomain differs from B_l(n,k)");
}

const QuiverPresentation& HomBimodule::left_algebra() const {
  return kind_ == BimoduleKind::F ? *small_.osz : *hom_.domain;
}

const QuiverPresentation& HomBimodule::right_algebra() const {
  return kind_ == BimoduleKind::F ? *hom_.domain : *small_.osz;
}

BimodulePiece HomBimodule::piece(std::uint32_t left, std::uint32_t right, const MultiDegree& d) const {
  BimodulePiece p{left, right, d, {}};
  std::uint32_t small = kind_ == BimoduleKind::F ? left : right;
  std::uint32_t large = kind_ == BimoduleKind::F ? right : left;
  auto image = hom_.vertex[large];
  if (!image) return p;
  auto s = alpha_index(small_, small), t = alpha_index(small_, *image);
  if (kind_ == BimoduleKind::E) std::swap(s, t);
  if (auto b = small_.B->basis_term(s, t, d)) p.basis.push_back(*b);
  return p;
}

std::vector<BimodulePiece> HomBimodule::pieces(int window) const {
  std::vector<BimodulePiece> out;
  auto degrees = degrees_up_to(n_, window);
  for (std::uint32_t l = 0; l < left_algebra().vertices.size(); ++l)
    for (std::uint32_t r = 0; r < right_algebra().vertices.size(); ++r)
      for (const auto& d : degrees) {
        auto p = piece(l, r, d);
        if (!p.basis.empty()) out.push_back(std::move(p));
      }
  return out;
}

BTildeElement HomBimodule::act_left(const PathElement& a, const BTildeElement& m) const {
  auto g = kind_ == BimoduleKind::F ? small_.phi_canonical(a) : small_.phi_canonical(hom_.apply(a));
  return small_.B->multiply(g, m);
}

BTildeElement HomBimodule::act_right(const BTildeElement& m, const PathElement& b) const {
  auto g = kind_ == BimoduleKind::F ? small_.phi_canonical(hom_.apply(b)) : small_.phi_canonical(b);
  return small_.B->multiply(m, g);
}

std::optional<HomBimodule::Action> HomBimodule::action(const BimodulePiece& src, const PathElement& g,
                                                       bool on_left) const {
  if (g.terms.size() != 1) throw AlgebraError("action needs a single path");
  const auto& key = g.terms.begin()->first;
  const auto& alg = on_left ? left_algebra() : right_algebra();
  auto e = alg.degree(key);
  Action act;
  if (on_left) {
    if (key.tgt != src.left) return std::nullopt;
    act.target = piece(key.src, src.right, degree_add(src.degree, e));
  } else {
    if (key.src != src.right) return std::nullopt;
    act.target = piece(src.left, key.tgt, degree_add(src.degree, e));
  }
  const auto& tb = act.target.basis;
  act.matrix.assign(tb.size(), std::vector<std::int64_t>(src.basis.size(), 0));
  for (std::size_t j = 0; j < src.basis.size(); ++j) {
    auto img = on_left ? act_left(g, single(src.basis[j])) : act_right(single(src.basis[j]), g);
    for (const auto& [t, c] : img.terms) {
      auto it = std::find(tb.begin(), tb.end(), t);
      if (it == tb.end()) throw AlgebraError("action leaves the target piece");
      act.matrix[std::size_t(it - tb.begin())][j] = c;
    }
  }
  return act;
}

HomBimodule fk_bimodule(std::size_t n, std::size_t k) { return HomBimodule(n, k, BimoduleKind::F); }
HomBimodule e2k_bimodule(std::size_t n, std::size_t k) { return HomBimodule(n, k, BimoduleKind::E); }

FSquaredReport f_squared_zero(std::size_t n, std::size_t k, int window) {
  if (k + 2 > n) throw AlgebraError("F_k F_{k+1} needs k+2 <= n");
  FSquaredReport rep;
  auto F1 = fk_bimodule(n, k), F2 = fk_bimodule(n, k + 1);
  const auto& mid = F1.large();
  if (mid.vertices != F2.small().osz->vertices) throw AlgebraError("middle algebras differ");
  for (std::uint32_t y = 0; y < mid.vertices.size(); ++y) {
    auto x = parse_dots(mid.vertices[y]);
    bool zero = x.empty() || x.front() != 0;
    if (zero && F1.hom().vertex[y]) rep.idempotents_killed = false;
  }
  auto gens = presentation_generators(mid);
  auto degrees = degrees_up_to(n, window);
  const auto& left = F1.left_algebra();
  const auto& right = F2.right_algebra();
  for (std::uint32_t x = 0; x < left.vertices.size(); ++x)
    for (std::uint32_t z = 0; z < right.vertices.size(); ++z) {
      // pieces by middle vertex
      std::vector<std::vector<BimodulePiece>> P1(mid.vertices.size()), P2(mid.vertices.size());
      for (std::uint32_t y = 0; y < mid.vertices.size(); ++y)
        for (const auto& d : degrees) {
          auto a = F1.piece(x, y, d);
          if (!a.basis.empty()) P1[y].push_back(std::move(a));
          auto b = F2.piece(y, z, d);
          if (!b.basis.empty()) P2[y].push_back(std::move(b));
        }
      std::map<MultiDegree, Coequalizer> cells;
      for (std::uint32_t y = 0; y < mid.vertices.size(); ++y)
        for (const auto& p : P1[y])
          for (const auto& q : P2[y]) {
            auto d = degree_add(p.degree, q.degree);
            if (total_degree(d) > window) continue;
            for (const auto& m : p.basis)
              for (const auto& b : q.basis) cells[d].add_generator({y, m, b});
          }
      for (const auto& g : gens) {
        const auto& key = g.terms.begin()->first;
        auto e = mid.degree(key);
        for (const auto& p : P1[key.src])
          for (const auto& q : P2[key.tgt]) {
            auto d = degree_add(degree_add(p.degree, e), q.degree);
            if (total_degree(d) > window) continue;
            for (const auto& m : p.basis)
              for (const auto& b : q.basis) {
                std::vector<std::pair<Coequalizer::Key, std::int64_t>> rel;
                for (const auto& [t, c] : F1.act_right(single(m), g).terms) rel.push_back({{key.tgt, t, b}, c});
                for (const auto& [t, c] : F2.act_left(g, single(b)).terms) rel.push_back({{key.src, m, t}, -c});
                cells[d].add_relation(rel);
              }
          }
      }
      for (auto& [d, c] : cells) {
        TensorCell cell{left.vertices[x], right.vertices[z], d, c.generators(), c.relations(), c.solve()};
        if ((cell.rank.rank != 0 || !cell.rank.torsion.empty()) && !rep.witness)
          rep.witness = "tensor nonzero at " + cell.left + "," + cell.right + " degree " + str(d);
        rep.cells.push_back(std::move(cell));
      }
    }
  return rep;
}

FactorizationReport factorization_check(std::size_t n, std::size_t k, int window) {
  FactorizationReport rep;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (!rep.witness) rep.witness = msg;
  };
  RationalVector z(n + 1);
  z[0] = Rational(1, 2);
  for (std::size_t i = 1; i <= n; ++i) z[i] = Rational(long(i));
  auto Vhat = vandermonde_left(Rational(0), z, k + 1);
  auto V = delete_hyperplane(Vhat, 1);
  auto Vs = signed_restrict(Vhat, 1);
  auto IV = identify(n, k + 1, Flavor::Left, V);
  auto IS = identify(n, k, Flavor::Left, Vs);
  auto h = fk_homomorphism(n, k);
  if (h.domain->vertices != IV.osz->vertices || h.codomain->vertices != IS.osz->vertices)
    throw AlgebraError("OSz presentations differ");

  auto del = del_btilde(Vhat, 1, '+');
  auto rp = rest_prime_btilde(Vhat, 1, '+');
  const BTilde& Bhat = rp.source();
  const BTilde& Bp = rp.target();
  const BTilde& Bs = *IS.B;
  if (del.domain->vertices != IV.bpres->vertices || del.domain->arrows.size() != IV.bpres->arrows.size())
    throw AlgebraError("deletion domain differs from B~(V)");
  if (!same_canonical_algebra(Bp.negated(), Bs)) fail(rep.composite_matches, "sign change is not an isomorphism");

  auto to_signed = [&](const BTildeElement& x) {
    BTildeElement out;
    for (const auto& [t, c] : x.terms) {
      auto a = Bs.index(negate(Bp.P()[t.a])), b = Bs.index(negate(Bp.P()[t.b]));
      if (!a || !b) throw AlgebraError("sign change leaves B~(V'')");
      out += Bs.term(*a, *b, t.exps, c);
    }
    return out;
  };

  for (const auto& g : presentation_generators(*IV.osz)) {
    ++rep.generators;
    auto via = to_signed(rp.apply(evaluate(*del.codomain, Bhat, del.apply(IV.phi.apply(g)))));
    auto direct = IS.phi_canonical(h.apply(g));
    if (via != direct)
      fail(rep.composite_matches, "composite differs from h on " + IV.osz->describe(g.terms.begin()->first) + ": " +
                                      Bs.describe(via) + " vs " + Bs.describe(direct));
  }

  // Rest'' (x) Del' over B~^+(V^), graded by deg m + deg n without the first coordinate.
  std::vector<std::uint32_t> plus;
  for (std::uint32_t a = 0; a < Bhat.P().size(); ++a)
    if (Bhat.P()[a][0] == '+') plus.push_back(a);
  std::vector<BTildeElement> middle;
  for (auto a : plus) {
    middle.push_back(Bhat.e(Bhat.P()[a]));
    for (auto b : plus)
      if (a != b) middle.push_back(Bhat.f(Bhat.P()[a], Bhat.P()[b]));
    for (std::size_t j = 0; j <= n; ++j) middle.push_back(Bhat.times_u(Bhat.e(Bhat.P()[a]), [&] {
      std::vector<int> ex(n + 1, 0);
      ex[j] = 1;
      return ex;
    }()));
  }
  auto degrees = degrees_up_to(n, window);
  PresentedAlgebra oracle(IS.osz, window);
  const BTilde& BV = *IV.B;

  auto tensor = [&](std::uint32_t gamma, std::uint32_t beta, int J) {
    // m in e_gamma B~(V') e_{rho(alpha)}, n in e_alpha B~(V^) e_{+beta} with u_1-exponent <= J
    std::map<std::uint32_t, std::vector<BTerm>> ms, ns;
    auto bplus = Bhat.index(insert_sign(BV.P()[beta], 1, '+'));
    for (auto a : plus) {
      if (auto r = Bp.index(remove_sign(Bhat.P()[a], 1)))
        for (const auto& d : degrees)
          if (auto t = Bp.basis_term(gamma, *r, d)) ms[a].push_back(*t);
      if (!bplus) continue;
      for (int j = 0; j <= J; ++j)
        for (const auto& d : degrees) {
          MultiDegree full{2 * j};
          full.insert(full.end(), d.begin(), d.end());
          if (auto t = Bhat.basis_term(a, *bplus, full)) ns[a].push_back(*t);
        }
    }
    std::map<MultiDegree, Coequalizer> cells;
    for (auto a : plus)
      for (const auto& m : ms[a])
        for (const auto& b : ns[a]) {
          auto d = degree_add(Bp.degree(m), drop_first(Bhat.degree(b)));
          if (total_degree(d) <= window) cells[d].add_generator({a, m, b});
        }
    for (const auto& g : middle) {
      if (g.is_zero()) continue;
      const auto& gt = g.terms.begin()->first;
      auto rg = rp.apply(g);
      auto e = drop_first(Bhat.degree(gt));
      for (const auto& m : ms[gt.a])
        for (const auto& b : ns[gt.b]) {
          auto d = degree_add(degree_add(Bp.degree(m), e), drop_first(Bhat.degree(b)));
          if (total_degree(d) > window) continue;
          auto gb = Bhat.multiply(g, single(b));
          if (std::any_of(gb.terms.begin(), gb.terms.end(), [&](const auto& tc) { return tc.first.exps[0] > J; }))
            continue;
          std::vector<std::pair<Coequalizer::Key, std::int64_t>> rel;
          for (const auto& [t, c] : Bp.multiply(single(m), rg).terms) rel.push_back({{gt.b, t, b}, c});
          for (const auto& [t, c] : gb.terms) rel.push_back({{gt.a, m, t}, -c});
          cells[d].add_relation(rel);
        }
    }
    std::map<MultiDegree, QuotientRank> out;
    for (auto& [d, c] : cells) out[d] = c.solve();
    return out;
  };

  int J = window / 2 + 1;
  for (const auto& a2 : Bs.P()) {
    auto gamma = Bp.index(negate(a2));
    if (!gamma) throw AlgebraError("sign change leaves B~(V')");
    auto x = IS.osz->vertex(format_dots(IS.dots_of(a2)));
    for (std::uint32_t beta = 0; beta < BV.P().size(); ++beta) {
      auto t1 = tensor(*gamma, beta, J), t2 = tensor(*gamma, beta, J + 2);
      auto y = IV.dots_of(BV.P()[beta]);
      bool through = !y.empty() && y.front() == 0;
      std::optional<std::uint32_t> yv;
      if (through) {
        y.erase(y.begin());
        yv = IS.osz->vertex(format_dots(y));
      }
      for (const auto& d : degrees) {
        ++rep.cells;
        QuotientRank r1 = t1.count(d) ? t1[d] : QuotientRank{}, r2 = t2.count(d) ? t2[d] : QuotientRank{};
        std::size_t expected = yv ? oracle.rank(x, *yv, d).rank : 0;
        if (expected) ++rep.nonzero_cells;
        std::string where = a2 + "," + BV.P()[beta] + " degree " + str(d);
        if (r1.rank != r2.rank || r1.torsion != r2.torsion) fail(rep.truncation_stable, "truncation unstable at " + where);
        if (r1.rank != expected || !r1.torsion.empty())
          fail(rep.tensor_matches, "tensor rank " + std::to_string(r1.rank) + " != " + std::to_string(expected) +
                                       " at " + where);
      }
    }
  }
  return rep;
}

}  // namespace hyperconv
