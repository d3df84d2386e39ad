#include "hyperconv/homs.hpp"

#include "hyperconv/convalg.hpp"
#include "hyperconv/dualities.hpp"

#include <array>

namespace hyperconv {

PathElement GeneratorMap::apply(const PathElement& x) const {
  PathElement out;
  for (const auto& [k, c] : x.terms) {
    auto v = vertex[k.src];
    if (!v) continue;
    std::vector<int> ex(codomain->ncoords, 0);
    bool zero = false;
    for (std::size_t j = 0; j < k.uexp.size() && !zero; ++j) {
      if (k.uexp[j] == 0) continue;
      switch (central[j].kind) {
        case CentralImage::Zero: zero = true; break;
        case CentralImage::One: break;
        case CentralImage::Var: ex[central[j].j] += k.uexp[j]; break;
      }
    }
    if (zero) continue;
    PathElement cur = PathElement::single({*v, *v, {}, ex});
    for (auto a : k.arrows) {
      cur = cur * arrow[a];
      if (cur.empty()) break;
    }
    out += cur.scaled(c);
  }
  return out;
}

bool GeneratorMap::preserves_single_grading() const {
  for (std::size_t j = 0; j < grading.size(); ++j)
    if (total_degree(grading[j]) != 1 && central[j].kind != CentralImage::Zero) return false;
  return true;
}

std::vector<PathElement> presentation_generators(const QuiverPresentation& q) {
  std::vector<PathElement> g;
  for (std::uint32_t v = 0; v < q.vertices.size(); ++v) g.push_back(q.idempotent(v));
  for (std::uint32_t a = 0; a < q.arrows.size(); ++a) g.push_back(q.arrow(a));
  for (std::uint32_t v = 0; v < q.vertices.size(); ++v)
    for (std::size_t j = 0; j < q.ncoords; ++j) g.push_back(q.central(v, j));
  return g;
}

WellDefinedReport check_well_defined(const GeneratorMap& f, const BTilde& target) {
  WellDefinedReport r;
  for (std::size_t i = 0; i < f.domain->relations.size(); ++i) {
    ++r.relations;
    auto img = evaluate(*f.codomain, target, f.apply(f.domain->relations[i]));
    if (!img.is_zero()) {
      r.failure = f.name + ": relation '" + f.domain->relation_labels[i] + "' maps to " + target.describe(img);
      return r;
    }
  }
  return r;
}

namespace {

using Pres = std::shared_ptr<const QuiverPresentation>;

Pres apres(const PolarizedArrangement& V) { return std::make_shared<QuiverPresentation>(atilde_presentation(V)); }
Pres bpres(const PolarizedArrangement& V) { return std::make_shared<QuiverPresentation>(btilde_presentation(V)); }

std::optional<std::uint32_t> find_vertex(const QuiverPresentation& q, const std::string& label) {
  if (!q.has_vertex(label)) return std::nullopt;
  return q.vertex(label);
}

PathElement arrow_between(const QuiverPresentation& q, const std::optional<std::uint32_t>& a,
                          const std::optional<std::uint32_t>& b) {
  if (!a || !b) return {};
  long id = q.find_arrow(*a, *b);
  if (id < 0) return {};
  return q.arrow(std::uint32_t(id));
}

GeneratorMap insertion(std::string name, Pres dom, Pres cod, std::size_t i, char s) {
  GeneratorMap f{std::move(name), dom, cod, {}, {}, {}, {}};
  for (const auto& a : dom->vertices) f.vertex.push_back(find_vertex(*cod, insert_sign(a, i, s)));
  for (const auto& ar : dom->arrows) f.arrow.push_back(arrow_between(*cod, f.vertex[ar.src], f.vertex[ar.tgt]));
  for (std::size_t j = 0; j < dom->ncoords; ++j) {
    std::size_t t = j + 1 < i ? j : j + 1;
    f.central.push_back({CentralImage::Var, t});
    MultiDegree d(cod->ncoords, 0);
    d[t] = 1;
    f.grading.push_back(d);
  }
  return f;
}

GeneratorMap removal(std::string name, Pres dom, Pres cod, std::size_t i, char s) {
  GeneratorMap f{std::move(name), dom, cod, {}, {}, {}, {}};
  for (const auto& a : dom->vertices)
    f.vertex.push_back(a[i - 1] == s ? find_vertex(*cod, remove_sign(a, i)) : std::nullopt);
  for (const auto& ar : dom->arrows) f.arrow.push_back(arrow_between(*cod, f.vertex[ar.src], f.vertex[ar.tgt]));
  for (std::size_t j = 0; j < dom->ncoords; ++j) {
    MultiDegree d(cod->ncoords, 0);
    if (j + 1 == i) {
      f.central.push_back({CentralImage::Zero, 0});
    } else {
      std::size_t t = j + 1 < i ? j : j - 1;
      f.central.push_back({CentralImage::Var, t});
      d[t] = 1;
    }
    f.grading.push_back(d);
  }
  return f;
}

std::string sign_tag(std::size_t i, char s) { return "(" + std::to_string(i) + "," + std::string(1, s) + ")"; }

}  // namespace

GeneratorMap rest_atilde(const PolarizedArrangement& V, std::size_t i, char s) {
  return insertion("rest_A" + sign_tag(i, s), apres(restrict_hyperplane(V, i)), apres(V), i, s);
}

GeneratorMap del_atilde(const PolarizedArrangement& V, std::size_t i, char s) {
  return removal("del_A" + sign_tag(i, s), apres(V), apres(delete_hyperplane(V, i)), i, s);
}

GeneratorMap del_btilde(const PolarizedArrangement& V, std::size_t i, char s) {
  return insertion("del_B" + sign_tag(i, s), bpres(delete_hyperplane(V, i)), bpres(V), i, s);
}

GeneratorMap rest_btilde(const PolarizedArrangement& V, std::size_t i, char s) {
  return removal("rest_B" + sign_tag(i, s), bpres(V), bpres(restrict_hyperplane(V, i)), i, s);
}

PrimedMap::PrimedMap(std::shared_ptr<const BTilde> source, std::shared_ptr<const BTilde> target, std::size_t i, char s)
    : src_(std::move(source)), tgt_(std::move(target)), i_(i), s_(s) {}

BTildeElement PrimedMap::apply(const BTildeElement& x) const {
  BTildeElement out;
  for (const auto& [t, c] : x.terms) {
    const auto& a = src_->P()[t.a];
    const auto& b = src_->P()[t.b];
    if (a[i_ - 1] != s_ || b[i_ - 1] != s_) throw AlgebraError("primed map applied outside its domain");
    auto ia = tgt_->index(remove_sign(a, i_)), ib = tgt_->index(remove_sign(b, i_));
    if (!ia || !ib) continue;
    std::vector<int> ex = t.exps;
    ex.erase(ex.begin() + long(i_ - 1));
    out += tgt_->term(*ia, *ib, std::move(ex), c);
  }
  return out;
}

std::optional<std::string> PrimedMap::check(int window) const {
  const auto& P = src_->P();
  std::size_t m = P.size();
  auto in_domain = [&](std::uint32_t a) { return P[a][i_ - 1] == s_; };
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      if (!in_domain(a) || !in_domain(b)) continue;
      auto ia = tgt_->index(remove_sign(P[a], i_)), ib = tgt_->index(remove_sign(P[b], i_));
      if (!ia || !ib) continue;
      for (const auto& S : src_->minimal_sets(a, b)) {
        std::vector<int> ex(src_->n(), 0);
        for (int j : S) ex[j - 1] = 1;
        ex.erase(ex.begin() + long(i_ - 1));
        if (tgt_->admissible(*ia, *ib, ex))
          return "ideal of (" + P[a] + "," + P[b] + ") not sent into the target ideal";
      }
    }
  std::vector<BTerm> terms;
  for (auto& t : basis_terms(*src_, window))
    if (in_domain(t.a) && in_domain(t.b)) terms.push_back(t);
  for (const auto& x : terms)
    for (const auto& y : terms) {
      if (x.b != y.a) continue;
      BTildeElement ex, ey;
      ex.add(x, 1);
      ey.add(y, 1);
      if (apply(src_->multiply(ex, ey)) != tgt_->multiply(apply(ex), apply(ey)))
        return "product not respected: " + src_->describe(ex) + " * " + src_->describe(ey);
    }
  return std::nullopt;
}

std::optional<std::string> PrimedMap::single_grading_witness() const {
  const auto& P = src_->P();
  for (std::uint32_t a = 0; a < P.size(); ++a) {
    if (P[a][i_ - 1] != s_) continue;
    std::vector<int> ex(src_->n(), 0);
    ex[i_ - 1] = 1;
    auto x = src_->term(a, a, ex);
    if (x.is_zero()) continue;
    auto y = apply(x);
    if (!y.is_zero()) return src_->describe(x) + " (degree 2) -> " + tgt_->describe(y) + " (degree 0)";
  }
  return std::nullopt;
}

PrimedMap rest_prime_btilde(const PolarizedArrangement& V, std::size_t i, char s) {
  return PrimedMap(std::make_shared<BTilde>(V), std::make_shared<BTilde>(restrict_hyperplane(V, i)), i, s);
}

PrimedMap del_prime_atilde(const PolarizedArrangement& V, std::size_t i, char s) {
  auto dual = gale_dual(V);
  return PrimedMap(std::make_shared<BTilde>(dual), std::make_shared<BTilde>(restrict_hyperplane(dual, i)), i, s);
}

bool same_canonical_algebra(const BTilde& a, const BTilde& b) {
  if (a.P().size() != b.P().size()) return false;
  std::vector<std::uint32_t> to(a.P().size());
  for (std::uint32_t x = 0; x < a.P().size(); ++x) {
    auto i = b.index(a.P()[x]);
    if (!i) return false;
    to[x] = *i;
  }
  for (std::uint32_t x = 0; x < a.P().size(); ++x)
    for (std::uint32_t y = 0; y < a.P().size(); ++y)
      if (a.minimal_sets(x, y) != b.minimal_sets(to[x], to[y])) return false;
  return true;
}

CompositionReport composition_check(const PolarizedArrangement& Vbig, std::size_t i) {
  CompositionReport rep;
  auto V = delete_hyperplane(Vbig, i);
  auto V2 = restrict_hyperplane(Vbig, i);
  const char signs[2] = {'+', '-'};

  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    if (!rep.witness) rep.witness = std::move(msg);
  };

  // A~ route: A~(V'') -> A~(V') -> A~(V)
  BTilde canon_A_big(gale_dual(Vbig)), canon_A_V(gale_dual(V)), canon_A_V2(gale_dual(V2));
  GeneratorMap RA[2] = {rest_atilde(Vbig, i, '+'), rest_atilde(Vbig, i, '-')};
  GeneratorMap DA[2] = {del_atilde(Vbig, i, '+'), del_atilde(Vbig, i, '-')};
  // B~ route: B~(V) -> B~(V') -> B~(V'')
  BTilde canon_B_big(Vbig), canon_B_V(V), canon_B_V2(V2);
  GeneratorMap DB[2] = {del_btilde(Vbig, i, '+'), del_btilde(Vbig, i, '-')};
  GeneratorMap RB[2] = {rest_btilde(Vbig, i, '+'), rest_btilde(Vbig, i, '-')};

  for (int s = 0; s < 2; ++s) {
    for (auto [f, B] : {std::pair{&RA[s], &canon_A_big}, std::pair{&DA[s], &canon_A_V}, std::pair{&DB[s], &canon_B_big},
                        std::pair{&RB[s], &canon_B_V2}}) {
      auto w = check_well_defined(*f, *B);
      if (!w.ok()) fail(rep.well_defined, *w.failure);
    }
  }

  auto run = [&](const GeneratorMap* first, const GeneratorMap* second, const BTilde& canon_mid,
                 const BTilde& canon_end, bool atilde) {
    std::array<std::array<std::vector<BTildeElement>, 2>, 2> comp;
    auto gens = presentation_generators(*first[0].domain);
    rep.generators += gens.size();
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (const auto& g : gens)
          comp[s1][s2].push_back(evaluate(*second[s2].codomain, canon_end, second[s2].apply(first[s1].apply(g))));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      // first map carries s'' on the A~ side and s' on the B~ side; either way the mixed composites vanish
      if (!comp[0][1][g].is_zero() || !comp[1][0][g].is_zero())
        fail(rep.zero_when_signs_differ, std::string(atilde ? "A" : "B") + " mixed-sign composite nonzero on " +
                                             first[0].domain->describe(gens[g].terms.begin()->first));
      if (comp[0][0][g] != comp[1][1][g])
        fail(rep.independent_of_sign, std::string(atilde ? "A" : "B") + " composites differ on " +
                                          first[0].domain->describe(gens[g].terms.begin()->first));
    }
    for (int s = 0; s < 2; ++s) {
      auto primed = atilde ? del_prime_atilde(Vbig, i, signs[s]) : rest_prime_btilde(Vbig, i, signs[s]);
      if (!same_canonical_algebra(primed.source(), canon_mid) || !same_canonical_algebra(primed.target(), canon_end)) {
        fail(rep.primed_matches, "primed map endpoints differ from the unprimed canonical algebras");
        return;
      }
      if (auto bad = primed.check(4)) fail(rep.well_defined, *bad);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto mid = evaluate(*first[s].codomain, canon_mid, first[s].apply(gens[g]));
        if (primed.apply(mid) != comp[s][s][g])
          fail(rep.primed_matches, std::string(atilde ? "A" : "B") + " primed composite differs on " +
                                       first[0].domain->describe(gens[g].terms.begin()->first));
      }
    }
  };
  run(RA, DA, canon_A_big, canon_A_V, true);
  run(DB, RB, canon_B_big, canon_B_V2, false);
  return rep;
}

}  // namespace hyperconv
