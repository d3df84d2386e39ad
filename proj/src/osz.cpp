#include "hyperconv/osz.hpp"

#include <algorithm>
#include <sstream>

namespace hyperconv {

OszVariant parse_variant(const std::string& s) {
  if (s == "full") return OszVariant::Full;
  if (s == "left") return OszVariant::Left;
  if (s == "right") return OszVariant::Right;
  if (s == "prime") return OszVariant::Prime;
  throw AlgebraError("unknown variant " + s);
}

std::string variant_name(OszVariant v) {
  switch (v) {
    case OszVariant::Full: return "full";
    case OszVariant::Left: return "left";
    case OszVariant::Right: return "right";
    case OszVariant::Prime: return "prime";
  }
  return "";
}

namespace {

std::pair<int, int> index_range(const OszSpec& s) {
  int n = int(s.n);
  switch (s.variant) {
    case OszVariant::Full: return {0, n};
    case OszVariant::Left: return {0, n - 1};
    case OszVariant::Right: return {1, n};
    case OszVariant::Prime: return {1, n - 1};
  }
  return {0, n};
}

bool has(const DotSet& x, int v) { return std::binary_search(x.begin(), x.end(), v); }

DotSet moved(const DotSet& x, int from, int to) {
  DotSet y;
  for (int v : x) y.push_back(v == from ? to : v);
  std::sort(y.begin(), y.end());
  return y;
}

struct Step {
  char letter;
  int i;
};

}  // namespace

std::vector<DotSet> osz_vertices(const OszSpec& spec) {
  auto [lo, hi] = index_range(spec);
  std::vector<DotSet> out;
  if (hi < lo) return spec.k == 0 ? std::vector<DotSet>{{}} : out;
  for (const auto& c : combinations(std::size_t(hi - lo + 1), spec.k)) {
    DotSet x;
    for (auto j : c) x.push_back(lo + int(j));
    out.push_back(std::move(x));
  }
  return out;
}

DotSet parse_dots(const std::string& label) {
  DotSet x;
  std::string body = label.substr(1, label.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) x.push_back(std::stoi(tok));
  return x;
}

QuiverPresentation osz_presentation(const OszSpec& spec) {
  QuiverPresentation q;
  q.ncoords = spec.n;
  q.central_name = "U";
  auto verts = osz_vertices(spec);
  std::map<DotSet, std::uint32_t> idx;
  for (const auto& x : verts) {
    idx[x] = std::uint32_t(q.vertices.size());
    q.vertices.push_back(format_dots(x));
  }
  int n = int(spec.n);
  for (const auto& x : verts)
    for (int i = 1; i <= n; ++i) {
      if (!has(x, i - 1) || has(x, i)) continue;
      auto y = moved(x, i - 1, i);
      if (!idx.count(y)) continue;
      q.arrows.push_back({idx[x], idx[y], std::size_t(i - 1), "R" + std::to_string(i)});
      q.arrows.push_back({idx[y], idx[x], std::size_t(i - 1), "L" + std::to_string(i)});
    }
  std::map<std::tuple<std::uint32_t, char, int>, std::uint32_t> arrow_of;
  for (std::uint32_t a = 0; a < q.arrows.size(); ++a)
    arrow_of[{q.arrows[a].src, q.arrows[a].name[0], int(q.arrows[a].coord) + 1}] = a;
  auto walk = [&](std::uint32_t v, std::initializer_list<Step> steps) -> std::optional<PathElement> {
    PathElement p = q.idempotent(v);
    for (auto s : steps) {
      auto it = arrow_of.find({v, s.letter, s.i});
      if (it == arrow_of.end()) return std::nullopt;
      p = p * q.arrow(it->second);
      v = q.arrows[it->second].tgt;
    }
    return p;
  };
  auto name = [](char l, int i) { return std::string(1, l) + std::to_string(i); };
  for (const auto& x : verts) {
    std::uint32_t v = idx[x];
    const std::string& lab = q.vertices[v];
    for (int i = 1; i <= n; ++i) {
      for (auto [a, b] : {std::pair{'R', 'L'}, std::pair{'L', 'R'}})
        if (auto p = walk(v, {{a, i}, {b, i}}))
          q.add_relation(*p - q.central(v, std::size_t(i - 1)), name(a, i) + name(b, i) + "=U" + std::to_string(i) + " at " + lab);
      for (int j = i + 2; j <= n; ++j)
        for (char a : {'R', 'L'})
          for (char b : {'R', 'L'}) {
            auto p1 = walk(v, {{a, i}, {b, j}});
            auto p2 = walk(v, {{b, j}, {a, i}});
            if (p1 && p2) q.add_relation(*p1 - *p2, name(a, i) + name(b, j) + "=" + name(b, j) + name(a, i) + " at " + lab);
          }
      if (i >= 2) {
        if (auto p = walk(v, {{'R', i - 1}, {'R', i}})) q.add_relation(*p, name('R', i - 1) + name('R', i) + "=0 at " + lab);
        if (auto p = walk(v, {{'L', i}, {'L', i - 1}})) q.add_relation(*p, name('L', i) + name('L', i - 1) + "=0 at " + lab);
      }
      if (!has(x, i - 1) && !has(x, i))
        q.add_relation(q.central(v, std::size_t(i - 1)), "U" + std::to_string(i) + "=0 at " + lab);
    }
  }
  return q;
}

PathElement psi_osz(const QuiverPresentation& q, const PathElement& x) {
  PathElement out;
  for (const auto& [k, c] : x.terms) {
    PathKey r{k.tgt, k.src, {}, k.uexp};
    for (auto it = k.arrows.rbegin(); it != k.arrows.rend(); ++it) {
      long back = q.find_arrow(q.arrows[*it].tgt, q.arrows[*it].src);
      if (back < 0) throw AlgebraError("arrow without reverse: " + q.arrows[*it].name);
      r.arrows.push_back(std::uint32_t(back));
    }
    out.add(r, c);
  }
  return out;
}

SignSequence OszIdentification::alpha_of(const DotSet& x) const {
  return side == Flavor::Right ? kappa_r_inv(x, n, k) : kappa_l_inv(x, n);
}

DotSet OszIdentification::dots_of(const SignSequence& a) const {
  return side == Flavor::Right ? kappa_r(a, k) : kappa_l(a, k);
}

OszIdentification identify(std::size_t n, std::size_t k, Flavor side) {
  return identify(n, k, side, side == Flavor::Right ? reference_right(n, k) : reference_left(n, k));
}

OszIdentification identify(std::size_t n, std::size_t k, Flavor side, const PolarizedArrangement& V) {
  if (side == Flavor::Cyclic) throw AlgebraError("identification needs a left or right side");
  OszIdentification I;
  I.n = n;
  I.k = k;
  I.side = side;
  I.V = std::make_shared<PolarizedArrangement>(V);
  auto osz = std::make_shared<QuiverPresentation>(
      osz_presentation({n, k, side == Flavor::Right ? OszVariant::Right : OszVariant::Left}));
  auto bp = std::make_shared<QuiverPresentation>(btilde_presentation(V));
  auto B = std::make_shared<BTilde>(V);
  I.osz = osz;
  I.bpres = bp;
  I.B = B;

  std::vector<MultiDegree> ident;
  std::vector<CentralImage> central;
  for (std::size_t j = 0; j < n; ++j) {
    MultiDegree d(n, 0);
    d[j] = 1;
    ident.push_back(d);
    central.push_back({CentralImage::Var, j});
  }

  GeneratorMap phi{"Phi", osz, bp, {}, {}, central, ident};
  for (const auto& lab : osz->vertices) {
    auto a = I.alpha_of(parse_dots(lab));
    if (!bp->has_vertex(a)) throw AlgebraError("Phi: " + lab + " -> " + a + " is not a bounded sequence");
    phi.vertex.push_back(bp->vertex(a));
  }
  for (const auto& ar : osz->arrows) {
    long id = bp->find_arrow(*phi.vertex[ar.src], *phi.vertex[ar.tgt]);
    if (id < 0) throw AlgebraError("Phi: no arrow for " + ar.name + " at " + osz->vertices[ar.src]);
    if (bp->arrows[id].coord != ar.coord) throw AlgebraError("Phi: degree mismatch for " + ar.name);
    phi.arrow.push_back(bp->arrow(std::uint32_t(id)));
  }

  GeneratorMap psi{"Psi", bp, osz, {}, {}, central, ident};
  for (const auto& a : bp->vertices) {
    if (B->in_P(a))
      psi.vertex.push_back(osz->vertex(format_dots(I.dots_of(a))));
    else
      psi.vertex.push_back(std::nullopt);
  }
  for (const auto& ar : bp->arrows) {
    auto s = psi.vertex[ar.src], t = psi.vertex[ar.tgt];
    if (!s || !t) {
      psi.arrow.emplace_back();
      continue;
    }
    long id = osz->find_arrow(*s, *t);
    if (id < 0 || osz->arrows[id].coord != ar.coord)
      throw AlgebraError("Psi: no dot move for " + ar.name);
    psi.arrow.push_back(osz->arrow(std::uint32_t(id)));
  }
  I.phi = std::move(phi);
  I.psi = std::move(psi);
  return I;
}

namespace {

std::string key_text(const QuiverPresentation& q, const PathElement& g) {
  return g.empty() ? "0" : q.describe(g.terms.begin()->first);
}

}  // namespace

IsoReport verify_isomorphism(std::size_t n, std::size_t k, Flavor side, int window) {
  IsoReport rep;
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    if (!rep.witness) rep.witness = std::move(msg);
  };
  auto I = identify(n, k, side);
  PresentedAlgebra A(I.osz, std::max(window, 2));

  auto w = check_well_defined(I.phi, *I.B);
  if (!w.ok()) fail(rep.phi_well_defined, *w.failure);
  for (std::size_t r = 0; r < I.bpres->relations.size(); ++r)
    if (!A.is_zero(I.psi.apply(I.bpres->relations[r]))) {
      fail(rep.psi_well_defined, "Psi: relation '" + I.bpres->relation_labels[r] + "' is nonzero");
      break;
    }

  for (const auto& g : presentation_generators(*I.osz)) {
    if (!A.equal(I.psi.apply(I.phi.apply(g)), g)) fail(rep.inverse, "Psi(Phi(g)) != g for " + key_text(*I.osz, g));
    if (I.phi_canonical(psi_osz(*I.osz, g)) != I.B->psi(I.phi_canonical(g)))
      fail(rep.intertwines, "psi not intertwined on " + key_text(*I.osz, g));
  }
  for (const auto& g : presentation_generators(*I.bpres))
    if (evaluate(*I.bpres, *I.B, I.phi.apply(I.psi.apply(g))) != evaluate(*I.bpres, *I.B, g))
      fail(rep.inverse, "Phi(Psi(g)) != g for " + key_text(*I.bpres, g));

  auto label = [&](const std::string& v) -> std::optional<SignSequence> { return I.alpha_of(parse_dots(v)); };
  auto cmp = compare_presented_ranks(A, *I.B, window, label);
  rep.cells += cmp.cells;
  if (!cmp.ok()) {
    const auto& m = *cmp.witness;
    std::ostringstream os;
    os << "rank mismatch at " << m.src << "->" << m.tgt << " presented " << m.presented << " expected " << m.expected;
    fail(rep.ranks, os.str());
  }

  // truncation to V'(n,k)
  BTildePrime pl(reference_left(n, k)), pr(reference_right(n, k));
  auto cp = compare_prime(pl, pr, window);
  rep.cells += cp.cells;
  if (!cp.ok()) fail(rep.prime, "truncated algebra depends on the polarization");
  auto prime = osz_vertices({n, k, OszVariant::Prime});
  if (prime.size() != pl.K.size()) fail(rep.prime, "|V'| != |K|");
  for (const auto& x : prime) {
    auto a = kappa_l_inv(x, n);
    if (a != kappa_r_inv(x, n, k) || !pl.K.count(a)) fail(rep.prime, "dot set " + format_dots(x) + " not compact");
  }
  std::vector<std::unique_ptr<PresentedAlgebra>> algs;
  for (auto v : {OszVariant::Full, OszVariant::Left, OszVariant::Right})
    algs.push_back(std::make_unique<PresentedAlgebra>(std::make_shared<QuiverPresentation>(osz_presentation({n, k, v})),
                                                      window));
  for (const auto& x : prime)
    for (const auto& y : prime)
      for (const auto& d : degrees_up_to(n, window)) {
        int expected = pl.graded_rank(kappa_l_inv(x, n), kappa_l_inv(y, n), d);
        for (const auto& alg : algs) {
          const auto& q = alg->presentation();
          auto r = alg->rank(q.vertex(format_dots(x)), q.vertex(format_dots(y)), d);
          ++rep.cells;
          if (int(r.rank) != expected || !r.torsion.empty())
            fail(rep.prime, "truncated rank mismatch at " + format_dots(x) + "->" + format_dots(y));
        }
      }
  return rep;
}

bool CenterReport::ok() const {
  return sum_u_central && basis_central &&
         std::all_of(rows.begin(), rows.end(), [](const CenterRow& r) { return r.commutant == r.formula; });
}

CenterReport center_check(std::size_t n, std::size_t k, Flavor side, int bound) {
  CenterReport rep;
  auto I = identify(n, k, side);
  for (int D = 0; D <= bound; ++D) {
    auto c = center_graded(*I.B, D);
    rep.rows.push_back({D, c.rank, center_formula_rank(n, k, D)});
    for (const auto& z : c.basis)
      if (!is_central(*I.B, z)) rep.basis_central = false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    PathElement s;
    for (std::uint32_t v = 0; v < I.osz->vertices.size(); ++v) s += I.osz->central(v, j);
    auto z = I.phi_canonical(s);
    if (z != I.B->u(j) || !is_central(*I.B, z)) rep.sum_u_central = false;
  }
  return rep;
}

GeneratorMap fk_homomorphism(std::size_t n, std::size_t k) {
  auto dom = std::make_shared<QuiverPresentation>(osz_presentation({n, k + 1, OszVariant::Left}));
  auto cod = std::make_shared<QuiverPresentation>(osz_presentation({n, k, OszVariant::Left}));
  GeneratorMap h{"h", dom, cod, {}, {}, {}, {}};
  for (const auto& lab : dom->vertices) {
    auto x = parse_dots(lab);
    if (!has(x, 0)) {
      h.vertex.push_back(std::nullopt);
      continue;
    }
    x.erase(x.begin());
    h.vertex.push_back(cod->vertex(format_dots(x)));
  }
  for (const auto& ar : dom->arrows) {
    auto s = h.vertex[ar.src], t = h.vertex[ar.tgt];
    if (!s || !t) {
      h.arrow.emplace_back();
      continue;
    }
    long id = cod->find_arrow(*s, *t);
    if (id < 0 || cod->arrows[id].name != ar.name) throw AlgebraError("h: no image for " + ar.name);
    h.arrow.push_back(cod->arrow(std::uint32_t(id)));
  }
  for (std::size_t j = 0; j < n; ++j) {
    MultiDegree d(n, 0);
    d[j] = 1;
    h.central.push_back({CentralImage::Var, j});
    h.grading.push_back(d);
  }
  return h;
}

WellDefinedReport check_fk_homomorphism(std::size_t n, std::size_t k) {
  auto h = fk_homomorphism(n, k);
  PresentedAlgebra target(h.codomain, 2);
  WellDefinedReport r;
  for (std::size_t i = 0; i < h.domain->relations.size(); ++i) {
    ++r.relations;
    if (!target.is_zero(h.apply(h.domain->relations[i]))) {
      r.failure = "h: relation '" + h.domain->relation_labels[i] + "' is nonzero";
      return r;
    }
  }
  for (std::uint32_t a = 0; a < h.domain->arrows.size(); ++a)
    for (const auto& [key, c] : h.arrow[a].terms)
      if (h.codomain->degree(key) != h.domain->degree(h.domain->arrow(a).terms.begin()->first)) {
        r.failure = "h: degree not preserved on " + h.domain->arrows[a].name;
        return r;
      }
  return r;
}

}  // namespace hyperconv
