#include "hyperconv/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperconv {

int total_degree(const MultiDegree& d) { return std::accumulate(d.begin(), d.end(), 0); }

MultiDegree degree_add(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::vector<MultiDegree> degrees_up_to(std::size_t n, int total) {
  std::vector<MultiDegree> out;
  MultiDegree d(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      out.push_back(d);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      d[i] = v;
      self(self, i + 1, left - v);
    }
    d[i] = 0;
  };
  rec(rec, 0, total);
  return out;
}

PathElement PathElement::single(PathKey key, std::int64_t c) {
  PathElement e;
  e.add(key, c);
  return e;
}

void PathElement::add(const PathKey& key, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

PathElement& PathElement::operator+=(const PathElement& o) {
  for (const auto& [k, c] : o.terms) add(k, c);
  return *this;
}

PathElement PathElement::operator-(const PathElement& o) const {
  PathElement r = *this;
  for (const auto& [k, c] : o.terms) r.add(k, -c);
  return r;
}

PathElement PathElement::scaled(std::int64_t c) const {
  PathElement r;
  for (const auto& [k, v] : terms) r.add(k, v * c);
  return r;
}

PathElement PathElement::operator*(const PathElement& o) const {
  PathElement r;
  for (const auto& [a, ca] : terms)
    for (const auto& [b, cb] : o.terms) {
      if (a.tgt != b.src) continue;
      PathKey k{a.src, b.tgt, a.arrows, a.uexp};
      k.arrows.insert(k.arrows.end(), b.arrows.begin(), b.arrows.end());
      if (k.uexp.size() < b.uexp.size()) k.uexp.resize(b.uexp.size(), 0);
      for (std::size_t i = 0; i < b.uexp.size(); ++i) k.uexp[i] += b.uexp[i];
      r.add(k, ca * cb);
    }
  return r;
}

std::uint32_t QuiverPresentation::vertex(const std::string& label) const {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  if (it == vertices.end()) throw AlgebraError("unknown vertex " + label);
  return std::uint32_t(it - vertices.begin());
}

bool QuiverPresentation::has_vertex(const std::string& label) const {
  return std::find(vertices.begin(), vertices.end(), label) != vertices.end();
}

long QuiverPresentation::find_arrow(std::uint32_t src, std::uint32_t tgt) const {
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].src == src && arrows[a].tgt == tgt) return long(a);
  return -1;
}

PathElement QuiverPresentation::idempotent(std::uint32_t v) const {
  return PathElement::single({v, v, {}, std::vector<int>(ncoords, 0)});
}

PathElement QuiverPresentation::arrow(std::uint32_t a) const {
  return PathElement::single({arrows[a].src, arrows[a].tgt, {a}, std::vector<int>(ncoords, 0)});
}

PathElement QuiverPresentation::central(std::uint32_t v, std::size_t j, int power) const {
  std::vector<int> u(ncoords, 0);
  u[j] = power;
  return PathElement::single({v, v, {}, u});
}

MultiDegree QuiverPresentation::degree(const PathKey& p) const {
  MultiDegree d(ncoords, 0);
  for (auto a : p.arrows) d[arrows[a].coord] += 1;
  for (std::size_t i = 0; i < p.uexp.size(); ++i) d[i] += 2 * p.uexp[i];
  return d;
}

void QuiverPresentation::add_relation(PathElement r, std::string label) {
  if (r.empty()) return;
  const PathKey& first = r.terms.begin()->first;
  MultiDegree d = degree(first);
  for (const auto& [k, c] : r.terms)
    if (k.src != first.src || k.tgt != first.tgt || degree(k) != d)
      throw AlgebraError("relation is not homogeneous: " + label);
  relations.push_back(std::move(r));
  relation_labels.push_back(std::move(label));
}

std::string QuiverPresentation::describe(const PathKey& p) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < p.uexp.size(); ++i)
    for (int e = 0; e < p.uexp[i]; ++e) {
      os << (any ? "*" : "") << central_name << i + 1;
      any = true;
    }
  if (p.arrows.empty()) {
    os << (any ? "*" : "") << "e[" << vertices[p.src] << "]";
  } else {
    for (auto a : p.arrows) {
      os << (any ? "*" : "") << arrows[a].name;
      any = true;
    }
  }
  return os.str();
}

PresentedAlgebra::PresentedAlgebra(std::shared_ptr<const QuiverPresentation> q, int max_total_degree)
    : q_(std::move(q)), max_total_(max_total_degree) {
  const auto& Q = *q_;
  std::size_t V = Q.vertices.size();
  paths_.assign(V, std::vector<PathsByDegree>(V));
  std::vector<std::vector<std::uint32_t>> out(V);
  for (std::uint32_t a = 0; a < Q.arrows.size(); ++a) out[Q.arrows[a].src].push_back(a);
  struct Partial {
    std::uint32_t at;
    std::vector<std::uint32_t> arrows;
    MultiDegree deg;
  };
  for (std::uint32_t s = 0; s < V; ++s) {
    std::vector<Partial> frontier{{s, {}, MultiDegree(Q.ncoords, 0)}};
    for (int len = 0; len <= max_total_; ++len) {
      std::vector<Partial> next;
      for (auto& p : frontier) {
        if (len < max_total_)
          for (auto a : out[p.at]) {
            Partial np = p;
            np.at = Q.arrows[a].tgt;
            np.arrows.push_back(a);
            np.deg[Q.arrows[a].coord] += 1;
            next.push_back(std::move(np));
          }
        paths_[s][p.at][p.deg].push_back(std::move(p.arrows));
      }
      frontier = std::move(next);
    }
  }
  for (const auto& r : Q.relations) {
    const PathKey& k = r.terms.begin()->first;
    rel_info_.push_back({k.src, k.tgt, Q.degree(k)});
  }
}

namespace {

bool leq_even(const MultiDegree& a, const MultiDegree& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (a[i] > d[i] || (d[i] - a[i]) % 2 != 0) return false;
  return true;
}

bool leq(const MultiDegree& a, const MultiDegree& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (a[i] > d[i]) return false;
  return true;
}

}  // namespace

PresentedAlgebra::Cell PresentedAlgebra::build(std::uint32_t src, std::uint32_t tgt, const MultiDegree& d) const {
  const auto& Q = *q_;
  Cell c;
  for (const auto& [deg, ps] : paths_[src][tgt])
    if (leq_even(deg, d))
      for (const auto& p : ps) c.basis.emplace(p, std::uint32_t(c.basis.size()));
  c.lattice = IntLattice(c.basis.size());
  if (c.basis.empty()) return c;
  std::vector<std::uint32_t> word;
  for (std::size_t r = 0; r < Q.relations.size(); ++r) {
    const auto& info = rel_info_[r];
    if (!leq(info.deg, d)) continue;
    for (const auto& [deg1, ps1] : paths_[src][info.src]) {
      MultiDegree d1 = degree_add(deg1, info.deg);
      if (!leq(d1, d)) continue;
      for (const auto& [deg2, ps2] : paths_[info.tgt][tgt]) {
        if (!leq_even(degree_add(d1, deg2), d)) continue;
        for (const auto& p1 : ps1)
          for (const auto& p2 : ps2) {
            std::vector<std::pair<std::uint32_t, std::int64_t>> v;
            for (const auto& [k, coef] : Q.relations[r].terms) {
              word = p1;
              word.insert(word.end(), k.arrows.begin(), k.arrows.end());
              word.insert(word.end(), p2.begin(), p2.end());
              auto it = c.basis.find(word);
              if (it == c.basis.end()) throw AlgebraError("internal: relation instance outside basis");
              v.emplace_back(it->second, coef);
            }
            c.lattice.add(sparse_from_terms(std::move(v)));
          }
      }
    }
  }
  return c;
}

const PresentedAlgebra::Cell& PresentedAlgebra::cell(std::uint32_t src, std::uint32_t tgt, const MultiDegree& d) const {
  if (total_degree(d) > max_total_) throw AlgebraError("degree window exceeded");
  CellKey key{src, tgt, d};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cells_.find(key);
    if (it != cells_.end()) return *it->second;
  }
  auto built = std::make_unique<Cell>(build(src, tgt, d));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = cells_.emplace(key, std::move(built));
  return *it->second;
}

QuotientRank PresentedAlgebra::rank(std::uint32_t src, std::uint32_t tgt, const MultiDegree& d) const {
  return quotient_rank(cell(src, tgt, d).lattice);
}

std::size_t PresentedAlgebra::basis_size(std::uint32_t src, std::uint32_t tgt, const MultiDegree& d) const {
  return cell(src, tgt, d).basis.size();
}

bool PresentedAlgebra::is_zero(const PathElement& x) const {
  std::map<CellKey, std::vector<std::pair<std::uint32_t, std::int64_t>>> groups;
  std::map<CellKey, const Cell*> cells;
  for (const auto& [k, c] : x.terms) {
    CellKey key{k.src, k.tgt, q_->degree(k)};
    auto it = cells.find(key);
    if (it == cells.end()) it = cells.emplace(key, &cell(k.src, k.tgt, key.d)).first;
    auto b = it->second->basis.find(k.arrows);
    if (b == it->second->basis.end()) throw AlgebraError("internal: path missing from its cell");
    groups[key].emplace_back(b->second, c);
  }
  for (auto& [key, v] : groups)
    if (!cells.at(key)->lattice.contains(sparse_from_terms(std::move(v)))) return false;
  return true;
}

std::string to_dot(const QuiverPresentation& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v) os << "  v" << v << " [label=\"" << q.vertices[v] << "\"];\n";
  for (const auto& a : q.arrows) os << "  v" << a.src << " -> v" << a.tgt << " [label=\"" << a.name << "\"];\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    for (std::size_t j = 0; j < q.ncoords; ++j)
      os << "  v" << v << " -> v" << v << " [label=\"" << q.central_name << j + 1
         << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hyperconv
