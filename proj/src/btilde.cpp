#include "hyperconv/btilde.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hyperconv {

namespace {

// Delta_alpha cap Delta_beta cap H_S nonempty?
bool meets(const PolarizedArrangement& V, const SignSequence& alpha, const std::vector<std::size_t>& equal) {
  const auto& A = V.A();
  const auto& w = V.w();
  std::size_t n = V.n(), k = V.k();
  RationalMatrix AE = A.select_rows(equal);
  RationalVector rhs(equal.size());
  for (std::size_t r = 0; r < equal.size(); ++r) rhs[r] = -w[equal[r]];
  RationalVector y0(k);
  RationalMatrix N = RationalMatrix::identity(k);
  if (!equal.empty()) {
    auto s = solve(AE, rhs);
    if (!s) return false;
    y0 = *s;
    N = nullspace(AE);
  }
  std::vector<bool> in_e(n, false);
  for (auto i : equal) in_e[i] = true;
  Polyhedron p;
  p.dim = N.cols();
  for (std::size_t i = 0; i < n; ++i) {
    if (in_e[i]) continue;
    Rational sg = alpha[i] == '+' ? 1 : -1;
    RationalVector ai = A.row(i);
    Inequality q;
    q.offset = sg * (w[i] + dot(ai, y0));
    q.normal.resize(p.dim);
    for (std::size_t c = 0; c < p.dim; ++c) {
      Rational s = 0;
      for (std::size_t r = 0; r < k; ++r) s += ai[r] * N(r, c);
      q.normal[c] = sg * s;
    }
    if (p.dim == 0) {
      if (q.offset < 0) return false;
      continue;
    }
    p.ineqs.push_back(std::move(q));
  }
  if (p.dim == 0) return true;
  return is_nonempty(p).nonempty;
}

bool contains_set(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

VanishingIdeal vanishing_sets(const PolarizedArrangement& V, const SignSequence& alpha, const SignSequence& beta) {
  VanishingIdeal out{alpha, beta, {}};
  std::size_t n = V.n();
  auto F = flip_positions(alpha, beta);
  // infeasible alpha or beta: the unit ideal
  if (!V.verdict(alpha).feasible || !V.verdict(beta).feasible) {
    out.minimal_sets.push_back({});
    return out;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(F.begin(), F.end(), i) == F.end()) rest.push_back(i);
  for (std::size_t size = 0; size <= rest.size(); ++size) {
    for (const auto& c : combinations(rest.size(), size)) {
      std::vector<int> S;
      for (auto j : c) S.push_back(int(rest[j]) + 1);
      bool pruned = false;
      for (const auto& m : out.minimal_sets)
        if (contains_set(S, m)) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      std::vector<std::size_t> eq(F.begin(), F.end());
      for (auto j : c) eq.push_back(rest[j]);
      std::sort(eq.begin(), eq.end());
      if (!meets(V, alpha, eq)) out.minimal_sets.push_back(S);
    }
    if (!out.minimal_sets.empty() && out.minimal_sets.front().empty()) break;
  }
  return out;
}

void BTildeElement::add(const BTerm& t, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

BTildeElement& BTildeElement::operator+=(const BTildeElement& o) {
  for (const auto& [t, c] : o.terms) add(t, c);
  return *this;
}

BTildeElement BTildeElement::operator+(const BTildeElement& o) const {
  BTildeElement r = *this;
  r += o;
  return r;
}

BTildeElement BTildeElement::operator-(const BTildeElement& o) const {
  BTildeElement r = *this;
  for (const auto& [t, c] : o.terms) r.add(t, -c);
  return r;
}

BTildeElement BTildeElement::scaled(std::int64_t c) const {
  BTildeElement r;
  for (const auto& [t, v] : terms) r.add(t, v * c);
  return r;
}

BTilde::BTilde(const PolarizedArrangement& V) : n_(V.n()) {
  auto sets = enumerate_sets(V);
  P_.assign(sets.P.begin(), sets.P.end());
  for (std::uint32_t i = 0; i < P_.size(); ++i) idx_[P_[i]] = i;
  std::size_t m = P_.size();
  ideals_.assign(m * m, {});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      auto sets_ab = vanishing_sets(V, P_[a], P_[b]).minimal_sets;
      ideals_[b * m + a] = sets_ab;
      ideals_[a * m + b] = std::move(sets_ab);
    }
}

BTilde BTilde::negated() const {
  BTilde r;
  r.n_ = n_;
  r.ideals_ = ideals_;
  for (const auto& a : P_) r.P_.push_back(negate(a));
  for (std::uint32_t i = 0; i < r.P_.size(); ++i) r.idx_[r.P_[i]] = i;
  return r;
}

std::optional<std::uint32_t> BTilde::index(const SignSequence& a) const {
  auto it = idx_.find(a);
  if (it == idx_.end()) return std::nullopt;
  return it->second;
}

VanishingIdeal BTilde::vanishing(std::uint32_t a, std::uint32_t b) const {
  return {P_[a], P_[b], minimal_sets(a, b)};
}

bool BTilde::admissible(std::uint32_t a, std::uint32_t b, const std::vector<int>& exps) const {
  for (const auto& S : minimal_sets(a, b)) {
    bool divides = true;
    for (int i : S)
      if (exps[i - 1] == 0) {
        divides = false;
        break;
      }
    if (divides) return false;
  }
  return true;
}

BTildeElement BTilde::term(std::uint32_t a, std::uint32_t b, std::vector<int> exps, std::int64_t c) const {
  BTildeElement r;
  if (admissible(a, b, exps)) r.add({a, b, std::move(exps)}, c);
  return r;
}

BTildeElement BTilde::e(const SignSequence& a) const { return f(a, a); }

BTildeElement BTilde::f(const SignSequence& a, const SignSequence& b) const {
  auto ia = index(a), ib = index(b);
  if (!ia || !ib) return {};
  return term(*ia, *ib, std::vector<int>(n_, 0));
}

BTildeElement BTilde::unit() const {
  BTildeElement r;
  for (std::uint32_t a = 0; a < P_.size(); ++a) r += term(a, a, std::vector<int>(n_, 0));
  return r;
}

BTildeElement BTilde::u(std::size_t j) const {
  std::vector<int> ex(n_, 0);
  ex[j] = 1;
  return times_u(unit(), ex);
}

BTildeElement BTilde::times_u(const BTildeElement& x, const std::vector<int>& exps) const {
  BTildeElement r;
  for (const auto& [t, c] : x.terms) {
    std::vector<int> ex = t.exps;
    for (std::size_t i = 0; i < n_; ++i) ex[i] += exps[i];
    r += term(t.a, t.b, std::move(ex), c);
  }
  return r;
}

BTildeElement BTilde::reduce(const BTildeElement& x) const {
  BTildeElement r;
  for (const auto& [t, c] : x.terms) r += term(t.a, t.b, t.exps, c);
  return r;
}

BTildeElement BTilde::multiply(const BTildeElement& x, const BTildeElement& y) const {
  BTildeElement r;
  for (const auto& [s, cs] : x.terms)
    for (const auto& [t, ct] : y.terms) {
      if (s.b != t.a) continue;
      const auto& A = P_[s.a];
      const auto& B = P_[s.b];
      const auto& C = P_[t.b];
      std::vector<int> ex(n_);
      for (std::size_t i = 0; i < n_; ++i) ex[i] = s.exps[i] + t.exps[i] + (A[i] == C[i] && A[i] != B[i] ? 1 : 0);
      r += term(s.a, t.b, std::move(ex), cs * ct);
    }
  return r;
}

BTildeElement BTilde::psi(const BTildeElement& x) const {
  BTildeElement r;
  for (const auto& [t, c] : x.terms) r.add({t.b, t.a, t.exps}, c);
  return r;
}

std::vector<std::size_t> BTilde::flip(std::uint32_t a, std::uint32_t b) const {
  return flip_positions(P_[a], P_[b]);
}

MultiDegree BTilde::degree(const BTerm& t) const {
  MultiDegree d(n_, 0);
  for (auto i : flip(t.a, t.b)) d[i] += 1;
  for (std::size_t i = 0; i < n_; ++i) d[i] += 2 * t.exps[i];
  return d;
}

std::optional<BTerm> BTilde::basis_term(std::uint32_t a, std::uint32_t b, const MultiDegree& d) const {
  MultiDegree rest = d;
  for (auto i : flip(a, b)) rest[i] -= 1;
  std::vector<int> ex(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rest[i] < 0 || rest[i] % 2 != 0) return std::nullopt;
    ex[i] = rest[i] / 2;
  }
  if (!admissible(a, b, ex)) return std::nullopt;
  return BTerm{a, b, ex};
}

int BTilde::graded_rank(const SignSequence& a, const SignSequence& b, const MultiDegree& d) const {
  auto ia = index(a), ib = index(b);
  if (!ia || !ib) return 0;
  return basis_term(*ia, *ib, d) ? 1 : 0;
}

std::string BTilde::describe(const BTildeElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : x.terms) {
    os << (first ? "" : " + ") << c << "*";
    first = false;
    for (std::size_t i = 0; i < n_; ++i)
      for (int e = 0; e < t.exps[i]; ++e) os << "u" << i + 1 << "*";
    os << "f[" << P_[t.a] << "," << P_[t.b] << "]";
  }
  return os.str();
}

QuiverPresentation square_presentation(std::size_t n, const std::set<SignSequence>& vertices,
                                       const std::set<SignSequence>& killed, const std::string& central,
                                       const std::string& kill_label) {
  QuiverPresentation q;
  q.ncoords = n;
  q.central_name = central;
  q.vertices.assign(vertices.begin(), vertices.end());
  for (std::uint32_t v = 0; v < q.vertices.size(); ++v)
    for (std::size_t i = 0; i < n; ++i) {
      auto b = flip_at(q.vertices[v], i);
      if (!vertices.count(b)) continue;
      q.arrows.push_back({v, q.vertex(b), i, "p(" + q.vertices[v] + "," + b + ")"});
    }
  auto arrow = [&](const SignSequence& a, const SignSequence& b) {
    long id = q.find_arrow(q.vertex(a), q.vertex(b));
    return q.arrow(std::uint32_t(id));
  };
  for (const auto& a : killed)
    if (vertices.count(a)) q.add_relation(q.idempotent(q.vertex(a)), kill_label + " " + a);
  for (const auto& a : q.vertices)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto ai = flip_at(a, i), aj = flip_at(a, j), aij = flip_at(ai, j);
        if (!vertices.count(ai) || !vertices.count(aj) || !vertices.count(aij)) continue;
        q.add_relation(arrow(a, ai) * arrow(ai, aij) - arrow(a, aj) * arrow(aj, aij),
                       "square " + a + "->" + aij);
      }
  for (const auto& a : q.vertices)
    for (std::size_t i = 0; i < n; ++i) {
      auto b = flip_at(a, i);
      if (!vertices.count(b)) continue;
      q.add_relation(arrow(a, b) * arrow(b, a) - q.central(q.vertex(a), i), "loop " + a + " via " + b);
    }
  return q;
}

QuiverPresentation btilde_presentation(const PolarizedArrangement& V) {
  auto s = enumerate_sets(V);
  std::set<SignSequence> killed;
  for (const auto& a : s.B)
    if (!s.F.count(a)) killed.insert(a);
  return square_presentation(V.n(), s.B, killed, "u", "infeasible");
}

QuiverPresentation atilde_presentation(const PolarizedArrangement& V) {
  auto s = enumerate_sets(V);
  std::set<SignSequence> killed;
  for (const auto& a : s.F)
    if (!s.B.count(a)) killed.insert(a);
  return square_presentation(V.n(), s.F, killed, "t", "unbounded");
}

BTildeElement evaluate(const QuiverPresentation& q, const BTilde& B, const PathElement& x) {
  BTildeElement out;
  for (const auto& [k, c] : x.terms) {
    BTildeElement cur = B.e(q.vertices[k.src]);
    for (auto a : k.arrows) {
      if (cur.is_zero()) break;
      cur = B.multiply(cur, B.f(q.vertices[q.arrows[a].src], q.vertices[q.arrows[a].tgt]));
    }
    std::vector<int> ex(B.n(), 0);
    for (std::size_t i = 0; i < k.uexp.size(); ++i) ex[i] = k.uexp[i];
    out += B.times_u(cur, ex).scaled(c);
  }
  return out;
}

std::optional<std::vector<SignSequence>> geodesic(const BTilde& B, const SignSequence& a, const SignSequence& b) {
  if (!B.in_P(a) || !B.in_P(b)) return std::nullopt;
  std::map<SignSequence, SignSequence> parent{{a, a}};
  std::deque<SignSequence> queue{a};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (cur == b) break;
    for (auto i : flip_positions(cur, b)) {
      auto nx = flip_at(cur, i);
      if (!B.in_P(nx) || parent.count(nx)) continue;
      parent[nx] = cur;
      queue.push_back(nx);
    }
  }
  if (!parent.count(b)) return std::nullopt;
  std::vector<SignSequence> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace hyperconv
