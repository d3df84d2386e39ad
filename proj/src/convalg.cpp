#include "hyperconv/convalg.hpp"

#include "hyperconv/dualities.hpp"

#include <algorithm>

namespace hyperconv {

RankComparison compare_presented_ranks(const PresentedAlgebra& alg, const BTilde& B, int window,
                                       const LabelMap& label) {
  const auto& q = alg.presentation();
  RankComparison out;
  auto lab = [&](const std::string& v) -> std::optional<SignSequence> { return label ? label(v) : v; };
  auto degrees = degrees_up_to(q.ncoords, window);
  for (std::uint32_t s = 0; s < q.vertices.size(); ++s) {
    auto ls = lab(q.vertices[s]);
    for (std::uint32_t t = 0; t < q.vertices.size(); ++t) {
      auto lt = lab(q.vertices[t]);
      for (const auto& d : degrees) {
        auto r = alg.rank(s, t, d);
        int expected = (ls && lt) ? B.graded_rank(*ls, *lt, d) : 0;
        ++out.cells;
        if (int(r.rank) != expected || !r.torsion.empty()) {
          out.witness = RankMismatch{q.vertices[s], q.vertices[t], d, r.rank, expected, r.torsion};
          return out;
        }
      }
    }
  }
  return out;
}

RankComparison compare_atilde(const PolarizedArrangement& V, int window) {
  auto q = std::make_shared<QuiverPresentation>(atilde_presentation(V));
  PresentedAlgebra alg(q, window);
  BTilde B(gale_dual(V));
  return compare_presented_ranks(alg, B, window);
}

BTildePrime::BTildePrime(const PolarizedArrangement& V) : B(V), K(enumerate_sets(V).K) {}

int BTildePrime::graded_rank(const SignSequence& a, const SignSequence& b, const MultiDegree& d) const {
  if (!K.count(a) || !K.count(b)) return 0;
  return B.graded_rank(a, b, d);
}

RankComparison compare_prime(const BTildePrime& x, const BTildePrime& y, int window) {
  RankComparison out;
  if (x.K != y.K) {
    out.witness = RankMismatch{"K", "K", {}, x.K.size(), int(y.K.size()), {}};
    return out;
  }
  for (const auto& a : x.K)
    for (const auto& b : x.K)
      for (const auto& d : degrees_up_to(x.B.n(), window)) {
        ++out.cells;
        int rx = x.graded_rank(a, b, d), ry = y.graded_rank(a, b, d);
        if (rx != ry) {
          out.witness = RankMismatch{a, b, d, std::size_t(rx), ry, {}};
          return out;
        }
      }
  return out;
}

namespace {

std::vector<std::vector<int>> exponent_vectors(std::size_t n, int total) {
  std::vector<std::vector<int>> out;
  for (auto& d : degrees_up_to(n, total))
    if (total_degree(d) == total) out.push_back(d);
  return out;
}

std::vector<BTildeElement> generators(const BTilde& B) {
  std::vector<BTildeElement> g;
  const auto& P = B.P();
  for (const auto& a : P) g.push_back(B.e(a));
  for (const auto& a : P)
    for (std::size_t i = 0; i < B.n(); ++i) {
      auto b = flip_at(a, i);
      if (B.in_P(b)) g.push_back(B.f(a, b));
    }
  for (std::size_t j = 0; j < B.n(); ++j) g.push_back(B.u(j));
  return g;
}

}  // namespace

bool is_central(const BTilde& B, const BTildeElement& z) {
  for (const auto& g : generators(B))
    if (B.multiply(z, g) != B.multiply(g, z)) return false;
  return true;
}

CenterPiece center_graded(const BTilde& B, int degree) {
  CenterPiece out;
  out.degree = degree;
  if (degree % 2 != 0) return out;
  std::vector<BTerm> unknowns;
  for (std::uint32_t a = 0; a < B.P().size(); ++a)
    for (auto& ex : exponent_vectors(B.n(), degree / 2))
      if (B.admissible(a, a, ex)) unknowns.push_back({a, a, ex});
  if (unknowns.empty()) return out;
  // one row per (generator, output term)
  auto gens = generators(B);
  std::map<std::pair<std::size_t, BTerm>, std::size_t> row_of;
  std::vector<std::map<std::size_t, std::int64_t>> sparse_rows;
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (std::size_t x = 0; x < unknowns.size(); ++x) {
      BTildeElement z;
      z.add(unknowns[x], 1);
      auto c = B.multiply(z, gens[gi]) - B.multiply(gens[gi], z);
      for (const auto& [t, v] : c.terms) {
        auto key = std::make_pair(gi, t);
        auto it = row_of.find(key);
        if (it == row_of.end()) {
          it = row_of.emplace(key, sparse_rows.size()).first;
          sparse_rows.emplace_back();
        }
        sparse_rows[it->second][x] += v;
      }
    }
  RationalMatrix M(sparse_rows.size(), unknowns.size());
  for (std::size_t r = 0; r < sparse_rows.size(); ++r)
    for (const auto& [c, v] : sparse_rows[r]) M(r, c) = v;
  RationalMatrix N = sparse_rows.empty() ? RationalMatrix::identity(unknowns.size()) : nullspace(M);
  out.rank = N.cols();
  for (std::size_t c = 0; c < N.cols(); ++c) {
    Integer l = 1;
    for (std::size_t r = 0; r < N.rows(); ++r) l = boost::multiprecision::lcm(l, Integer(denominator(N(r, c))));
    BTildeElement z;
    for (std::size_t r = 0; r < N.rows(); ++r) {
      Rational v = N(r, c) * Rational(l);
      if (v != 0) z.add(unknowns[r], numerator(v).convert_to<std::int64_t>());
    }
    out.basis.push_back(std::move(z));
  }
  return out;
}

std::size_t center_formula_rank(std::size_t n, std::size_t k, int degree) {
  if (degree % 2 != 0) return 0;
  std::size_t count = 0;
  for (auto& ex : exponent_vectors(n, degree / 2))
    if (std::size_t(std::count_if(ex.begin(), ex.end(), [](int e) { return e > 0; })) <= k) ++count;
  return count;
}

std::size_t finite_quotient_graded_dim(const PolarizedArrangement& V, const BTilde& B, const SignSequence& a,
                                       const SignSequence& b, int degree) {
  auto ia = B.index(a), ib = B.index(b);
  if (!ia || !ib) return 0;
  int rest = degree - int(flip_positions(a, b).size());
  if (rest < 0 || rest % 2 != 0) return 0;
  int m = rest / 2;
  std::size_t n = B.n();
  std::vector<std::vector<int>> top;
  for (auto& ex : exponent_vectors(n, m))
    if (B.admissible(*ia, *ib, ex)) top.push_back(ex);
  if (top.empty() || m == 0) return top.size();
  std::map<std::vector<int>, std::size_t> col;
  for (std::size_t i = 0; i < top.size(); ++i) col[top[i]] = i;
  std::vector<RationalVector> rows;
  const auto& A = V.A();
  for (auto& low : exponent_vectors(n, m - 1)) {
    if (!B.admissible(*ia, *ib, low)) continue;
    for (std::size_t j = 0; j < A.cols(); ++j) {
      RationalVector row(top.size());
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (A(i, j) == 0) continue;
        auto ex = low;
        ex[i] += 1;
        auto it = col.find(ex);
        if (it == col.end()) continue;
        row[it->second] += A(i, j);
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return top.size();
  return top.size() - rank(RationalMatrix::from_rows(rows, top.size()));
}

std::vector<BTerm> basis_terms(const BTilde& B, int window) {
  std::vector<BTerm> out;
  auto m = B.P().size();
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      int f = int(B.flip(a, b).size());
      for (int t = 0; 2 * t + f <= window; ++t)
        for (auto& ex : exponent_vectors(B.n(), t))
          if (B.admissible(a, b, ex)) out.push_back({a, b, ex});
    }
  return out;
}

}  // namespace hyperconv
