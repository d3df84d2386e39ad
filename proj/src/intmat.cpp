#include "hyperconv/intmat.hpp"

#include <algorithm>
#include <numeric>

namespace hyperconv {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("int64 overflow in lattice reduction");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("int64 overflow in lattice reduction");
  return r;
}

// g = a*x + b*y
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = a / b, t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

void normalize_sign(SparseVec& v) {
  if (!v.empty() && v.front().second < 0)
    for (auto& e : v) e.second = -e.second;
}

}  // namespace

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, std::int64_t ca, std::int64_t cb) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      if (ca != 0) out.emplace_back(a[i].first, mul(ca, a[i].second));
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (cb != 0) out.emplace_back(b[j].first, mul(cb, b[j].second));
      ++j;
    } else {
      std::int64_t s = add(mul(ca, a[i].second), mul(cb, b[j].second));
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_from_terms(std::vector<std::pair<std::uint32_t, std::int64_t>> terms) {
  std::sort(terms.begin(), terms.end());
  SparseVec out;
  for (auto& [i, c] : terms) {
    if (!out.empty() && out.back().first == i)
      out.back().second = add(out.back().second, c);
    else
      out.emplace_back(i, c);
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

bool IntLattice::add(SparseVec v) {
  while (!v.empty()) {
    auto p = v.front().first;
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      normalize_sign(v);
      rows_.emplace(p, std::move(v));
      return true;
    }
    SparseVec& r = it->second;
    std::int64_t a = r.front().second, b = v.front().second;
    if (b % a == 0) {
      v = sparse_add(v, r, 1, -(b / a));
      continue;
    }
    std::int64_t x, y;
    std::int64_t g = ext_gcd(a, b, x, y);
    SparseVec nr = sparse_add(r, v, x, y);
    SparseVec nv = sparse_add(v, r, a / g, -(b / g));
    normalize_sign(nr);
    r = std::move(nr);
    v = std::move(nv);
  }
  return false;
}

bool IntLattice::contains(SparseVec v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) return false;
    const SparseVec& r = it->second;
    std::int64_t a = r.front().second, b = v.front().second;
    if (b % a != 0) return false;
    v = sparse_add(v, r, 1, -(b / a));
  }
  return true;
}

bool IntLattice::unimodular_pivots() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& kv) { return kv.second.front().second == 1; });
}

std::vector<Integer> IntLattice::torsion() const {
  if (unimodular_pivots()) return {};
  std::vector<std::uint32_t> cols;
  for (const auto& [p, r] : rows_)
    for (const auto& e : r) cols.push_back(e.first);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<std::vector<Integer>> m;
  for (const auto& [p, r] : rows_) {
    std::vector<Integer> row(cols.size());
    for (const auto& e : r)
      row[std::lower_bound(cols.begin(), cols.end(), e.first) - cols.begin()] = e.second;
    m.push_back(std::move(row));
  }
  std::vector<Integer> out;
  for (auto& d : smith_invariants(std::move(m)))
    if (d > 1) out.push_back(d);
  return out;
}

QuotientRank quotient_rank(const IntLattice& L) { return {L.dim() - L.rank(), L.torsion()}; }

std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m) {
  std::size_t R = m.size(), C = R ? m[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < R && t < C) {
    // pick smallest nonzero entry in the remaining block
    std::size_t pr = R, pc = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (m[i][j] != 0 && (pr == R || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == R) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m[i][t] == 0) continue;
        Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m[t][j] == 0) continue;
        Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility of the rest of the block
        for (std::size_t i = t + 1; i < R && clean; ++i)
          for (std::size_t j = t + 1; j < C; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t jj = t; jj < C; ++jj) m[t][jj] += m[i][jj];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace hyperconv
