#include "hyperconv/qlinalg.hpp"

#include <algorithm>
#include <cctype>

namespace hyperconv {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw LinalgError("matrix entry count mismatch");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw LinalgError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RationalVector RationalMatrix::col(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  RationalMatrix s(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) s(i, c) = (*this)(idx[i], c);
  return s;
}

RationalMatrix RationalMatrix::drop_row(std::size_t r) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != r) idx.push_back(i);
  return select_rows(idx);
}

RationalMatrix RationalMatrix::append_col(const RationalVector& v) const {
  if (v.size() != rows_) throw LinalgError("append_col: length mismatch");
  RationalMatrix m(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    m(r, cols_) = v[r];
  }
  return m;
}

RationalMatrix RationalMatrix::append_row(const RationalVector& v) const {
  if (v.size() != cols_) throw LinalgError("append_row: length mismatch");
  RationalMatrix m(rows_ + 1, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
  for (std::size_t c = 0; c < cols_; ++c) m(rows_, c) = v[c];
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw LinalgError("matrix product shape mismatch");
  RationalMatrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) += a * o(k, c);
    }
  return p;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw LinalgError("matrix-vector shape mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

RrefResult rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < a.cols() && prow < a.rows(); ++c) {
    std::size_t r = prow;
    while (r < a.rows() && a(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != prow)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(prow, j));
    Rational inv = 1 / a(prow, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(prow, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == prow || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(prow, j);
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

RationalMatrix nullspace(const RationalMatrix& m) {
  auto [red, piv] = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  RationalMatrix ns(m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    ns(free[j], j) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) ns(piv[r], j) = -red(r, free[j]);
  }
  return ns;
}

RationalMatrix orthogonal_complement(const RationalMatrix& basis) {
  if (rank(basis) != basis.cols()) throw LinalgError("not a basis");
  return nullspace(basis.transpose());
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw LinalgError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) l = boost::multiprecision::lcm(l, Integer(denominator(m(r, c))));
    scale *= l;
    for (std::size_t c = 0; c < n; ++c)
      a[r * n + c] = numerator(m(r, c)) * (l / denominator(m(r, c)));
  }
  int sgn = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s * n + k] == 0) ++s;
      if (s == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[s * n + j]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  Rational d(a[n * n - 1] * sgn);
  return d / Rational(scale);
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

PluckerVector plucker(const RationalMatrix& m) {
  if (m.rows() < m.cols()) throw LinalgError("plucker: fewer rows than columns");
  PluckerVector p;
  p.ambient_n = m.rows();
  p.rank_k = m.cols();
  p.subsets = combinations(m.rows(), m.cols());
  p.coords.reserve(p.subsets.size());
  for (const auto& s : p.subsets) p.coords.push_back(determinant(m.select_rows(s)));
  return p;
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

SignReport sign_class(const PluckerVector& p) {
  SignReport rep{SignClass::PositiveProjective, {}};
  for (const auto& c : p.coords) rep.signs.push_back(sign(c));
  for (int s : rep.signs)
    if (s == 0 || s != rep.signs.front()) rep.cls = SignClass::NotPositive;
  return rep;
}

bool is_positive(const RationalMatrix& m) {
  return sign_class(plucker(m)).cls == SignClass::PositiveProjective;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw LinalgError("solve: length mismatch");
  auto [red, piv] = rref(m.append_col(b));
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  RationalVector y(m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) y[piv[r]] = red(r, m.cols());
  return y;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw LinalgError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view s) {
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!valid_int(num)) throw LinalgError("bad rational literal: " + std::string(s));
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
  if (slash == std::string_view::npos) return Rational(p);
  std::string_view den = s.substr(slash + 1);
  if (!valid_int(den) || den[0] == '-' || den[0] == '+') throw LinalgError("bad rational literal: " + std::string(s));
  Integer q{std::string(den)};
  if (q == 0) throw LinalgError("zero denominator: " + std::string(s));
  return Rational(p, q);
}

}  // namespace hyperconv
