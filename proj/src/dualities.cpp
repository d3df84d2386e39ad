#include "hyperconv/dualities.hpp"

namespace hyperconv {

PolarizedArrangement gale_dual(const PolarizedArrangement& V) {
  const RationalMatrix& A = V.A();
  RationalMatrix B = orthogonal_complement(A);
  // v in V with A^T v = x; it is the representative of xi orthogonal to V^perp.
  RationalVector v(V.n());
  if (V.k() > 0) {
    RationalMatrix At = A.transpose();
    auto y = solve(At * A, V.x());
    v = A * *y;
  }
  RationalVector w2(V.n());
  for (std::size_t i = 0; i < V.n(); ++i) w2[i] = -v[i];
  RationalVector x2 = B.transpose() * V.w();
  for (auto& e : x2) e = -e;
  return PolarizedArrangement(Arrangement(std::move(B), std::move(w2)), std::move(x2));
}

Arrangement alt_map(const Arrangement& V) {
  RationalMatrix A = V.A();
  RationalVector w = V.w();
  for (std::size_t i = 1; i < V.n(); i += 2) {
    for (std::size_t j = 0; j < V.k(); ++j) A(i, j) = -A(i, j);
    w[i] = -w[i];
  }
  return Arrangement(std::move(A), std::move(w));
}

// With alt(A) as the new basis the column coordinates of alt(xi) are unchanged.
PolarizedArrangement alt_map(const PolarizedArrangement& V) { return PolarizedArrangement(alt_map(V.base()), V.x()); }

PolarizedArrangement polarization_reverse(const PolarizedArrangement& V) {
  RationalVector x = V.x();
  for (auto& e : x) e = -e;
  return PolarizedArrangement(V.base(), std::move(x));
}

PolarizedArrangement alt_gale(const PolarizedArrangement& V) { return polarization_reverse(alt_map(gale_dual(V))); }

namespace {

void check_index(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw ArrangementError("hyperplane index out of range");
}

RationalVector drop(const RationalVector& v, std::size_t r) {
  RationalVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != r) out.push_back(v[i]);
  return out;
}

struct Restricted {
  RationalMatrix A;
  RationalVector w;
  RationalMatrix N;
};

Restricted restrict_data(const Arrangement& V, std::size_t i) {
  check_index(V.n(), i);
  RationalVector a = V.A().row(i - 1);
  Rational norm2 = dot(a, a);
  if (norm2 == 0) throw ArrangementError("restriction undefined: V lies in the coordinate hyperplane");
  RationalVector y0(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) y0[j] = -V.w()[i - 1] * a[j] / norm2;
  RationalMatrix N = nullspace(RationalMatrix::from_rows({a}));
  RationalMatrix AN = V.A() * N;
  RationalVector shift = V.A() * y0;
  RationalVector w(V.n());
  for (std::size_t j = 0; j < V.n(); ++j) w[j] = V.w()[j] + shift[j];
  return {AN.drop_row(i - 1), drop(w, i - 1), N};
}

void negate_tail(RationalMatrix& A, RationalVector& w, std::size_t i) {
  for (std::size_t r = i - 1; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(r, c) = -A(r, c);
    w[r] = -w[r];
  }
}

}  // namespace

Arrangement delete_hyperplane(const Arrangement& V, std::size_t i) {
  check_index(V.n(), i);
  RationalMatrix A = V.A().drop_row(i - 1);
  if (rank(A) != V.k()) throw ArrangementError("deletion undefined: V contains the coordinate axis");
  return Arrangement(std::move(A), drop(V.w(), i - 1));
}

PolarizedArrangement delete_hyperplane(const PolarizedArrangement& V, std::size_t i) {
  return PolarizedArrangement(delete_hyperplane(V.base(), i), V.x());
}

Arrangement restrict_hyperplane(const Arrangement& V, std::size_t i) {
  auto r = restrict_data(V, i);
  return Arrangement(std::move(r.A), std::move(r.w));
}

PolarizedArrangement restrict_hyperplane(const PolarizedArrangement& V, std::size_t i) {
  auto r = restrict_data(V.base(), i);
  RationalVector x = r.N.transpose() * V.x();
  return PolarizedArrangement(Arrangement(std::move(r.A), std::move(r.w)), std::move(x));
}

Arrangement signed_restrict(const Arrangement& V, std::size_t i) {
  auto r = restrict_data(V, i);
  negate_tail(r.A, r.w, i);
  return Arrangement(std::move(r.A), std::move(r.w));
}

PolarizedArrangement signed_restrict(const PolarizedArrangement& V, std::size_t i) {
  auto r = restrict_data(V.base(), i);
  RationalVector x = r.N.transpose() * V.x();
  negate_tail(r.A, r.w, i);
  return PolarizedArrangement(Arrangement(std::move(r.A), std::move(r.w)), std::move(x));
}

PolarizedArrangement global_negation(const PolarizedArrangement& V) {
  RationalVector w = V.w(), x = V.x();
  for (auto& e : w) e = -e;
  for (auto& e : x) e = -e;
  return PolarizedArrangement(Arrangement(V.A(), std::move(w)), std::move(x));
}

SignSequence insert_sign(const SignSequence& a, std::size_t i, char s) {
  return a.substr(0, i - 1) + s + a.substr(i - 1);
}

SignSequence remove_sign(const SignSequence& a, std::size_t i) { return a.substr(0, i - 1) + a.substr(i); }

}  // namespace hyperconv
