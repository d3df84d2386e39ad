#include "hyperconv/arrangement.hpp"

#include <algorithm>

namespace hyperconv {

SignSequence flip_at(const SignSequence& a, std::size_t i) {
  SignSequence b = a;
  b[i] = a[i] == '+' ? '-' : '+';
  return b;
}

SignSequence negate(const SignSequence& a) {
  SignSequence b = a;
  for (auto& c : b)
    if (c != '0') c = c == '+' ? '-' : '+';
  return b;
}

std::vector<std::size_t> flip_positions(const SignSequence& a, const SignSequence& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) out.push_back(i);
  return out;
}

std::vector<SignSequence> all_sign_sequences(std::size_t n) {
  std::vector<SignSequence> out;
  out.reserve(std::size_t(1) << n);
  for (std::size_t m = 0; m < (std::size_t(1) << n); ++m) {
    SignSequence s(n, '+');
    for (std::size_t i = 0; i < n; ++i)
      if (m & (std::size_t(1) << (n - 1 - i))) s[i] = '-';
    out.push_back(s);
  }
  return out;
}

std::string format_dots(const DotSet& x) {
  std::string s = "{";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + "}";
}

namespace {

int sval(char c) { return c == '+' ? 1 : (c == '-' ? -1 : 0); }

RationalMatrix with_col(const RationalMatrix& A, const RationalVector& w) { return A.append_col(w); }

}  // namespace

Arrangement::Arrangement(RationalMatrix A, RationalVector w) : A_(std::move(A)), w_(std::move(w)) {
  if (w_.size() != A_.rows()) throw ArrangementError("w must have one entry per hyperplane");
  if (rank(A_) != A_.cols()) throw ArrangementError("A must have full column rank");
  const std::size_t n = A_.rows(), k = A_.cols();
  if (k + 1 <= n) {
    for (const auto& S : combinations(n, k + 1)) {
      RationalVector b;
      for (auto i : S) b.push_back(-w_[i]);
      if (solve(A_.select_rows(S), b))
        throw ArrangementError("arrangement is not simple: k+1 hyperplanes share a point");
    }
  }
}

PolarizedArrangement::PolarizedArrangement(Arrangement base, RationalVector x)
    : base_(std::move(base)), x_(std::move(x)), cache_(std::make_shared<Cache>()) {
  if (x_.size() != base_.k()) throw ArrangementError("xi must have k entries");
  const std::size_t k = base_.k();
  if (k == 0) return;
  // A representative of xi supported on k-1 coordinates exists iff x lies in the span of those rows.
  for (const auto& T : combinations(base_.n(), k - 1)) {
    if (solve(base_.A().select_rows(T).transpose(), x_))
      throw ArrangementError("polarization is not generic");
  }
}

RegionVerdict PolarizedArrangement::verdict(const SignSequence& alpha) const {
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->verdicts.find(alpha);
    if (it != cache_->verdicts.end()) return it->second;
  }
  RegionVerdict v;
  Polyhedron p = region_polyhedron(base_, alpha);
  v.feasible = is_nonempty(p).nonempty;
  v.bounded = !v.feasible || bounded_above(p, x_).status == LpStatus::NonemptyBounded;
  v.compact = v.feasible && recession_cone_trivial(p);
  std::lock_guard<std::mutex> lk(cache_->mu);
  cache_->verdicts.emplace(alpha, v);
  return v;
}

Polyhedron region_polyhedron(const Arrangement& V, const SignSequence& alpha) {
  if (alpha.size() != V.n()) throw ArrangementError("sign sequence length differs from n");
  Polyhedron p{V.k(), {}};
  for (std::size_t i = 0; i < V.n(); ++i) {
    int s = sval(alpha[i]);
    if (s == 0) throw ArrangementError("sign sequence must be over +-");
    Inequality q{V.A().row(i), V.w()[i]};
    if (s < 0) {
      for (auto& a : q.normal) a = -a;
      q.offset = -q.offset;
    }
    p.ineqs.push_back(std::move(q));
  }
  return p;
}

bool is_feasible(const Arrangement& V, const SignSequence& alpha) {
  return is_nonempty(region_polyhedron(V, alpha)).nonempty;
}

bool is_compact(const Arrangement& V, const SignSequence& alpha) {
  Polyhedron p = region_polyhedron(V, alpha);
  return is_nonempty(p).nonempty && recession_cone_trivial(p);
}

bool is_bounded(const PolarizedArrangement& V, const SignSequence& alpha) { return V.verdict(alpha).bounded; }

RegionSets enumerate_sets(const PolarizedArrangement& V, std::size_t cap) {
  if (V.n() > cap) throw ArrangementError("n exceeds enumeration cap");
  RegionSets s;
  for (const auto& a : all_sign_sequences(V.n())) {
    RegionVerdict v = V.verdict(a);
    if (v.feasible) s.F.insert(a);
    if (v.bounded) s.B.insert(a);
    if (v.feasible && v.bounded) s.P.insert(a);
    if (v.compact) s.K.insert(a);
  }
  return s;
}

std::set<SignSequence> feasible_set(const Arrangement& V, std::size_t cap) {
  if (V.n() > cap) throw ArrangementError("n exceeds enumeration cap");
  std::set<SignSequence> out;
  for (const auto& a : all_sign_sequences(V.n()))
    if (is_feasible(V, a)) out.insert(a);
  return out;
}

std::set<SignSequence> compact_set(const Arrangement& V, std::size_t cap) {
  if (V.n() > cap) throw ArrangementError("n exceeds enumeration cap");
  std::set<SignSequence> out;
  for (const auto& a : all_sign_sequences(V.n()))
    if (is_compact(V, a)) out.insert(a);
  return out;
}

std::size_t var(const SignSequence& a) {
  std::size_t v = 0;
  int last = 0;
  for (char c : a) {
    int s = sval(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t var_bar(const SignSequence& a) {
  std::size_t v = 0, zeros = 0;
  int last = 0;
  for (char c : a) {
    int s = sval(c);
    if (s == 0) {
      ++zeros;
      continue;
    }
    if (last == 0) {
      v += zeros;  // leading zeros can each alternate
    } else {
      // m free signs between two fixed ones: parity of the change count is forced.
      bool same = s == last;
      std::size_t m = zeros;
      v += same ? (m % 2 ? m + 1 : m) : (m % 2 ? m : m + 1);
    }
    zeros = 0;
    last = s;
  }
  if (last == 0) return a.empty() ? 0 : a.size() - 1;
  return v + zeros;
}

std::size_t var_l(const SignSequence& a) { return var("+" + a); }

std::size_t var_r(const SignSequence& a, std::size_t k) { return var(a + (k % 2 ? "-" : "+")); }

SignSequence alt(const SignSequence& a) {
  SignSequence b = a;
  for (std::size_t i = 1; i < b.size(); i += 2)
    if (b[i] != '0') b[i] = b[i] == '+' ? '-' : '+';
  return b;
}

RationalVector projection_onto_complement(const RationalMatrix& A, const RationalVector& w) {
  if (A.cols() == 0) return w;
  RationalMatrix At = A.transpose();
  auto y = solve(At * A, At * w);
  if (!y) throw LinalgError("projection: singular Gram matrix");
  RationalVector Ay = A * *y;
  RationalVector u(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) u[i] = w[i] - Ay[i];
  return u;
}

bool positively_oriented(const Arrangement& V) {
  return projection_onto_complement(V.A(), V.w()).front() > 0;
}

bool is_cyclic(const Arrangement& V) {
  bool a = is_positive(V.A()) && is_positive(with_col(V.A(), V.w())) && positively_oriented(V);
  RationalMatrix M(V.n() + 1, V.k() + 1);
  M(0, 0) = 1;
  for (std::size_t i = 0; i < V.n(); ++i) {
    M(i + 1, 0) = V.w()[i];
    for (std::size_t j = 0; j < V.k(); ++j) M(i + 1, j + 1) = V.A()(i, j);
  }
  bool b = is_positive(M);
  if (a != b) throw std::logic_error("cyclicity tests disagree");
  return a;
}

RationalMatrix strong_lift_matrix(const PolarizedArrangement& V, Flavor flavor, const Rational& c) {
  const std::size_t n = V.n(), k = V.k();
  RationalMatrix M(n + 2, k + 1);
  Rational sk = k % 2 ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) M(i + 1, j) = V.A()(i, j);
    M(i + 1, k) = V.w()[i];
  }
  if (flavor == Flavor::Left) {
    for (std::size_t j = 0; j < k; ++j) M(0, j) = V.x()[j];
    M(0, k) = c;
    M(n + 1, k) = sk;
  } else {
    M(0, k) = 1;
    for (std::size_t j = 0; j < k; ++j) M(n + 1, j) = sk * V.x()[j];
    M(n + 1, k) = sk * c;
  }
  return M;
}

std::optional<Rational> find_strong_lift(const PolarizedArrangement& V, Flavor flavor) {
  if (flavor == Flavor::Cyclic) throw ArrangementError("strong lift needs a left or right flavor");
  RationalMatrix M0 = strong_lift_matrix(V, flavor, 0), M1 = strong_lift_matrix(V, flavor, 1);
  auto subsets = combinations(V.n() + 2, V.k() + 1);
  std::vector<std::pair<Rational, Rational>> affine;  // d0 + m c
  for (const auto& S : subsets) {
    Rational d0 = determinant(M0.select_rows(S));
    Rational d1 = determinant(M1.select_rows(S));
    affine.emplace_back(d0, d1 - d0);
  }
  for (int s : {1, -1}) {
    std::optional<Rational> lo, hi;
    bool ok = true;
    for (auto& [d0, m] : affine) {
      if (m == 0) {
        if (sign(d0) != s) ok = false;
        continue;
      }
      Rational root = -d0 / m;
      if (sign(m) == s) {
        if (!lo || root > *lo) lo = root;
      } else {
        if (!hi || root < *hi) hi = root;
      }
    }
    if (!ok) continue;
    if (lo && hi && *lo >= *hi) continue;
    Rational c = lo && hi ? (*lo + *hi) / 2 : lo ? *lo + 1 : hi ? *hi - 1 : Rational(0);
    if (!is_positive(strong_lift_matrix(V, flavor, c))) throw std::logic_error("strong lift failed re-validation");
    return c;
  }
  return std::nullopt;
}

namespace {

bool left_by_definition(const PolarizedArrangement& V) {
  RationalMatrix xi_id(V.n() + 1, V.k());
  for (std::size_t j = 0; j < V.k(); ++j) xi_id(0, j) = V.x()[j];
  for (std::size_t i = 0; i < V.n(); ++i)
    for (std::size_t j = 0; j < V.k(); ++j) xi_id(i + 1, j) = V.A()(i, j);
  return is_positive(V.A().append_col(V.w())) && is_positive(xi_id) && positively_oriented(V.base());
}

bool right_by_definition(const PolarizedArrangement& V) {
  RationalMatrix id_xi(V.n() + 1, V.k());
  Rational sk = V.k() % 2 ? -1 : 1;
  for (std::size_t i = 0; i < V.n(); ++i)
    for (std::size_t j = 0; j < V.k(); ++j) id_xi(i, j) = V.A()(i, j);
  for (std::size_t j = 0; j < V.k(); ++j) id_xi(V.n(), j) = sk * V.x()[j];
  return is_positive(V.A().append_col(V.w())) && is_positive(id_xi) && positively_oriented(V.base());
}

}  // namespace

bool is_left_cyclic(const PolarizedArrangement& V) {
  bool def = left_by_definition(V);
  bool lift = find_strong_lift(V, Flavor::Left).has_value();
  if (def != lift) throw std::logic_error("left cyclicity tests disagree");
  return def;
}

bool is_right_cyclic(const PolarizedArrangement& V) {
  bool def = right_by_definition(V);
  bool lift = find_strong_lift(V, Flavor::Right).has_value();
  if (def != lift) throw std::logic_error("right cyclicity tests disagree");
  return def;
}

RationalVector monomials(const Rational& z, std::size_t k) {
  RationalVector m(k);
  Rational p = 1;
  for (std::size_t j = 0; j < k; ++j) {
    m[j] = p;
    p *= z;
  }
  return m;
}

Arrangement vandermonde(const RationalVector& z, std::size_t k) {
  if (k > z.size()) throw ArrangementError("vandermonde: k exceeds n");
  for (std::size_t i = 1; i < z.size(); ++i)
    if (!(z[i - 1] < z[i])) throw ArrangementError("vandermonde: z must be strictly increasing");
  RationalMatrix A(z.size(), k);
  RationalVector w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto m = monomials(z[i], k + 1);
    for (std::size_t j = 0; j < k; ++j) A(i, j) = m[j];
    w[i] = k % 2 ? -m[k] : m[k];
  }
  return Arrangement(std::move(A), std::move(w));
}

PolarizedArrangement vandermonde_left(const Rational& z0, const RationalVector& z, std::size_t k) {
  if (!z.empty() && !(z0 < z.front())) throw ArrangementError("vandermonde_left: z0 must precede z");
  return PolarizedArrangement(vandermonde(z, k), monomials(z0, k));
}

PolarizedArrangement vandermonde_right(const RationalVector& z, const Rational& zn1, std::size_t k) {
  if (!z.empty() && !(z.back() < zn1)) throw ArrangementError("vandermonde_right: z_{n+1} must follow z");
  RationalVector x = monomials(zn1, k);
  if (k % 2)
    for (auto& v : x) v = -v;
  return PolarizedArrangement(vandermonde(z, k), std::move(x));
}

namespace {
RationalVector one_to_n(std::size_t n) {
  RationalVector z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = Rational(i + 1);
  return z;
}
}  // namespace

PolarizedArrangement reference_left(std::size_t n, std::size_t k) { return vandermonde_left(0, one_to_n(n), k); }

PolarizedArrangement reference_right(std::size_t n, std::size_t k) {
  return vandermonde_right(one_to_n(n), Rational(n + 1), k);
}

CombinatorialVerdict combinatorial_feasibility(Flavor flavor, const SignSequence& alpha, std::size_t k) {
  CombinatorialVerdict v;
  std::size_t va = var(alpha);
  v.compact = va == k && !alpha.empty() && alpha.front() == '+';
  if (alpha.empty()) v.compact = k == 0;
  switch (flavor) {
    case Flavor::Cyclic:
      v.feasible = v.compact || va < k;
      break;
    case Flavor::Left:
      v.feasible = var_l(alpha) <= k;
      v.bounded = var_l(alpha) >= k;
      break;
    case Flavor::Right:
      v.feasible = var_r(alpha, k) <= k;
      v.bounded = var_r(alpha, k) >= k;
      break;
  }
  return v;
}

DotSet kappa_l(const SignSequence& alpha, std::size_t k) {
  SignSequence s = "+" + alpha;
  DotSet x;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (s[i] != s[i + 1]) x.push_back(int(i));
  if (x.size() != k) throw ArrangementError("kappa_l: var_l(alpha) != k for " + alpha);
  return x;
}

SignSequence kappa_l_inv(const DotSet& x, std::size_t n) {
  SignSequence s(n + 1, '+');
  for (std::size_t i = 0; i < n; ++i) {
    bool change = std::find(x.begin(), x.end(), int(i)) != x.end();
    s[i + 1] = change ? (s[i] == '+' ? '-' : '+') : s[i];
  }
  for (int d : x)
    if (d < 0 || d >= int(n)) throw ArrangementError("kappa_l_inv: dot out of range");
  return s.substr(1);
}

DotSet kappa_r(const SignSequence& alpha, std::size_t k) {
  SignSequence s = alpha + (k % 2 ? "-" : "+");
  DotSet x;
  for (std::size_t i = 1; i <= alpha.size(); ++i)
    if (s[i - 1] != s[i]) x.push_back(int(i));
  if (x.size() != k) throw ArrangementError("kappa_r: var_r(alpha) != k for " + alpha);
  return x;
}

SignSequence kappa_r_inv(const DotSet& x, std::size_t n, std::size_t k) {
  for (int d : x)
    if (d < 1 || d > int(n)) throw ArrangementError("kappa_r_inv: dot out of range");
  SignSequence s(n + 1, k % 2 ? '-' : '+');
  for (std::size_t i = n; i >= 1; --i) {
    bool change = std::find(x.begin(), x.end(), int(i)) != x.end();
    s[i - 1] = change ? (s[i] == '+' ? '-' : '+') : s[i];
  }
  return s.substr(0, n);
}

std::vector<MuEntry> mu_bijection(const PolarizedArrangement& V) {
  std::vector<MuEntry> out;
  for (const auto& a : enumerate_sets(V).P) {
    ArgmaxResult r = argmax_vertex(region_polyhedron(V.base(), a), V.x());
    if (r.active.size() != V.k()) throw LpError("degenerate objective: vertex not cut out by k hyperplanes");
    MuEntry e{a, {}, r.point, r.value};
    for (auto i : r.active) e.basis.push_back(int(i) + 1);
    out.push_back(std::move(e));
  }
  return out;
}

PartialOrder partial_order(const PolarizedArrangement& V) {
  auto mu = mu_bijection(V);
  PartialOrder po;
  const std::size_t m = mu.size();
  for (auto& e : mu) po.elements.push_back(e.alpha);
  po.less.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      std::vector<int> common;
      std::set_intersection(mu[a].basis.begin(), mu[a].basis.end(), mu[b].basis.begin(), mu[b].basis.end(),
                            std::back_inserter(common));
      if (common.size() + 1 != V.k()) continue;
      if (mu[a].value == mu[b].value) throw LpError("degenerate objective: equal values on adjacent vertices");
      if (mu[a].value < mu[b].value) {
        po.covers.emplace_back(a, b);
        po.less[a][b] = true;
      }
    }
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t a = 0; a < m; ++a)
      if (po.less[a][c])
        for (std::size_t b = 0; b < m; ++b)
          if (po.less[c][b]) po.less[a][b] = true;
  return po;
}

namespace {

std::vector<int> projective_signs(const RationalMatrix& M) {
  auto s = sign_class(plucker(M)).signs;
  auto it = std::find_if(s.begin(), s.end(), [](int v) { return v != 0; });
  if (it != s.end() && *it < 0)
    for (auto& v : s) v = -v;
  return s;
}

RationalMatrix augmented(const Arrangement& V) {
  RationalMatrix M = V.A().append_col(V.w());
  RationalVector last(V.k() + 1);
  last[V.k()] = 1;
  return M.append_row(last);
}

RationalMatrix augmented(const PolarizedArrangement& V, const Rational& c) {
  RationalMatrix M = V.A().append_col(V.w());
  RationalVector xr = V.x();
  xr.push_back(c);
  M = M.append_row(xr);
  RationalVector last(V.k() + 1);
  last[V.k()] = 1;
  return M.append_row(last);
}

// Every achievable projective sign vector of the strong augmented matrix as c ranges over Q.
std::set<std::vector<int>> lift_sign_cells(const PolarizedArrangement& V) {
  RationalMatrix M0 = augmented(V, 0), M1 = augmented(V, 1);
  auto subsets = combinations(V.n() + 2, V.k() + 1);
  std::set<Rational> roots;
  for (const auto& S : subsets) {
    Rational d0 = determinant(M0.select_rows(S));
    Rational d1 = determinant(M1.select_rows(S));
    if (d1 != d0) roots.insert(-d0 / (d1 - d0));
  }
  std::vector<Rational> probes;
  if (roots.empty()) {
    probes.push_back(0);
  } else {
    std::vector<Rational> r(roots.begin(), roots.end());
    probes.push_back(r.front() - 1);
    for (std::size_t i = 0; i < r.size(); ++i) {
      probes.push_back(r[i]);
      if (i + 1 < r.size()) probes.push_back((r[i] + r[i + 1]) / 2);
    }
    probes.push_back(r.back() + 1);
  }
  std::set<std::vector<int>> cells;
  for (const auto& c : probes) cells.insert(projective_signs(augmented(V, c)));
  return cells;
}

void same_shape(std::size_t n1, std::size_t k1, std::size_t n2, std::size_t k2) {
  if (n1 != n2 || k1 != k2) throw ArrangementError("equivalence requires equal (n,k)");
}

}  // namespace

bool equivalent(const Arrangement& a, const Arrangement& b) {
  same_shape(a.n(), a.k(), b.n(), b.k());
  return projective_signs(augmented(a)) == projective_signs(augmented(b));
}

bool equivalent(const StrongPolarizedArrangement& a, const StrongPolarizedArrangement& b) {
  same_shape(a.polarized.n(), a.polarized.k(), b.polarized.n(), b.polarized.k());
  return projective_signs(augmented(a.polarized, a.c)) == projective_signs(augmented(b.polarized, b.c));
}

bool equivalent(const PolarizedArrangement& a, const PolarizedArrangement& b) {
  same_shape(a.n(), a.k(), b.n(), b.k());
  auto ca = lift_sign_cells(a), cb = lift_sign_cells(b);
  for (const auto& s : ca)
    if (cb.count(s)) return true;
  return false;
}

bool projection_variation_check(const Arrangement& V) {
  RationalVector u = projection_onto_complement(V.A(), V.w());
  SignSequence s;
  for (const auto& v : u) s += sign(v) > 0 ? '+' : (sign(v) < 0 ? '-' : '0');
  return var(s) == V.k() && var_bar(s) == V.k();
}

}  // namespace hyperconv
