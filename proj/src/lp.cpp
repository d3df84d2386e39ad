#include "hyperconv/lp.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>

namespace hyperconv {

namespace {

using System = std::vector<Inequality>;
using Chooser = std::function<Rational(const std::optional<Rational>&, const std::optional<Rational>&)>;

Rational default_choice(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (lo && hi) return (*lo + *hi) / 2;
  if (lo) return *lo;
  if (hi) return *hi;
  return Rational(0);
}

// Inequality plus the set of original rows it was derived from (Chernikov/Imbert pruning).
struct Row {
  Inequality q;
  std::uint64_t history = 0;
};

using Rows = std::vector<Row>;

// Scale to a leading +-1 coefficient. Rows sharing a normal are kept unless another one is
// at least as tight with a history that is a subset; dropping more would break the pruning.
// Returns false on a trivially violated constant row.
using Bucket = std::map<RationalVector, std::vector<Row>>;

bool normalize_into(Bucket& out, Row r) {
  auto& q = r.q;
  std::size_t lead = 0;
  while (lead < q.normal.size() && q.normal[lead] == 0) ++lead;
  if (lead == q.normal.size()) return q.offset >= 0;
  Rational s = abs(q.normal[lead]);
  for (auto& a : q.normal) a /= s;
  q.offset /= s;
  auto& rows = out[q.normal];
  for (const auto& c : rows)
    if (c.q.offset <= q.offset && (c.history & ~r.history) == 0) return true;
  std::erase_if(rows, [&](const Row& c) { return q.offset <= c.q.offset && (r.history & ~c.history) == 0; });
  rows.push_back(std::move(r));
  return true;
}

Rows collect(Bucket& m) {
  Rows out;
  for (auto& [n, rows] : m)
    for (auto& r : rows) out.push_back(std::move(r));
  return out;
}

std::optional<Rows> normalized(const System& sys) {
  if (sys.size() > 64) throw LpError("too many inequalities for elimination");
  Bucket m;
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (!normalize_into(m, {sys[i], std::uint64_t(1) << i})) return std::nullopt;
  return collect(m);
}

// Drop the last variable; `eliminated` counts variables removed including this one.
std::optional<Rows> eliminate_last(const Rows& sys, std::size_t eliminated) {
  if (sys.empty()) return Rows{};
  std::size_t j = sys.front().q.normal.size() - 1;
  Rows pos, neg;
  Bucket acc;
  for (const auto& r : sys) {
    const auto& q = r.q;
    if (q.normal[j] > 0) pos.push_back(r);
    else if (q.normal[j] < 0) neg.push_back(r);
    else if (!normalize_into(acc, {{RationalVector(q.normal.begin(), q.normal.end() - 1), q.offset}, r.history}))
      return std::nullopt;
  }
  for (const auto& p : pos)
    for (const auto& n : neg) {
      std::uint64_t h = p.history | n.history;
      if (std::size_t(std::popcount(h)) > eliminated + 1) continue;
      Rational a = p.q.normal[j], b = -n.q.normal[j];
      Inequality c{RationalVector(j), p.q.offset * b + n.q.offset * a};
      for (std::size_t i = 0; i < j; ++i) c.normal[i] = p.q.normal[i] * b + n.q.normal[i] * a;
      if (!normalize_into(acc, {std::move(c), h})) return std::nullopt;
    }
  return collect(acc);
}

struct Stages {
  bool feasible = false;
  std::vector<Rows> stage;  // stage[j] involves variables 0..j-1
};

Stages build_stages(const System& sys, std::size_t dim) {
  Stages st;
  st.stage.resize(dim + 1);
  auto top = normalized(sys);
  if (!top) return st;
  st.stage[dim] = std::move(*top);
  for (std::size_t j = dim; j > 0; --j) {
    auto next = eliminate_last(st.stage[j], dim - j + 1);
    if (!next) return st;
    st.stage[j - 1] = std::move(*next);
  }
  for (const auto& r : st.stage[0])
    if (r.q.offset < 0) return st;
  st.feasible = true;
  return st;
}

std::pair<std::optional<Rational>, std::optional<Rational>> bounds_for(const Rows& sys,
                                                                       const RationalVector& prefix) {
  std::size_t j = prefix.size();
  std::optional<Rational> lo, hi;
  for (const auto& r : sys) {
    const auto& q = r.q;
    const Rational& a = q.normal[j];
    if (a == 0) continue;
    Rational rest = q.offset;
    for (std::size_t i = 0; i < j; ++i) rest += q.normal[i] * prefix[i];
    Rational v = -rest / a;
    if (a > 0) {
      if (!lo || v > *lo) lo = v;
    } else {
      if (!hi || v < *hi) hi = v;
    }
  }
  return {lo, hi};
}

RationalVector back_substitute(const Stages& st, std::size_t dim, const Chooser& first) {
  RationalVector x;
  for (std::size_t j = 1; j <= dim; ++j) {
    auto [lo, hi] = bounds_for(st.stage[j], x);
    if (lo && hi && *lo > *hi) throw LpError("internal: empty interval during back substitution");
    x.push_back(j == 1 ? first(lo, hi) : default_choice(lo, hi));
  }
  return x;
}

struct MaxResult {
  LpStatus status;
  RationalVector point;
  Rational value;
};

MaxResult maximize(const System& sys, std::size_t dim, const RationalVector& c) {
  System ext;
  ext.reserve(sys.size() + 1);
  for (const auto& q : sys) {
    Inequality e{RationalVector(dim + 1), q.offset};
    for (std::size_t i = 0; i < dim; ++i) e.normal[i + 1] = q.normal[i];
    ext.push_back(std::move(e));
  }
  Inequality obj{RationalVector(dim + 1), 0};
  obj.normal[0] = -1;
  for (std::size_t i = 0; i < dim; ++i) obj.normal[i + 1] = c[i];
  ext.push_back(obj);
  Stages st = build_stages(ext, dim + 1);
  if (!st.feasible) return {LpStatus::Empty, {}, 0};
  auto [lo, hi] = bounds_for(st.stage[1], {});
  if (!hi) return {LpStatus::NonemptyUnbounded, {}, 0};
  RationalVector tx = back_substitute(st, dim + 1, [](const auto&, const auto& h) { return *h; });
  return {LpStatus::NonemptyBounded, RationalVector(tx.begin() + 1, tx.end()), *hi};
}

System cone_with_box(const Polyhedron& p) {
  System cone;
  for (const auto& q : p.ineqs) cone.push_back({q.normal, 0});
  for (std::size_t i = 0; i < p.dim; ++i) {
    RationalVector e(p.dim);
    e[i] = 1;
    cone.push_back({e, 1});
    e[i] = -1;
    cone.push_back({e, 1});
  }
  return cone;
}

void check_shape(const Polyhedron& p) {
  for (const auto& q : p.ineqs)
    if (q.normal.size() != p.dim) throw LpError("inequality normal has wrong length");
}

}  // namespace

bool Polyhedron::contains(const RationalVector& x) const {
  for (const auto& q : ineqs)
    if (dot(q.normal, x) + q.offset < 0) return false;
  return true;
}

NonemptyResult is_nonempty(const Polyhedron& p) {
  check_shape(p);
  Stages st = build_stages(p.ineqs, p.dim);
  if (!st.feasible) return {false, std::nullopt};
  return {true, back_substitute(st, p.dim, default_choice)};
}

LpVerdict bounded_above(const Polyhedron& p, const RationalVector& objective) {
  if (objective.size() != p.dim) throw LpError("objective has wrong length");
  auto ne = is_nonempty(p);
  if (!ne.nonempty) return {};
  MaxResult ray = maximize(cone_with_box(p), p.dim, objective);
  if (ray.value > 0) {
    LpVerdict v{LpStatus::NonemptyUnbounded, ne.witness, std::nullopt, ray.point};
    return v;
  }
  MaxResult m = maximize(p.ineqs, p.dim, objective);
  if (m.status != LpStatus::NonemptyBounded) throw LpError("internal: recession test disagrees with optimum");
  return {LpStatus::NonemptyBounded, m.point, m.value, std::nullopt};
}

ArgmaxResult argmax_vertex(const Polyhedron& p, const RationalVector& objective) {
  LpVerdict v = bounded_above(p, objective);
  if (v.status != LpStatus::NonemptyBounded) throw LpError("argmax on empty region or unbounded objective");
  System face = p.ineqs;
  face.push_back({objective, -*v.optimum});
  for (std::size_t j = 0; j < p.dim; ++j) {
    RationalVector e(p.dim);
    e[j] = 1;
    MaxResult up = maximize(face, p.dim, e);
    e[j] = -1;
    MaxResult down = maximize(face, p.dim, e);
    if (up.value != -down.value) throw LpError("degenerate objective");
  }
  ArgmaxResult r{*v.witness, {}, *v.optimum};
  for (std::size_t i = 0; i < p.ineqs.size(); ++i)
    if (dot(p.ineqs[i].normal, r.point) + p.ineqs[i].offset == 0) r.active.push_back(i);
  return r;
}

bool recession_cone_trivial(const Polyhedron& p) {
  check_shape(p);
  System cone = cone_with_box(p);
  for (std::size_t j = 0; j < p.dim; ++j)
    for (int s : {1, -1}) {
      RationalVector e(p.dim);
      e[j] = s;
      if (maximize(cone, p.dim, e).value > 0) return false;
    }
  return true;
}

}  // namespace hyperconv
