#pragma once

#include "hyperconv/qlinalg.hpp"

#include <optional>
#include <vector>

namespace hyperconv {

struct LpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// normal . x + offset >= 0
struct Inequality {
  RationalVector normal;
  Rational offset;
};

struct Polyhedron {
  std::size_t dim = 0;
  std::vector<Inequality> ineqs;

  bool contains(const RationalVector& x) const;
};

enum class LpStatus { Empty, NonemptyBounded, NonemptyUnbounded };

struct LpVerdict {
  LpStatus status = LpStatus::Empty;
  std::optional<RationalVector> witness;
  std::optional<Rational> optimum;
  std::optional<RationalVector> direction;  // recession ray when unbounded
};

struct NonemptyResult {
  bool nonempty = false;
  std::optional<RationalVector> witness;
};

NonemptyResult is_nonempty(const Polyhedron& p);
LpVerdict bounded_above(const Polyhedron& p, const RationalVector& objective);

struct ArgmaxResult {
  RationalVector point;
  std::vector<std::size_t> active;  // 0-based inequality indices
  Rational value;
};

ArgmaxResult argmax_vertex(const Polyhedron& p, const RationalVector& objective);

// Recession cone {r : normals . r >= 0} is {0}; p must be nonempty for this to mean compact.
bool recession_cone_trivial(const Polyhedron& p);

}  // namespace hyperconv
