#pragma once

#include "hyperconv/arrangement.hpp"
#include "hyperconv/quiver.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace hyperconv {

struct VanishingIdeal {
  SignSequence alpha, beta;
  std::vector<std::vector<int>> minimal_sets;  // 1-based, antichain
};

VanishingIdeal vanishing_sets(const PolarizedArrangement& V, const SignSequence& alpha, const SignSequence& beta);

// u^exps f_{P[a], P[b]}
struct BTerm {
  std::uint32_t a = 0, b = 0;
  std::vector<int> exps;
  auto operator<=>(const BTerm&) const = default;
};

class BTildeElement {
 public:
  std::map<BTerm, std::int64_t> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const BTerm& t, std::int64_t c);
  BTildeElement& operator+=(const BTildeElement& o);
  BTildeElement operator+(const BTildeElement& o) const;
  BTildeElement operator-(const BTildeElement& o) const;
  BTildeElement scaled(std::int64_t c) const;
  bool operator==(const BTildeElement& o) const = default;
};

// Canonical forms for the deformed convolution algebra: the free Z-module on admissible
// monomials u^a f_{alpha,beta}, alpha, beta bounded feasible.
class BTilde {
 public:
  explicit BTilde(const PolarizedArrangement& V);
  // Relabel alpha -> flip(alpha) with the same ideals; models the sign-change isomorphism.
  BTilde negated() const;

  std::size_t n() const { return n_; }
  const std::vector<SignSequence>& P() const { return P_; }
  std::optional<std::uint32_t> index(const SignSequence& a) const;
  bool in_P(const SignSequence& a) const { return index(a).has_value(); }
  const std::vector<std::vector<int>>& minimal_sets(std::uint32_t a, std::uint32_t b) const {
    return ideals_[a * P_.size() + b];
  }
  VanishingIdeal vanishing(std::uint32_t a, std::uint32_t b) const;
  bool admissible(std::uint32_t a, std::uint32_t b, const std::vector<int>& exps) const;

  BTildeElement e(const SignSequence& a) const;
  BTildeElement f(const SignSequence& a, const SignSequence& b) const;
  // u_j times the unit, j 0-based.
  BTildeElement u(std::size_t j) const;
  BTildeElement unit() const;
  BTildeElement term(std::uint32_t a, std::uint32_t b, std::vector<int> exps, std::int64_t c = 1) const;

  BTildeElement multiply(const BTildeElement& x, const BTildeElement& y) const;
  BTildeElement times_u(const BTildeElement& x, const std::vector<int>& exps) const;
  BTildeElement reduce(const BTildeElement& x) const;
  // f_{ab} -> f_{ba}, u fixed
  BTildeElement psi(const BTildeElement& x) const;

  MultiDegree degree(const BTerm& t) const;
  std::vector<std::size_t> flip(std::uint32_t a, std::uint32_t b) const;
  // 0 or 1: the admissible monomial u^a f with multidegree d, if any.
  int graded_rank(const SignSequence& a, const SignSequence& b, const MultiDegree& d) const;
  std::optional<BTerm> basis_term(std::uint32_t a, std::uint32_t b, const MultiDegree& d) const;
  std::string describe(const BTildeElement& x) const;

 private:
  BTilde() = default;
  std::size_t n_ = 0;
  std::vector<SignSequence> P_;
  std::map<SignSequence, std::uint32_t> idx_;
  std::vector<std::vector<std::vector<int>>> ideals_;
};

// Vertices `vertices`, arrows p(a,b) for a <-> b, relations: e_a for a in killed,
// square commutation, and p(a,b,a) = c_i e_a. The B presentation uses bounded sequences and
// kills the infeasible ones; the A presentation uses feasible ones and kills the unbounded.
QuiverPresentation square_presentation(std::size_t n, const std::set<SignSequence>& vertices,
                                       const std::set<SignSequence>& killed, const std::string& central,
                                       const std::string& kill_label);
QuiverPresentation btilde_presentation(const PolarizedArrangement& V);
QuiverPresentation atilde_presentation(const PolarizedArrangement& V);

// Evaluate a combination of quiver paths (vertex labels are sign sequences) in canonical form.
BTildeElement evaluate(const QuiverPresentation& q, const BTilde& B, const PathElement& x);

// Geodesic path from a to b through P (flipping positions in increasing order when possible).
std::optional<std::vector<SignSequence>> geodesic(const BTilde& B, const SignSequence& a, const SignSequence& b);

}  // namespace hyperconv
