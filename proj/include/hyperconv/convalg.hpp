#pragma once

#include "hyperconv/btilde.hpp"

#include <functional>
#include <optional>
#include <string>

namespace hyperconv {

struct RankMismatch {
  std::string src, tgt;
  MultiDegree d;
  std::size_t presented = 0;
  int expected = 0;
  std::vector<Integer> torsion;
};

struct RankComparison {
  std::size_t cells = 0;
  std::optional<RankMismatch> witness;
  bool ok() const { return !witness.has_value(); }
};

// Maps a presentation vertex label to a sign sequence of B, or nullopt for a vertex with
// no canonical counterpart (expected rank 0).
using LabelMap = std::function<std::optional<SignSequence>(const std::string&)>;

// Presented ranks (all vertex pairs, sum(d) <= window) against B.graded_rank.
RankComparison compare_presented_ranks(const PresentedAlgebra& alg, const BTilde& B, int window,
                                       const LabelMap& label = {});

// A~(V) two ways: its own presentation and B~(gale_dual(V)).
RankComparison compare_atilde(const PolarizedArrangement& V, int window);

// Idempotent truncation to compact regions.
struct BTildePrime {
  BTilde B;
  std::set<SignSequence> K;

  explicit BTildePrime(const PolarizedArrangement& V);
  int graded_rank(const SignSequence& a, const SignSequence& b, const MultiDegree& d) const;
};

// Same arrangement, two polarizations: equal truncated ranks for sum(d) <= window.
RankComparison compare_prime(const BTildePrime& x, const BTildePrime& y, int window);

struct CenterPiece {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<BTildeElement> basis;
};

// Diagonal elements of single degree D commuting with every idempotent, adjacent f, and u_i.
CenterPiece center_graded(const BTilde& B, int degree);
bool is_central(const BTilde& B, const BTildeElement& z);
// Monomials of u-degree D/2 in n variables using at most k of them.
std::size_t center_formula_rank(std::size_t n, std::size_t k, int degree);

// dim_Q of the degree-`degree` part of R~_ab (x) Q modulo the linear forms c.u, c in col(A).
std::size_t finite_quotient_graded_dim(const PolarizedArrangement& V, const BTilde& B, const SignSequence& a,
                                       const SignSequence& b, int degree);

// Every u^a f_ab with sum(d) <= window, a, b in P.
std::vector<BTerm> basis_terms(const BTilde& B, int window);

}  // namespace hyperconv
