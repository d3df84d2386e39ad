#pragma once

#include "hyperconv/qlinalg.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hyperconv {

struct IntegerOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<std::uint32_t, std::int64_t>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, std::int64_t ca = 1, std::int64_t cb = 1);
SparseVec sparse_from_terms(std::vector<std::pair<std::uint32_t, std::int64_t>> terms);

// Sublattice of Z^N kept in echelon form with rows keyed by leading index.
// Insertion is incremental; membership is exact.
class IntLattice {
 public:
  explicit IntLattice(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  // Returns true if the rank grew.
  bool add(SparseVec v);
  bool contains(SparseVec v) const;
  // True when every pivot is +-1, so Z^N / L is free.
  bool unimodular_pivots() const;
  // Invariant factors > 1 of the row module (torsion of Z^N / L).
  std::vector<Integer> torsion() const;

 private:
  std::size_t dim_;
  std::unordered_map<std::uint32_t, SparseVec> rows_;
};

struct QuotientRank {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

QuotientRank quotient_rank(const IntLattice& L);

// Smith invariant factors of a dense integer matrix (nonzero ones only).
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m);

}  // namespace hyperconv
