#pragma once

#include "hyperconv/intmat.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace hyperconv {

using MultiDegree = std::vector<int>;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int total_degree(const MultiDegree& d);
MultiDegree degree_add(const MultiDegree& a, const MultiDegree& b);
// All d >= 0 with sum(d) <= total, in lexicographic order.
std::vector<MultiDegree> degrees_up_to(std::size_t n, int total);

// A path u^uexp * a_1 a_2 ... a_m from src to tgt; arrows compose left to right.
struct PathKey {
  std::uint32_t src = 0, tgt = 0;
  std::vector<std::uint32_t> arrows;
  std::vector<int> uexp;
  auto operator<=>(const PathKey&) const = default;
};

class PathElement {
 public:
  std::map<PathKey, std::int64_t> terms;

  static PathElement single(PathKey key, std::int64_t c = 1);
  bool empty() const { return terms.empty(); }
  void add(const PathKey& key, std::int64_t c);
  PathElement& operator+=(const PathElement& o);
  PathElement operator-(const PathElement& o) const;
  PathElement operator*(const PathElement& o) const;
  PathElement scaled(std::int64_t c) const;
  // Equality in the free path algebra, not modulo relations.
  bool operator==(const PathElement& o) const = default;
};

struct Arrow {
  std::uint32_t src, tgt;
  std::size_t coord;  // 0-based; the arrow has multidegree e_coord
  std::string name;
};

// Path algebra of a quiver tensored with a central polynomial ring in ncoords variables
// (each of multidegree 2e_i), modulo homogeneous relations.
struct QuiverPresentation {
  std::size_t ncoords = 0;
  std::string central_name = "u";
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<PathElement> relations;
  std::vector<std::string> relation_labels;

  std::uint32_t vertex(const std::string& label) const;
  bool has_vertex(const std::string& label) const;
  // Arrow id from src to tgt, or -1.
  long find_arrow(std::uint32_t src, std::uint32_t tgt) const;

  PathElement idempotent(std::uint32_t v) const;
  PathElement arrow(std::uint32_t a) const;
  PathElement central(std::uint32_t v, std::size_t j, int power = 1) const;
  MultiDegree degree(const PathKey& p) const;
  void add_relation(PathElement r, std::string label);
  std::string describe(const PathKey& p) const;
};

class PresentedAlgebra {
 public:
  // Paths are enumerated up to max_total_degree; asking for larger cells throws.
  PresentedAlgebra(std::shared_ptr<const QuiverPresentation> q, int max_total_degree);

  const QuiverPresentation& presentation() const { return *q_; }
  int max_total_degree() const { return max_total_; }

  QuotientRank rank(std::uint32_t src, std::uint32_t tgt, const MultiDegree& d) const;
  bool is_zero(const PathElement& x) const;
  bool equal(const PathElement& a, const PathElement& b) const { return is_zero(a - b); }
  std::size_t basis_size(std::uint32_t src, std::uint32_t tgt, const MultiDegree& d) const;

 private:
  using PathsByDegree = std::map<MultiDegree, std::vector<std::vector<std::uint32_t>>>;
  struct Cell {
    std::map<std::vector<std::uint32_t>, std::uint32_t> basis;
    IntLattice lattice;
  };
  struct CellKey {
    std::uint32_t src, tgt;
    MultiDegree d;
    auto operator<=>(const CellKey&) const = default;
  };

  const Cell& cell(std::uint32_t src, std::uint32_t tgt, const MultiDegree& d) const;
  Cell build(std::uint32_t src, std::uint32_t tgt, const MultiDegree& d) const;

  std::shared_ptr<const QuiverPresentation> q_;
  int max_total_;
  // paths_[src][tgt]
  std::vector<std::vector<PathsByDegree>> paths_;
  struct RelInfo {
    std::uint32_t src, tgt;
    MultiDegree deg;
  };
  std::vector<RelInfo> rel_info_;
  mutable std::mutex mu_;
  mutable std::map<CellKey, std::unique_ptr<Cell>> cells_;
};

std::string to_dot(const QuiverPresentation& q, const std::string& name);

}  // namespace hyperconv
