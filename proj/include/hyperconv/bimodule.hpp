#pragma once

#include "hyperconv/intmat.hpp"
#include "hyperconv/osz.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hyperconv {

// F: B_l(n,k) e^v with B_l(n,k+1) acting on the right through h.
// E: e^v B_l(n,k) with B_l(n,k+1) acting on the left through h (the left dual of F).
enum class BimoduleKind { F, E };

struct BimodulePiece {
  std::uint32_t left = 0, right = 0;  // vertices of the left and right algebras
  MultiDegree degree;
  std::vector<BTerm> basis;  // canonical terms of B~(V) for V the reference arrangement of B_l(n,k)
};

class HomBimodule {
 public:
  HomBimodule(std::size_t n, std::size_t k, BimoduleKind kind);

  BimoduleKind kind() const { return kind_; }
  const OszIdentification& small() const { return small_; }  // B_l(n,k)
  const QuiverPresentation& large() const { return *hom_.domain; }  // B_l(n,k+1)
  const QuiverPresentation& left_algebra() const;
  const QuiverPresentation& right_algebra() const;
  const GeneratorMap& hom() const { return hom_; }

  BimodulePiece piece(std::uint32_t left, std::uint32_t right, const MultiDegree& d) const;
  // Nonzero pieces with total degree <= window.
  std::vector<BimodulePiece> pieces(int window) const;

  // Actions of path elements of the left / right algebra.
  BTildeElement act_left(const PathElement& a, const BTildeElement& m) const;
  BTildeElement act_right(const BTildeElement& m, const PathElement& b) const;

  // Matrix of a homogeneous generator acting on a piece, rows indexed by the target piece basis.
  struct Action {
    BimodulePiece target;
    std::vector<std::vector<std::int64_t>> matrix;
  };
  std::optional<Action> action(const BimodulePiece& src, const PathElement& g, bool on_left) const;

 private:
  std::size_t n_, k_;
  BimoduleKind kind_;
  OszIdentification small_;
  GeneratorMap hom_;
};

HomBimodule fk_bimodule(std::size_t n, std::size_t k);
HomBimodule e2k_bimodule(std::size_t n, std::size_t k);

struct TensorCell {
  std::string left, right;
  MultiDegree degree;
  std::size_t generators = 0, relations = 0;
  QuotientRank rank;
};

struct FSquaredReport {
  bool idempotents_killed = true;  // h(I_x) = 0 whenever 0 is not in x
  std::vector<TensorCell> cells;
  std::optional<std::string> witness;
  bool ok() const { return idempotents_killed && !witness; }
};

// F_k tensor F_{k+1} over B_l(n,k+1), every cell with total degree <= window.
FSquaredReport f_squared_zero(std::size_t n, std::size_t k, int window);

struct FactorizationReport {
  std::size_t generators = 0;
  std::size_t cells = 0, nonzero_cells = 0;
  bool composite_matches = true;   // Rest'' o Del' equals h on generators
  bool tensor_matches = true;      // tensor ranks equal F_k ranks
  bool truncation_stable = true;   // u_1 truncation at J and J+2 agree
  std::optional<std::string> witness;
  bool ok() const { return composite_matches && tensor_matches && truncation_stable; }
};

// Chain: V^ = left Vandermonde with points 1/2, 1, ..., n in (k+1)-space; V = first deletion,
// V'' = first signed restriction.
FactorizationReport factorization_check(std::size_t n, std::size_t k, int window);

}  // namespace hyperconv
