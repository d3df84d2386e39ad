#pragma once

#include "hyperconv/btilde.hpp"

#include <memory>
#include <optional>
#include <string>

namespace hyperconv {

// Images of central generators.
struct CentralImage {
  enum Kind { Var, Zero, One } kind = Var;
  std::size_t j = 0;
};

// An algebra map between presentations given on generators. A vertex with no image goes to 0.
struct GeneratorMap {
  std::string name;
  std::shared_ptr<const QuiverPresentation> domain, codomain;
  std::vector<std::optional<std::uint32_t>> vertex;
  std::vector<PathElement> arrow;
  std::vector<CentralImage> central;
  // grading[j] = image of e_j as a codomain multidegree
  std::vector<MultiDegree> grading;

  PathElement apply(const PathElement& x) const;
  bool preserves_single_grading() const;
};

// Domain generators: idempotents, arrows, and central generators at each vertex.
std::vector<PathElement> presentation_generators(const QuiverPresentation& q);

struct WellDefinedReport {
  std::size_t relations = 0;
  std::optional<std::string> failure;
  bool ok() const { return !failure.has_value(); }
};

// Every domain relation maps to a canonical zero in `target`.
WellDefinedReport check_well_defined(const GeneratorMap& f, const BTilde& target);

// i is 1-based, s is '+' or '-'.
// rest_A^i(V,s): A~(V^i) -> A~(V)
GeneratorMap rest_atilde(const PolarizedArrangement& V, std::size_t i, char s);
// del_A^i(V,s): A~(V) -> A~(V_i)
GeneratorMap del_atilde(const PolarizedArrangement& V, std::size_t i, char s);
// del_B^i(V,s): B~(V_i) -> B~(V)
GeneratorMap del_btilde(const PolarizedArrangement& V, std::size_t i, char s);
// rest_B^i(V,s): B~(V) -> B~(V^i)
GeneratorMap rest_btilde(const PolarizedArrangement& V, std::size_t i, char s);

// Basis-level maps on B~^s(V) sending u_i to 1 (rest'_B) and on A~^s(V) sending t_i to 1
// (del'_A, realized on B~(V^vee)). Both drop position i from labels and exponents.
class PrimedMap {
 public:
  PrimedMap(std::shared_ptr<const BTilde> source, std::shared_ptr<const BTilde> target, std::size_t i, char s);
  const BTilde& source() const { return *src_; }
  const BTilde& target() const { return *tgt_; }
  // Throws AlgebraError on terms outside B~^s.
  BTildeElement apply(const BTildeElement& x) const;
  // Ideals go to ideals, and products are respected on basis terms up to the window.
  std::optional<std::string> check(int window) const;
  // A degree-2 element with a nonzero degree-0 image, if one exists.
  std::optional<std::string> single_grading_witness() const;

 private:
  std::shared_ptr<const BTilde> src_, tgt_;
  std::size_t i_;
  char s_;
};

// rest'_B^i(V,s): B~^s(V) -> B~(V^i)
PrimedMap rest_prime_btilde(const PolarizedArrangement& V, std::size_t i, char s);
// del'_A^i(V,s): A~^s(V) -> A~(V_i), with A~(X) modeled as B~(gale_dual(X)) and A~(V_i) as
// B~(restrict(gale_dual(V), i)).
PrimedMap del_prime_atilde(const PolarizedArrangement& V, std::size_t i, char s);

struct CompositionReport {
  std::size_t generators = 0;
  bool zero_when_signs_differ = true;
  bool independent_of_sign = true;
  bool primed_matches = true;
  bool well_defined = true;
  std::optional<std::string> witness;
  bool ok() const {
    return zero_when_signs_differ && independent_of_sign && primed_matches && well_defined;
  }
};

// Vbig is the arrangement whose i-th deletion and restriction form the chain.
CompositionReport composition_check(const PolarizedArrangement& Vbig, std::size_t i);

// Same labels and minimal vanishing sets.
bool same_canonical_algebra(const BTilde& a, const BTilde& b);

}  // namespace hyperconv
