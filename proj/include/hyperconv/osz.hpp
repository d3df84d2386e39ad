#pragma once

#include "hyperconv/convalg.hpp"
#include "hyperconv/homs.hpp"

#include <memory>
#include <optional>
#include <string>

namespace hyperconv {

enum class OszVariant { Full, Left, Right, Prime };

struct OszSpec {
  std::size_t n = 0, k = 0;
  OszVariant variant = OszVariant::Left;
};

OszVariant parse_variant(const std::string& s);
std::string variant_name(OszVariant v);

// k-subsets of the variant's index range, lexicographic.
std::vector<DotSet> osz_vertices(const OszSpec& spec);
DotSet parse_dots(const std::string& label);

// Small-step quiver: R_i, L_i of multidegree e_i, central U_i of multidegree 2e_i. Relations are
// instantiated at every vertex where the paths exist. For Prime this is the small-step presentation
// on V'(n,k) only; truncations of the Full presentation are used for rank checks.
QuiverPresentation osz_presentation(const OszSpec& spec);

// Anti-automorphism: reverse paths, R_i <-> L_i, U fixed.
PathElement psi_osz(const QuiverPresentation& q, const PathElement& x);

// Left uses B_l and reference_left, Right uses B_r and reference_right.
struct OszIdentification {
  std::size_t n = 0, k = 0;
  Flavor side = Flavor::Left;
  std::shared_ptr<const PolarizedArrangement> V;
  std::shared_ptr<const QuiverPresentation> osz, bpres;
  std::shared_ptr<const BTilde> B;
  GeneratorMap phi;  // osz -> bpres
  GeneratorMap psi;  // bpres -> osz

  SignSequence alpha_of(const DotSet& x) const;
  DotSet dots_of(const SignSequence& a) const;
  BTildeElement phi_canonical(const PathElement& x) const { return evaluate(*bpres, *B, phi.apply(x)); }
};

OszIdentification identify(std::size_t n, std::size_t k, Flavor side);
OszIdentification identify(std::size_t n, std::size_t k, Flavor side, const PolarizedArrangement& V);

struct IsoReport {
  bool phi_well_defined = true, psi_well_defined = true, inverse = true, ranks = true, intertwines = true,
       prime = true;
  std::size_t cells = 0;
  std::optional<std::string> witness;
  bool ok() const { return phi_well_defined && psi_well_defined && inverse && ranks && intertwines && prime; }
};

IsoReport verify_isomorphism(std::size_t n, std::size_t k, Flavor side, int window);

struct CenterRow {
  int degree = 0;
  std::size_t commutant = 0, formula = 0;
};

struct CenterReport {
  std::vector<CenterRow> rows;
  bool sum_u_central = true;
  bool basis_central = true;
  bool ok() const;
};

CenterReport center_check(std::size_t n, std::size_t k, Flavor side, int bound);

// h: B_l(n,k+1) -> B_l(n,k), non-unital.
GeneratorMap fk_homomorphism(std::size_t n, std::size_t k);
// Relations of B_l(n,k+1) vanish in B_l(n,k), and generator multidegrees are preserved.
WellDefinedReport check_fk_homomorphism(std::size_t n, std::size_t k);

}  // namespace hyperconv
