#pragma once

#include "hyperconv/lp.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hyperconv {

struct ArrangementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strings over "+-"; '0' is allowed only where an extended sequence is expected.
using SignSequence = std::string;
using DotSet = std::vector<int>;

SignSequence flip_at(const SignSequence& a, std::size_t i);
SignSequence negate(const SignSequence& a);
std::vector<std::size_t> flip_positions(const SignSequence& a, const SignSequence& b);
std::vector<SignSequence> all_sign_sequences(std::size_t n);
std::string format_dots(const DotSet& x);

class Arrangement {
 public:
  Arrangement(RationalMatrix A, RationalVector w);

  std::size_t n() const { return A_.rows(); }
  std::size_t k() const { return A_.cols(); }
  const RationalMatrix& A() const { return A_; }
  const RationalVector& w() const { return w_; }

 private:
  RationalMatrix A_;
  RationalVector w_;
};

struct RegionVerdict {
  bool feasible = false;
  bool bounded = true;
  bool compact = false;
};

class PolarizedArrangement {
 public:
  PolarizedArrangement(Arrangement base, RationalVector x);

  const Arrangement& base() const { return base_; }
  std::size_t n() const { return base_.n(); }
  std::size_t k() const { return base_.k(); }
  const RationalMatrix& A() const { return base_.A(); }
  const RationalVector& w() const { return base_.w(); }
  const RationalVector& x() const { return x_; }

  // Memoized; concurrent callers may race to fill the same key with the same value.
  RegionVerdict verdict(const SignSequence& alpha) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<SignSequence, RegionVerdict> verdicts;
  };
  Arrangement base_;
  RationalVector x_;
  std::shared_ptr<Cache> cache_;
};

struct StrongPolarizedArrangement {
  PolarizedArrangement polarized;
  Rational c;
};

Polyhedron region_polyhedron(const Arrangement& V, const SignSequence& alpha);
bool is_feasible(const Arrangement& V, const SignSequence& alpha);
bool is_compact(const Arrangement& V, const SignSequence& alpha);
bool is_bounded(const PolarizedArrangement& V, const SignSequence& alpha);

struct RegionSets {
  std::set<SignSequence> F, B, P, K;
};

RegionSets enumerate_sets(const PolarizedArrangement& V, std::size_t cap = 16);
std::set<SignSequence> feasible_set(const Arrangement& V, std::size_t cap = 16);
std::set<SignSequence> compact_set(const Arrangement& V, std::size_t cap = 16);

std::size_t var(const SignSequence& a);
std::size_t var_bar(const SignSequence& a);
std::size_t var_l(const SignSequence& a);
std::size_t var_r(const SignSequence& a, std::size_t k);
SignSequence alt(const SignSequence& a);

bool is_cyclic(const Arrangement& V);
bool positively_oriented(const Arrangement& V);
bool is_left_cyclic(const PolarizedArrangement& V);
bool is_right_cyclic(const PolarizedArrangement& V);

enum class Flavor { Cyclic, Left, Right };

RationalVector monomials(const Rational& z, std::size_t k);
Arrangement vandermonde(const RationalVector& z, std::size_t k);
PolarizedArrangement vandermonde_left(const Rational& z0, const RationalVector& z, std::size_t k);
PolarizedArrangement vandermonde_right(const RationalVector& z, const Rational& zn1, std::size_t k);
// z_i = i, with z_0 = 0 or z_{n+1} = n+1.
PolarizedArrangement reference_left(std::size_t n, std::size_t k);
PolarizedArrangement reference_right(std::size_t n, std::size_t k);

struct CombinatorialVerdict {
  bool feasible = false;
  bool bounded = false;
  bool compact = false;
};

// For Flavor::Cyclic `bounded` is not meaningful and reported false.
CombinatorialVerdict combinatorial_feasibility(Flavor flavor, const SignSequence& alpha, std::size_t k);

DotSet kappa_l(const SignSequence& alpha, std::size_t k);
SignSequence kappa_l_inv(const DotSet& x, std::size_t n);
DotSet kappa_r(const SignSequence& alpha, std::size_t k);
SignSequence kappa_r_inv(const DotSet& x, std::size_t n, std::size_t k);

struct MuEntry {
  SignSequence alpha;
  std::vector<int> basis;  // 1-based hyperplane indices active at the vertex
  RationalVector vertex;
  Rational value;
};

std::vector<MuEntry> mu_bijection(const PolarizedArrangement& V);

struct PartialOrder {
  std::vector<SignSequence> elements;         // lexicographic
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
  std::vector<std::vector<bool>> less;        // transitive closure, strict
};

PartialOrder partial_order(const PolarizedArrangement& V);

bool equivalent(const Arrangement& a, const Arrangement& b);
bool equivalent(const StrongPolarizedArrangement& a, const StrongPolarizedArrangement& b);
bool equivalent(const PolarizedArrangement& a, const PolarizedArrangement& b);

std::optional<Rational> find_strong_lift(const PolarizedArrangement& V, Flavor flavor);
RationalMatrix strong_lift_matrix(const PolarizedArrangement& V, Flavor flavor, const Rational& c);

RationalVector projection_onto_complement(const RationalMatrix& A, const RationalVector& w);
bool projection_variation_check(const Arrangement& V);

}  // namespace hyperconv
