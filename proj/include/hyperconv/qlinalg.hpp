#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperconv {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols = 0);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector col(std::size_t c) const;
  RationalMatrix transpose() const;
  RationalMatrix select_rows(const std::vector<std::size_t>& idx) const;
  RationalMatrix drop_row(std::size_t r) const;
  RationalMatrix append_col(const RationalVector& v) const;
  RationalMatrix append_row(const RationalVector& v) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalVector operator*(const RationalVector& v) const;

  bool operator==(const RationalMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // 0-based column indices
};

RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// Columns spanning {y : m y = 0}.
RationalMatrix nullspace(const RationalMatrix& m);
RationalMatrix orthogonal_complement(const RationalMatrix& basis);

// Fraction-free Bareiss after clearing denominators row by row.
Rational determinant(const RationalMatrix& m);

struct PluckerVector {
  std::size_t ambient_n = 0;
  std::size_t rank_k = 0;
  std::vector<std::vector<std::size_t>> subsets;  // 0-based, lexicographic
  RationalVector coords;
};

PluckerVector plucker(const RationalMatrix& m);

enum class SignClass { PositiveProjective, NotPositive };

struct SignReport {
  SignClass cls;
  std::vector<int> signs;
};

SignReport sign_class(const PluckerVector& p);
bool is_positive(const RationalMatrix& m);

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

Rational dot(const RationalVector& a, const RationalVector& b);
int sign(const Rational& q);

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace hyperconv
