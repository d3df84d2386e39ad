#pragma once

// Independent reference computations used only by tests.

#include "hyperconv/qlinalg.hpp"

#include <random>
#include <string>
#include <vector>

namespace oracle {

using hyperconv::Rational;
using hyperconv::RationalMatrix;

// Laplace expansion along the first row.
inline Rational laplace_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(r - 1, jj++) = m(r, j);
    Rational t = m(0, c) * laplace_det(minor);
    d += (c % 2 ? -t : t);
  }
  return d;
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng), 1 + std::abs(d(rng)) % 3);
  return m;
}

// Max sign variation over all resolutions of zeros, by brute force.
inline std::size_t brute_var_bar(const std::string& z) {
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] == '0') zeros.push_back(i);
  std::size_t best = 0;
  for (std::size_t m = 0; m < (std::size_t(1) << zeros.size()); ++m) {
    std::string s = z;
    for (std::size_t j = 0; j < zeros.size(); ++j) s[zeros[j]] = (m >> j) & 1 ? '-' : '+';
    std::size_t v = 0;
    for (std::size_t i = 1; i < s.size(); ++i) v += s[i] != s[i - 1];
    best = std::max(best, v);
  }
  return best;
}

inline std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
