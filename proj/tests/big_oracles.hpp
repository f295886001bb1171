#pragma once

// Independent big-integer reference computations for tests. Nothing here
// calls into the library.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace oracles {

using Big = boost::multiprecision::cpp_int;

inline Big factorial(std::int64_t n) {
  Big out = 1;
  for (std::int64_t t = 2; t <= n; ++t) out *= t;
  return out;
}

inline Big binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Big out = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);
  }
  return out;
}

/// Exponent of p in a nonzero integer.
inline std::int64_t valuation(Big n, std::int64_t p) {
  if (n < 0) n = -n;
  std::int64_t v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Exact determinant by Bareiss fraction-free elimination.
inline Big determinant(std::vector<std::vector<Big>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Big sign = 1;
  Big prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// delta_i = det(C(s+r-2i, s-i+j-k))_{0<=j,k<i} as an exact integer.
inline Big delta(std::int64_t r, std::int64_t s, std::int64_t i) {
  std::vector<std::vector<Big>> m(static_cast<std::size_t>(i), std::vector<Big>(static_cast<std::size_t>(i)));
  for (std::int64_t j = 0; j < i; ++j) {
    for (std::int64_t k = 0; k < i; ++k) {
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = binomial(s + r - 2 * i, s - i + j - k);
    }
  }
  return determinant(m);
}

}  // namespace oracles
