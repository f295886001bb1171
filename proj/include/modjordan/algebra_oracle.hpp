#pragma once

// Brute-force ground truth. The algebra A = F_p[x,y]/(x^r, y^s) has basis
// x^i y^j (0 <= i < r, 0 <= j < s); multiplication by x+y is a nilpotent
// operator similar to the one induced by J_r (x) J_s - I, so its Jordan
// type is lambda(r,s,p). Here it is read off the ranks of the operator's
// powers, computed by elimination over F_p.

#include <cstddef>
#include <string>
#include <vector>

#include "modjordan/arith.hpp"
#include "modjordan/partition.hpp"

namespace modjordan {

struct OracleOptions {
  /// Largest r*s the oracle will attempt before throwing ResourceLimit.
  Int ceiling = 20000;
};

/// Element of A, stored densely with index i*s + j for x^i y^j.
class AlgebraVector {
 public:
  AlgebraVector(Int r, Int s, Int p);

  Int r() const { return r_; }
  Int s() const { return s_; }
  Int prime() const { return p_; }

  Int coefficient(Int i, Int j) const { return coeffs_[index(i, j)]; }
  void set(Int i, Int j, Int value);
  bool is_zero() const;
  const std::vector<Int>& coefficients() const { return coeffs_; }

  /// e.g. "x^1y^1 + 2*x^0y^2"; "0" for the zero vector.
  std::string to_string() const;

  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;

 private:
  std::size_t index(Int i, Int j) const;

  Int r_;
  Int s_;
  Int p_;
  std::vector<Int> coeffs_;
};

class MonomialAlgebra {
 public:
  /// Requires r, s >= 1 and p prime.
  MonomialAlgebra(Int r, Int s, Int p);

  Int r() const { return r_; }
  Int s() const { return s_; }
  Int prime() const { return p_; }
  Int dimension() const { return r_ * s_; }

  AlgebraVector zero() const { return AlgebraVector(r_, s_, p_); }
  AlgebraVector monomial(Int i, Int j, Int coefficient = 1) const;

  /// v * (x+y), dropping monomials that leave the r x s rectangle.
  AlgebraVector apply_nilpotent(const AlgebraVector& v) const;

  /// (x+y)^n expanded by the binomial theorem with Lucas residues.
  AlgebraVector power_expansion(Int n) const;

  /// w_i = sum_{j=0}^{i} (-1)^j x^{r-1-j} y^{s-1-i+j}, 0 <= i <= r-1.
  /// Requires r <= s.
  std::vector<AlgebraVector> annihilator_basis() const;

 private:
  Int r_;
  Int s_;
  Int p_;
};

/// ranks[k] = dim im (x+y)^k, ending at the first 0.
struct RankProfile {
  std::vector<Int> ranks;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

RankProfile rank_profile(Int r, Int s, Int p, const OracleOptions& opts = {});

/// Multiplicity of part t is ranks[t-1] - 2 ranks[t] + ranks[t+1].
/// Throws InvalidArgument for profiles that are not nilpotent rank
/// profiles (non-decreasing steps, missing terminal 0, negative ranks).
Partition partition_from_ranks(const RankProfile& profile);

Partition oracle_partition(Int r, Int s, Int p, const OracleOptions& opts = {});

/// Rank over F_p of a family of vectors of one algebra.
std::size_t span_rank(const std::vector<AlgebraVector>& vectors);

}  // namespace modjordan
