#pragma once

// The determinants delta_i = det(A_i), A_i = (C(s+r-2i, s-i+j-k))_{0<=j,k<i},
// decide lambda(r,s,p) through a recurrence that only needs to know which
// delta_i vanish mod p. delta_i is never formed as an integer; its p-adic
// valuation comes from the falling-factorial product
//
//   delta_i = prod_{t=s}^{r+s-1-i} t^(i) / prod_{t=i}^{r-1} t^(i)
//
// evaluated with Legendre's formula.

#include <vector>

#include "modjordan/arith.hpp"
#include "modjordan/partition.hpp"

namespace modjordan {

struct DeltaSequence {
  Int r = 1;
  Int s = 1;
  Int p = 2;
  /// nu_p(delta_i) for i = 0..r; valuations[0] = valuations[r] = 0.
  std::vector<Int> valuations;

  /// vanishes[i] is true iff delta_i = 0 in F_p.
  std::vector<bool> vanishing_pattern() const;
};

/// Requires 1 <= r <= s and 0 <= i <= r.
Int delta_valuation(Int r, Int s, Int p, Int i);

DeltaSequence delta_sequence(Int r, Int s, Int p);

/// det(A_i) over F_p by elimination. Independent of delta_valuation; meant
/// for cross-checks with modest i.
Int delta_det_mod_p(Int r, Int s, Int p, Int i);

/// The recurrence on a given vanishing pattern (index 0..r, with
/// vanishes[0] = vanishes[r] = false). Parts are produced from lambda_r up
/// to lambda_1: lambda_i = lambda_{i+1} if delta_i vanishes, otherwise
/// r+s-2i+d with d >= 1 the distance to the next non-vanishing delta below i.
Partition partition_from_vanishing(Int r, Int s, const std::vector<bool>& vanishes);

/// lambda(r,s,p) by the recurrence. p = 0 treats every delta_i as nonzero
/// (characteristic zero). Requires 1 <= r <= s.
Partition recurrence_partition(Int r, Int s, Int p);

}  // namespace modjordan
