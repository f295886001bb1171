#pragma once

// Symmetry reductions and closed forms that short-circuit the recurrence,
// plus the dispatcher that assembles a JordanRecord.
//
// With p^m the least p-power >= r (so r <= p^m) and r <= s:
//   * eps(r,s,p) depends only on s mod p^m (periodicity);
//   * s' = -s mod p^m gives eps(r,s',p) = negative_reverse(eps(r,s,p));
//   * lambda(p^k r, p^k s, p) is the p^k-multiple of lambda(r,s,p);
//   * eps = 0 exactly when s = 0 mod p^m, and s = +-1, +-2 mod p^m have
//     closed forms;
//   * s outside {0, +-1, ..., +-(r-2)} mod p gives the standard partition.

#include <optional>
#include <vector>

#include "modjordan/algebra_oracle.hpp"
#include "modjordan/arith.hpp"
#include "modjordan/partition.hpp"

namespace modjordan {

struct Canonical {
  /// Least s* >= r in the chosen residue class mod p^m.
  Int s_star = 1;
  /// True when s* = -s (mod p^m); eps(r,s) is then the negative reverse of
  /// eps(r,s*).
  bool dual = false;
  PrimePower period;
  std::vector<Reduction> reductions;
};

/// Picks the class a = s mod p^m when a <= p^m/2 and otherwise -a, the way
/// a table indexed by residues 0..p^m/2 is read. Requires 1 <= r <= s and
/// p prime.
Canonical canonicalize(Int r, Int s, Int p);

struct ClosedForm {
  DeviationVector epsilon;
  /// uniform, closed_form (s = +-1, +-2 mod p^m), or standard.
  Method method = Method::closed_form;
};

/// eps(r,s,p) when one of the closed forms applies, else nullopt.
/// Requires 1 <= r <= s and p prime.
std::optional<ClosedForm> closed_form(Int r, Int s, Int p);

/// True iff s mod p avoids 0, +-1, ..., +-(r-2).
bool standard_criterion(Int r, Int s, Int p);

struct LargestPart {
  Int value = 0;
  Int multiplicity = 0;

  friend bool operator==(const LargestPart&, const LargestPart&) = default;
};

/// lambda_1 = r+s-k and its multiplicity k, where k >= 1 is minimal with
/// C(r+s-1-k, r-1) != 0 mod p. Requires 1 <= r <= s.
LargestPart largest_part(Int r, Int s, Int p);

struct PMultiple {
  Int r = 1;
  Int s = 1;
  /// p^k, the largest p-power dividing both r and s.
  Int factor = 1;
};

/// (r/p^k, s/p^k, p^k) when p divides both r and s, else nullopt.
std::optional<PMultiple> p_multiple_reduce(Int r, Int s, Int p);

enum class Engine { automatic, oracle, recurrence, closed };

struct DispatchOptions {
  Engine engine = Engine::automatic;
  OracleOptions oracle;
};

/// lambda(r,s,p) for r, s >= 1 and p prime or 0. Inputs with r > s are
/// swapped. The automatic engine applies p-multiple reduction, then
/// periodicity/duality, then the closed forms, falling back to the
/// recurrence. Forced engines skip the fallbacks: `oracle` and `recurrence`
/// run on the (swapped) input directly, `closed` throws Inapplicable when
/// no closed form covers the reduced parameters.
JordanRecord jordan_partition(Int r, Int s, Int p, const DispatchOptions& opts = {});

}  // namespace modjordan
