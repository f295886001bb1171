#include "modjordan/delta.hpp"

#include <string>

#include "modjordan/error.hpp"
#include "modjordan/fp_matrix.hpp"

namespace modjordan {

namespace {

void require_ordered(Int r, Int s) {
  if (r < 1 || r > s) {
    throw InvalidArgument("need 1 <= r <= s, got r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
}

void require_index(Int r, Int i) {
  if (i < 0 || i > r) throw InvalidArgument("delta index " + std::to_string(i) + " outside [0, r]");
}

}  // namespace

std::vector<bool> DeltaSequence::vanishing_pattern() const {
  std::vector<bool> out;
  out.reserve(valuations.size());
  for (Int v : valuations) out.push_back(v > 0);
  return out;
}

Int delta_valuation(Int r, Int s, Int p, Int i) {
  require_ordered(r, s);
  require_index(r, i);
  if (i == 0 || i == r) return 0;
  checked_add(r, s);
  Int v = 0;
  for (Int t = s; t <= r + s - 1 - i; ++t) v += falling_valuation(t, i, p);
  for (Int t = i; t <= r - 1; ++t) v -= falling_valuation(t, i, p);
  if (v < 0) throw std::logic_error("delta_valuation: negative valuation");
  return v;
}

DeltaSequence delta_sequence(Int r, Int s, Int p) {
  require_ordered(r, s);
  require_prime(p);
  DeltaSequence seq{r, s, p, {}};
  seq.valuations.reserve(static_cast<std::size_t>(r + 1));
  for (Int i = 0; i <= r; ++i) seq.valuations.push_back(delta_valuation(r, s, p, i));
  return seq;
}

Int delta_det_mod_p(Int r, Int s, Int p, Int i) {
  require_ordered(r, s);
  require_index(r, i);
  require_prime(p);
  const auto n = static_cast<std::size_t>(i);
  FpMatrix a(n, n, p);
  const Int top = s + r - 2 * i;
  for (Int j = 0; j < i; ++j) {
    for (Int k = 0; k < i; ++k) {
      a.set(static_cast<std::size_t>(j), static_cast<std::size_t>(k), binomial_mod_p(top, s - i + j - k, p));
    }
  }
  return a.determinant();
}

Partition partition_from_vanishing(Int r, Int s, const std::vector<bool>& vanishes) {
  require_ordered(r, s);
  if (static_cast<Int>(vanishes.size()) != r + 1 || vanishes[0] || vanishes[static_cast<std::size_t>(r)]) {
    throw InvalidArgument("vanishing pattern must have length r+1 with delta_0, delta_r nonzero");
  }
  std::vector<Int> parts(static_cast<std::size_t>(r + 2), 0);
  for (Int i = r; i >= 1; --i) {
    const auto idx = static_cast<std::size_t>(i);
    if (vanishes[idx]) {
      parts[idx] = parts[idx + 1];
      continue;
    }
    Int d = 1;
    while (vanishes[static_cast<std::size_t>(i - d)]) ++d;  // stops at delta_0
    parts[idx] = r + s - 2 * i + d;
  }
  Partition lambda(std::vector<Int>(parts.begin() + 1, parts.begin() + 1 + r));
  if (lambda.sum() != checked_mul(r, s) || lambda[static_cast<std::size_t>(r - 1)] < 1) {
    throw std::logic_error("recurrence produced an invalid partition " + render(lambda) + " for r=" +
                           std::to_string(r) + " s=" + std::to_string(s));
  }
  return lambda;
}

Partition recurrence_partition(Int r, Int s, Int p) {
  require_ordered(r, s);
  if (p == 0) {
    return partition_from_vanishing(r, s, std::vector<bool>(static_cast<std::size_t>(r + 1), false));
  }
  const auto pattern = delta_sequence(r, s, p).vanishing_pattern();
  return partition_from_vanishing(r, s, pattern);
}

}  // namespace modjordan
