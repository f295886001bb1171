#pragma once

// Partitions, deviation vectors, and the JordanRecord result envelope.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modjordan/arith.hpp"

namespace modjordan {

/// Weakly decreasing positive parts, stored densely (one entry per part).
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<Int> parts);

  const std::vector<Int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  Int operator[](std::size_t i) const { return parts_[i]; }
  Int sum() const;
  /// Number of parts equal to the largest part.
  Int largest_multiplicity() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
};

/// lambda - (s, ..., s). Weakly decreasing; trailing zeros kept so the
/// length always equals the number of parts.
class DeviationVector {
 public:
  DeviationVector() = default;
  /// Throws InvalidArgument unless entries are weakly decreasing.
  explicit DeviationVector(std::vector<Int> entries);

  const std::vector<Int>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  Int operator[](std::size_t i) const { return entries_[i]; }
  Int sum() const;
  bool is_zero() const;

  friend bool operator==(const DeviationVector&, const DeviationVector&) = default;
  friend auto operator<=>(const DeviationVector&, const DeviationVector&) = default;

 private:
  std::vector<Int> entries_;
};

DeviationVector deviation(const Partition& lambda, Int s);

/// Inverse of deviation: parts s + eps_i. Throws if a part would be <= 0.
Partition from_deviation(const DeviationVector& eps, Int s);

/// (e_1, ..., e_r) -> (-e_r, ..., -e_1).
DeviationVector negative_reverse(const DeviationVector& eps);

/// Each part l becomes k copies of k*l.
Partition k_multiple(const Partition& lambda, Int k);

/// (s+r-1, s+r-3, ..., s-r+1). Requires 1 <= r <= s.
Partition standard_partition(Int r, Int s);

/// r copies of s.
Partition uniform_partition(Int r, Int s);

/// (r-1, r-3, ..., -(r-1)), the deviation of the standard partition.
DeviationVector standard_vector(Int r);

/// "(a,b,c)" with no spaces and ASCII minus signs.
std::string render(std::span<const Int> values);
std::string render(const DeviationVector& eps);
std::string render(const Partition& lambda);

/// Parses the rendering above back into integers.
std::vector<Int> parse_rendered(std::string_view text);

enum class Method { oracle, recurrence, closed_form, standard, uniform, char_zero };

std::string_view to_string(Method m);
Method method_from_string(std::string_view name);

enum class ReductionKind { swap, periodicity, duality, p_multiple };

std::string_view to_string(ReductionKind k);
ReductionKind reduction_from_string(std::string_view name);

struct Params {
  Int r = 1;
  Int s = 1;
  Int p = 0;

  friend bool operator==(const Params&, const Params&) = default;
};

/// One symmetry step: eps/lambda at `from` is obtained from `to`.
struct Reduction {
  ReductionKind kind = ReductionKind::swap;
  Params from;
  Params to;

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

/// Result envelope. r <= s always (inputs are swapped if needed); for p > 0,
/// m is the least exponent with r <= p^m, and m = 0 when p = 0.
struct JordanRecord {
  Int r = 1;
  Int s = 1;
  Int p = 0;
  int m = 0;
  Partition lambda;
  DeviationVector epsilon;
  Method method = Method::recurrence;
  std::vector<Reduction> reductions;

  friend bool operator==(const JordanRecord&, const JordanRecord&) = default;
};

/// Checks the Jordan-partition invariants for (r, s): r parts summing to
/// rs, s <= lambda_1 <= r+s-1, |eps_i| <= r-1, lambda_i = s + eps_i.
/// Returns an empty string when all hold, else a description.
std::string check_jordan_invariants(const JordanRecord& rec);

}  // namespace modjordan
