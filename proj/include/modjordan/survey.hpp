#pragma once

// Tables of deviation vectors for a fixed r, over all s >= r and primes p.

#include <optional>
#include <vector>

#include "modjordan/arith.hpp"
#include "modjordan/partition.hpp"

namespace modjordan {

struct TableRow {
  Int prime = 2;
  /// Row stands for every prime p' >= 2r-3 (prime holds the representative).
  bool generic = false;
  /// p^m for this row's prime.
  Int modulus = 1;
  Int residue = 0;
  /// The s >= r actually evaluated.
  Int s = 1;
  DeviationVector epsilon;
};

struct DeviationTable {
  Int r = 1;
  /// Small primes p < 2r-3 in ascending order with residues 0..p^m/2, then
  /// the generic large-prime rows with residues 0..r-1.
  std::vector<TableRow> rows;
};

/// Representative prime used for the generic row: the least prime >= 2r-2,
/// so residue r-1 lies in the standard band.
Int generic_table_prime(Int r);

DeviationTable deviation_table(Int r, unsigned threads = 1);

struct CensusEntry {
  DeviationVector epsilon;
  /// A witness: eps(r, s, p) = epsilon.
  Int s = 1;
  Int p = 2;
};

struct DeviationCensus {
  Int r = 1;
  Int prime_bound = 3;
  /// Distinct vectors (deduplicated on their canonical rendering), sorted
  /// lexicographically by entries, largest first.
  std::vector<CensusEntry> entries;

  std::size_t count() const { return entries.size(); }
};

inline Int default_prime_bound(Int r) { return 3 * r; }

/// Union over every prime p <= prime_bound and every s in one full period
/// r..r+p^m-1, plus the standard vector (attained by all large primes).
/// Requires prime_bound >= 3r.
DeviationCensus enumerate_deviation_vectors(Int r, Int prime_bound, unsigned threads = 1);

/// n_r <= 2^(r-1).
bool check_bound(const DeviationCensus& census);

}  // namespace modjordan
