#include "modjordan/survey.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "modjordan/error.hpp"
#include "modjordan/fastpath.hpp"
#include "modjordan/parallel.hpp"

namespace modjordan {

namespace {

Int least_in_class(Int c, Int q, Int r) {
  if (c >= r) return c;
  return c + q * ((r - c + q - 1) / q);
}

struct Cell {
  Int p;
  Int s;
};

}  // namespace

Int generic_table_prime(Int r) { return next_prime(std::max<Int>(2, 2 * r - 2)); }

DeviationTable deviation_table(Int r, unsigned threads) {
  if (r < 1) throw InvalidArgument("deviation_table: r must be >= 1");
  DeviationTable table{r, {}};
  for (Int p : primes_in_range(2, 2 * r - 4)) {
    const Int q = period_for_rank(p, r).q;
    for (Int a = 0; 2 * a <= q; ++a) {
      table.rows.push_back({p, false, q, a, least_in_class(a, q, r), {}});
    }
  }
  const Int generic = generic_table_prime(r);
  const Int q = period_for_rank(generic, r).q;
  for (Int a = 0; a <= r - 1; ++a) {
    table.rows.push_back({generic, true, q, a, least_in_class(a, q, r), {}});
  }
  parallel_for(table.rows.size(), threads, [&](std::size_t i) {
    auto& row = table.rows[i];
    row.epsilon = jordan_partition(r, row.s, row.prime).epsilon;
  });
  return table;
}

DeviationCensus enumerate_deviation_vectors(Int r, Int prime_bound, unsigned threads) {
  if (r < 1) throw InvalidArgument("census: r must be >= 1");
  if (prime_bound < 3 * r) {
    throw InvalidArgument("census: prime bound " + std::to_string(prime_bound) + " is below 3r = " +
                          std::to_string(3 * r));
  }
  std::vector<Cell> cells;
  for (Int p : primes_in_range(2, prime_bound)) {
    const Int q = period_for_rank(p, r).q;
    for (Int s = r; s < r + q; ++s) cells.push_back({p, s});
  }
  std::vector<DeviationVector> results(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    results[i] = jordan_partition(r, cells[i].s, cells[i].p).epsilon;
  });

  std::map<std::string, CensusEntry> distinct;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    distinct.try_emplace(render(results[i]), CensusEntry{results[i], cells[i].s, cells[i].p});
  }
  // Every prime beyond the bound with s = r-1 mod p lands in the standard
  // band; record one such witness.
  const Int big = next_prime(std::max<Int>(prime_bound + 1, 2 * r - 2));
  distinct.try_emplace(render(standard_vector(r)), CensusEntry{standard_vector(r), big + r - 1, big});

  DeviationCensus census{r, prime_bound, {}};
  for (auto& [key, entry] : distinct) census.entries.push_back(std::move(entry));
  std::sort(census.entries.begin(), census.entries.end(),
            [](const CensusEntry& a, const CensusEntry& b) { return a.epsilon > b.epsilon; });
  return census;
}

bool check_bound(const DeviationCensus& census) {
  if (census.r - 1 >= 63) return true;
  return static_cast<Int>(census.count()) <= (Int{1} << (census.r - 1));
}

}  // namespace modjordan
