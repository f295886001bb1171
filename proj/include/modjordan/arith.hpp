#pragma once

// Exact modular and p-adic arithmetic on 64-bit integers. Every operation
// that can exceed the width checks and throws OverflowError instead of
// wrapping.

#include <cstdint>
#include <vector>

namespace modjordan {

using Int = std::int64_t;

// p^m, with m the least exponent such that r <= p^m for the rank it was
// built for (so p^(m-1) < r <= p^m, reading p^(-1) as 0).
struct PrimePower {
  Int p = 2;
  int m = 0;
  Int q = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, int exp);

/// Largest prime accepted anywhere in the engine. Primality below this is
/// decided by deterministic trial division against a sieved table.
inline constexpr Int kMaxPrime = (Int{1} << 31) - 1;

bool is_prime(Int n);

/// All primes p with lo <= p <= hi, ascending.
std::vector<Int> primes_in_range(Int lo, Int hi);

/// Smallest prime >= n.
Int next_prime(Int n);

/// Throws InvalidArgument unless p is a prime <= kMaxPrime.
void require_prime(Int p);

/// nu_p(n!) by Legendre's formula.
Int legendre_valuation(Int n, Int p);

/// nu_p of the falling factorial n(n-1)...(n-i+1). Requires n >= i >= 0.
Int falling_valuation(Int n, Int i, Int p);

/// nu_p(n) for n >= 1.
Int valuation(Int n, Int p);

/// C(n, k) mod p by Lucas' theorem; 0 when k < 0 or k > n.
Int binomial_mod_p(Int n, Int k, Int p);

/// Least p^m >= r. Throws OverflowError if p^m does not fit.
PrimePower period_for_rank(Int p, Int r);

/// Modular inverse of a nonzero residue a mod prime p.
Int inverse_mod(Int a, Int p);

/// Canonical residue of a mod n in [0, n).
Int mod_floor(Int a, Int n);

}  // namespace modjordan
