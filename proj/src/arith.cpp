#include "modjordan/arith.hpp"

#include <algorithm>
#include <string>

#include "modjordan/error.hpp"

namespace modjordan {

namespace {

// sqrt(kMaxPrime) < 46341, so these primes decide primality of every
// supported value.
const std::vector<Int>& small_primes() {
  static const std::vector<Int> table = [] {
    constexpr Int limit = 46341;
    std::vector<bool> composite(limit + 1, false);
    std::vector<Int> out;
    for (Int i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (Int j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return table;
}

// C(a, b) mod p for 0 <= b <= a < p.
Int small_binomial_mod(Int a, Int b, Int p) {
  b = std::min(b, a - b);
  Int num = 1;
  Int den = 1;
  for (Int i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return num * inverse_mod(den, p) % p;
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

Int checked_pow(Int base, int exp) {
  Int out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

bool is_prime(Int n) {
  if (n < 2 || n > kMaxPrime) return false;
  for (Int d : small_primes()) {
    if (d * d > n) break;
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Int> primes_in_range(Int lo, Int hi) {
  std::vector<Int> out;
  for (Int n = std::max<Int>(lo, 2); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

Int next_prime(Int n) {
  for (Int c = std::max<Int>(n, 2);; ++c) {
    if (c > kMaxPrime) throw OverflowError("no supported prime >= " + std::to_string(n));
    if (is_prime(c)) return c;
  }
}

void require_prime(Int p) {
  if (!is_prime(p)) {
    throw InvalidArgument("p = " + std::to_string(p) + " is not a supported prime");
  }
}

Int legendre_valuation(Int n, Int p) {
  if (n < 0) throw InvalidArgument("legendre_valuation: n < 0");
  Int total = 0;
  while (n > 0) {
    n /= p;
    total += n;
  }
  return total;
}

Int falling_valuation(Int n, Int i, Int p) {
  if (i < 0 || n < i) {
    throw InvalidArgument("falling_valuation: need n >= i >= 0, got n=" + std::to_string(n) +
                          " i=" + std::to_string(i));
  }
  return legendre_valuation(n, p) - legendre_valuation(n - i, p);
}

Int valuation(Int n, Int p) {
  if (n <= 0) throw InvalidArgument("valuation: n must be positive");
  Int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Int binomial_mod_p(Int n, Int k, Int p) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int result = 1;
  while (n > 0 || k > 0) {
    const Int nd = n % p;
    const Int kd = k % p;
    if (kd > nd) return 0;
    result = result * small_binomial_mod(nd, kd, p) % p;
    n /= p;
    k /= p;
  }
  return result;
}

PrimePower period_for_rank(Int p, Int r) {
  if (r < 1) throw InvalidArgument("period_for_rank: r must be >= 1");
  PrimePower out{p, 0, 1};
  while (out.q < r) {
    out.q = checked_mul(out.q, p);
    ++out.m;
  }
  return out;
}

Int inverse_mod(Int a, Int p) {
  // Fermat: a^(p-2). Residues are < 2^31 so products fit.
  a = mod_floor(a, p);
  if (a == 0) throw InvalidArgument("inverse_mod: zero has no inverse");
  Int result = 1;
  Int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

Int mod_floor(Int a, Int n) {
  const Int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace modjordan
