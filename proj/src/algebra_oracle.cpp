#include "modjordan/algebra_oracle.hpp"

#include <algorithm>

#include "modjordan/error.hpp"
#include "modjordan/fp_matrix.hpp"

namespace modjordan {

namespace {

void require_dims(Int r, Int s) {
  if (r < 1 || s < 1) throw InvalidArgument("algebra dimensions must be >= 1");
}

}  // namespace

AlgebraVector::AlgebraVector(Int r, Int s, Int p)
    : r_(r), s_(s), p_(p), coeffs_(static_cast<std::size_t>(checked_mul(r, s)), 0) {
  require_dims(r, s);
}

std::size_t AlgebraVector::index(Int i, Int j) const {
  if (i < 0 || i >= r_ || j < 0 || j >= s_) {
    throw InvalidArgument("monomial x^" + std::to_string(i) + "y^" + std::to_string(j) + " out of range");
  }
  return static_cast<std::size_t>(i * s_ + j);
}

void AlgebraVector::set(Int i, Int j, Int value) { coeffs_[index(i, j)] = mod_floor(value, p_); }

bool AlgebraVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

std::string AlgebraVector::to_string() const {
  std::string out;
  for (Int i = 0; i < r_; ++i) {
    for (Int j = 0; j < s_; ++j) {
      const Int c = coefficient(i, j);
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (c != 1) out += std::to_string(c) + "*";
      out += "x^" + std::to_string(i) + "y^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

MonomialAlgebra::MonomialAlgebra(Int r, Int s, Int p) : r_(r), s_(s), p_(p) {
  require_dims(r, s);
  require_prime(p);
  checked_mul(r, s);
}

AlgebraVector MonomialAlgebra::monomial(Int i, Int j, Int coefficient) const {
  auto v = zero();
  v.set(i, j, coefficient);
  return v;
}

AlgebraVector MonomialAlgebra::apply_nilpotent(const AlgebraVector& v) const {
  auto out = zero();
  for (Int i = 0; i < r_; ++i) {
    for (Int j = 0; j < s_; ++j) {
      const Int c = v.coefficient(i, j);
      if (c == 0) continue;
      if (i + 1 < r_) out.set(i + 1, j, out.coefficient(i + 1, j) + c);
      if (j + 1 < s_) out.set(i, j + 1, out.coefficient(i, j + 1) + c);
    }
  }
  return out;
}

AlgebraVector MonomialAlgebra::power_expansion(Int n) const {
  if (n < 0) throw InvalidArgument("power_expansion: n must be >= 0");
  auto out = zero();
  const Int lo = std::max<Int>(0, n - s_ + 1);
  const Int hi = std::min<Int>(n, r_ - 1);
  for (Int i = lo; i <= hi; ++i) out.set(i, n - i, binomial_mod_p(n, i, p_));
  return out;
}

std::vector<AlgebraVector> MonomialAlgebra::annihilator_basis() const {
  if (r_ > s_) throw InvalidArgument("annihilator_basis: need r <= s");
  std::vector<AlgebraVector> basis;
  basis.reserve(static_cast<std::size_t>(r_));
  for (Int i = 0; i < r_; ++i) {
    auto w = zero();
    for (Int j = 0; j <= i; ++j) w.set(r_ - 1 - j, s_ - 1 - i + j, (j % 2 == 0) ? 1 : -1);
    basis.push_back(std::move(w));
  }
  return basis;
}

RankProfile rank_profile(Int r, Int s, Int p, const OracleOptions& opts) {
  require_dims(r, s);
  require_prime(p);
  const Int dim = checked_mul(r, s);
  if (dim > opts.ceiling) {
    throw ResourceLimit("oracle: r*s = " + std::to_string(dim) + " exceeds ceiling " +
                        std::to_string(opts.ceiling));
  }

  // x+y raises total degree by one, so (x+y)^k maps the degree-d monomials
  // into degree d+k and its rank is the sum of the ranks of those blocks.
  // images[d][c] holds the image of the c-th degree-d monomial (x-exponent
  // lo(d)+c) as coefficients indexed by x-exponent.
  const Int max_degree = r + s - 2;
  auto lo = [&](Int d) { return std::max<Int>(0, d - s + 1); };
  auto hi = [&](Int d) { return std::min<Int>(d, r - 1); };

  std::vector<std::vector<std::vector<Int>>> images(static_cast<std::size_t>(max_degree + 1));
  for (Int d = 0; d <= max_degree; ++d) {
    for (Int i = lo(d); i <= hi(d); ++i) {
      std::vector<Int> coeffs(static_cast<std::size_t>(r), 0);
      coeffs[static_cast<std::size_t>(i)] = 1;
      images[static_cast<std::size_t>(d)].push_back(std::move(coeffs));
    }
  }

  RankProfile profile;
  profile.ranks.push_back(dim);
  for (Int k = 1; profile.ranks.back() > 0; ++k) {
    Int total = 0;
    for (Int d = 0; d <= max_degree; ++d) {
      const Int target = d + k;
      auto& block = images[static_cast<std::size_t>(d)];
      for (auto& coeffs : block) {
        // Multiply by x+y: coefficient at x^i gains the old coefficients at
        // x^i (times y) and x^(i-1) (times x).
        for (Int i = r - 1; i >= 0; --i) {
          Int c = coeffs[static_cast<std::size_t>(i)];
          if (i > 0) c += coeffs[static_cast<std::size_t>(i - 1)];
          const bool valid = target <= max_degree && i >= lo(target) && i <= hi(target);
          coeffs[static_cast<std::size_t>(i)] = valid ? c % p : 0;
        }
      }
      if (target > max_degree || block.empty()) continue;
      const Int row_lo = lo(target);
      const Int row_hi = hi(target);
      FpMatrix m(static_cast<std::size_t>(row_hi - row_lo + 1), block.size(), p);
      for (std::size_t c = 0; c < block.size(); ++c) {
        for (Int i = row_lo; i <= row_hi; ++i) {
          m.set(static_cast<std::size_t>(i - row_lo), c, block[c][static_cast<std::size_t>(i)]);
        }
      }
      total += static_cast<Int>(m.rank());
    }
    profile.ranks.push_back(total);
  }
  return profile;
}

Partition partition_from_ranks(const RankProfile& profile) {
  const auto& ranks = profile.ranks;
  if (ranks.empty() || ranks.back() != 0) throw InvalidArgument("rank profile must end at 0");
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
    if (ranks[k + 1] >= ranks[k]) throw InvalidArgument("rank profile must strictly decrease until 0");
  }
  for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
    if (ranks[k - 1] - ranks[k] < ranks[k] - ranks[k + 1]) {
      throw InvalidArgument("rank profile differences must be weakly decreasing");
    }
  }
  auto rank_at = [&](std::size_t k) { return k < ranks.size() ? ranks[k] : Int{0}; };
  std::vector<Int> parts;
  for (std::size_t t = ranks.size() - 1; t >= 1; --t) {
    const Int mult = rank_at(t - 1) - 2 * rank_at(t) + rank_at(t + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(mult), static_cast<Int>(t));
  }
  return Partition(std::move(parts));
}

Partition oracle_partition(Int r, Int s, Int p, const OracleOptions& opts) {
  return partition_from_ranks(rank_profile(r, s, p, opts));
}

std::size_t span_rank(const std::vector<AlgebraVector>& vectors) {
  if (vectors.empty()) return 0;
  const auto& first = vectors.front();
  FpMatrix m(vectors.size(), first.coefficients().size(), first.prime());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& c = vectors[i].coefficients();
    if (c.size() != m.cols()) throw InvalidArgument("span_rank: vectors from different algebras");
    for (std::size_t j = 0; j < c.size(); ++j) m.set(i, j, c[j]);
  }
  return m.rank();
}

}  // namespace modjordan
