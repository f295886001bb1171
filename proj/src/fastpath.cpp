#include "modjordan/fastpath.hpp"

#include <string>
#include <utility>

#include "modjordan/delta.hpp"
#include "modjordan/error.hpp"

namespace modjordan {

namespace {

void require_ordered(Int r, Int s) {
  if (r < 1 || r > s) {
    throw InvalidArgument("need 1 <= r <= s, got r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
}

// Least member >= r of the residue class c mod q.
Int least_in_class(Int c, Int q, Int r) {
  if (c >= r) return c;
  const Int steps = (r - c + q - 1) / q;
  return checked_add(c, checked_mul(steps, q));
}

DeviationVector filled(Int r, std::vector<Int> head, Int fill, std::vector<Int> tail = {}) {
  std::vector<Int> out = std::move(head);
  const auto middle = static_cast<std::size_t>(r) - out.size() - tail.size();
  out.insert(out.end(), middle, fill);
  out.insert(out.end(), tail.begin(), tail.end());
  return DeviationVector(std::move(out));
}

}  // namespace

Canonical canonicalize(Int r, Int s, Int p) {
  require_ordered(r, s);
  require_prime(p);
  Canonical out;
  out.period = period_for_rank(p, r);
  const Int q = out.period.q;
  const Int a = s % q;
  const Int own = least_in_class(a, q, r);
  if (2 * a <= q) {
    out.s_star = own;
    if (s != own) out.reductions.push_back({ReductionKind::periodicity, {r, s, p}, {r, own, p}});
    return out;
  }
  out.dual = true;
  out.s_star = least_in_class(q - a, q, r);
  if (s != own) out.reductions.push_back({ReductionKind::periodicity, {r, s, p}, {r, own, p}});
  out.reductions.push_back({ReductionKind::duality, {r, own, p}, {r, out.s_star, p}});
  return out;
}

bool standard_criterion(Int r, Int s, Int p) {
  const Int a = s % p;
  if (a == 0) return false;
  const Int band = r - 2;
  return a > band && a < p - band;
}

std::optional<ClosedForm> closed_form(Int r, Int s, Int p) {
  require_ordered(r, s);
  require_prime(p);
  const Int q = period_for_rank(p, r).q;
  const Int a = s % q;
  const bool r_divisible = r % p == 0;

  if (a == 0) return ClosedForm{DeviationVector(std::vector<Int>(static_cast<std::size_t>(r), 0)), Method::uniform};
  if (a == 1) return ClosedForm{filled(r, {r - 1}, -1), Method::closed_form};
  if (a == q - 1) return ClosedForm{filled(r, {}, 1, {-(r - 1)}), Method::closed_form};
  if (r >= 2 && a == 2 % q) {
    auto eps = r_divisible ? filled(r, {r - 2, r - 2}, -2) : filled(r, {r - 1, r - 3}, -2);
    return ClosedForm{std::move(eps), Method::closed_form};
  }
  if (r >= 2 && a == mod_floor(q - 2, q)) {
    auto eps = r_divisible ? filled(r, {}, 2, {2 - r, 2 - r}) : filled(r, {}, 2, {3 - r, 1 - r});
    return ClosedForm{std::move(eps), Method::closed_form};
  }
  if (standard_criterion(r, s, p)) return ClosedForm{standard_vector(r), Method::standard};
  return std::nullopt;
}

LargestPart largest_part(Int r, Int s, Int p) {
  require_ordered(r, s);
  if (p == 0) return {r + s - 1, 1};
  require_prime(p);
  for (Int k = 1; k <= r; ++k) {
    if (binomial_mod_p(r + s - 1 - k, r - 1, p) != 0) return {r + s - k, k};
  }
  // C(s-1, r-1) can vanish, but lambda_1 >= s bounds k by r.
  throw std::logic_error("largest_part: no admissible k <= r");
}

std::optional<PMultiple> p_multiple_reduce(Int r, Int s, Int p) {
  if (p < 2) return std::nullopt;
  PMultiple out{r, s, 1};
  while (out.r % p == 0 && out.s % p == 0) {
    out.r /= p;
    out.s /= p;
    out.factor *= p;
  }
  if (out.factor == 1) return std::nullopt;
  return out;
}

JordanRecord jordan_partition(Int r, Int s, Int p, const DispatchOptions& opts) {
  if (r < 1 || s < 1) throw InvalidArgument("r and s must be >= 1");
  if (p != 0) require_prime(p);
  checked_mul(r, s);
  checked_add(r, s);

  JordanRecord rec;
  if (r > s) {
    rec.reductions.push_back({ReductionKind::swap, {r, s, p}, {s, r, p}});
    std::swap(r, s);
  }
  rec.r = r;
  rec.s = s;
  rec.p = p;

  if (p == 0) {
    if (opts.engine == Engine::oracle) throw Inapplicable("the oracle works over F_p and needs p > 0");
    rec.m = 0;
    if (opts.engine == Engine::recurrence) {
      rec.lambda = recurrence_partition(r, s, 0);
      rec.method = Method::recurrence;
    } else {
      rec.lambda = standard_partition(r, s);
      rec.method = Method::char_zero;
    }
  } else {
    rec.m = period_for_rank(p, r).m;
    switch (opts.engine) {
      case Engine::oracle:
        rec.lambda = oracle_partition(r, s, p, opts.oracle);
        rec.method = Method::oracle;
        break;
      case Engine::recurrence:
        rec.lambda = recurrence_partition(r, s, p);
        rec.method = Method::recurrence;
        break;
      case Engine::automatic:
      case Engine::closed: {
        Int rr = r;
        Int ss = s;
        Int factor = 1;
        if (auto red = p_multiple_reduce(r, s, p)) {
          rec.reductions.push_back({ReductionKind::p_multiple, {r, s, p}, {red->r, red->s, p}});
          rr = red->r;
          ss = red->s;
          factor = red->factor;
        }
        auto canon = canonicalize(rr, ss, p);
        rec.reductions.insert(rec.reductions.end(), canon.reductions.begin(), canon.reductions.end());

        DeviationVector eps;
        if (auto cf = closed_form(rr, canon.s_star, p)) {
          eps = std::move(cf->epsilon);
          rec.method = cf->method;
        } else if (opts.engine == Engine::closed) {
          throw Inapplicable("no closed form for r=" + std::to_string(rr) + " s=" + std::to_string(canon.s_star) +
                             " p=" + std::to_string(p));
        } else {
          eps = deviation(recurrence_partition(rr, canon.s_star, p), canon.s_star);
          rec.method = Method::recurrence;
        }
        if (canon.dual) eps = negative_reverse(eps);
        auto lambda = from_deviation(eps, ss);
        rec.lambda = factor > 1 ? k_multiple(lambda, factor) : std::move(lambda);
        break;
      }
    }
  }

  rec.epsilon = deviation(rec.lambda, s);
  if (auto problem = check_jordan_invariants(rec); !problem.empty()) {
    throw std::logic_error("jordan_partition(" + std::to_string(r) + "," + std::to_string(s) + "," +
                           std::to_string(p) + "): " + problem);
  }
  return rec;
}

}  // namespace modjordan
