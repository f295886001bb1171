#include "doctest.h"

#include <algorithm>

#include "modjordan/algebra_oracle.hpp"
#include "modjordan/delta.hpp"
#include "modjordan/error.hpp"
#include "modjordan/fastpath.hpp"

using namespace modjordan;

namespace {

DeviationVector dv(std::vector<Int> e) { return DeviationVector(std::move(e)); }

const std::vector<Int> kPrimes{2, 3, 5, 7, 11, 13};

Int pm(Int p, Int r) {
  Int q = 1;
  while (q < r) q *= p;
  return q;
}

DeviationVector recurrence_eps(Int r, Int s, Int p) { return deviation(recurrence_partition(r, s, p), s); }

// Written out entry by entry, independently of the library's closed forms.
std::vector<DeviationVector> expected_closed_forms(Int r, Int s, Int p) {
  const Int q = pm(p, r);
  const Int a = s % q;
  std::vector<DeviationVector> out;
  if (a == 0) out.push_back(dv(std::vector<Int>(r, 0)));
  if (a == 1 % q) {
    std::vector<Int> e(r, -1);
    e[0] = r - 1;
    out.push_back(dv(e));
  }
  if (a == (q - 1) % q) {
    std::vector<Int> e(r, 1);
    e[r - 1] = -(r - 1);
    out.push_back(dv(e));
  }
  if (r >= 2 && a == 2 % q) {
    std::vector<Int> e(r, -2);
    if (r % p == 0) {
      e[0] = e[1] = r - 2;
    } else {
      e[0] = r - 1;
      e[1] = r - 3;
    }
    out.push_back(dv(e));
  }
  if (r >= 2 && a == (q - 2 % q) % q) {
    std::vector<Int> e(r, 2);
    if (r % p == 0) {
      e[r - 2] = e[r - 1] = 2 - r;
    } else {
      e[r - 2] = 3 - r;
      e[r - 1] = 1 - r;
    }
    out.push_back(dv(e));
  }
  return out;
}

}  // namespace

TEST_CASE("canonicalize examples") {
  const auto c = canonicalize(4, 17, 3);
  CHECK(c.period.q == 9);
  CHECK(c.s_star == 10);
  CHECK(c.dual);
  REQUIRE(c.reductions.size() == 2);
  CHECK(c.reductions[0].kind == ReductionKind::periodicity);
  CHECK(c.reductions[0].to == Params{4, 8, 3});
  CHECK(c.reductions[1].kind == ReductionKind::duality);
  CHECK(c.reductions[1].to == Params{4, 10, 3});

  const auto plain = canonicalize(4, 10, 3);
  CHECK(plain.s_star == 10);
  CHECK_FALSE(plain.dual);
  CHECK(plain.reductions.empty());

  const auto d = canonicalize(3, 7, 2);
  CHECK(d.dual);
  CHECK(d.s_star == 5);
  CHECK(jordan_partition(3, 7, 2).epsilon == dv({1, 1, -2}));
}

TEST_CASE("closed_form examples") {
  const auto one = closed_form(5, 9, 2);
  REQUIRE(one);
  CHECK(one->epsilon == dv({4, -1, -1, -1, -1}));
  CHECK(one->method == Method::closed_form);

  CHECK(closed_form(4, 6, 2)->epsilon == dv({2, 2, -2, -2}));
  CHECK(closed_form(4, 11, 3)->epsilon == dv({3, 1, -2, -2}));
  CHECK(closed_form(4, 7, 3)->epsilon == dv({2, 2, -1, -3}));

  const auto uni = closed_form(3, 8, 2);
  REQUIRE(uni);
  CHECK(uni->method == Method::uniform);
  CHECK(uni->epsilon.is_zero());

  const auto std_form = closed_form(5, 16, 11);
  REQUIRE(std_form);
  CHECK(std_form->method == Method::standard);
  CHECK(std_form->epsilon == dv({4, 2, 0, -2, -4}));

  CHECK_FALSE(closed_form(5, 12, 3));
}

TEST_CASE("standard_criterion") {
  CHECK(standard_criterion(5, 16, 11));
  CHECK_FALSE(standard_criterion(5, 14, 11));  // 14 = 3 mod 11
  CHECK_FALSE(standard_criterion(3, 9, 3));
  CHECK(standard_criterion(3, 7, 5));
}

TEST_CASE("largest_part examples") {
  CHECK(largest_part(4, 17, 3) == LargestPart{18, 3});
  CHECK(largest_part(4, 6, 2) == LargestPart{8, 2});
  CHECK(largest_part(2, 2, 2) == LargestPart{2, 2});
  CHECK(largest_part(6, 9, 0) == LargestPart{14, 1});
}

TEST_CASE("p_multiple_reduce") {
  const auto a = p_multiple_reduce(4, 6, 2);
  REQUIRE(a);
  CHECK(a->r == 2);
  CHECK(a->s == 3);
  CHECK(a->factor == 2);
  const auto b = p_multiple_reduce(9, 18, 3);
  REQUIRE(b);
  CHECK(b->r == 1);
  CHECK(b->s == 2);
  CHECK(b->factor == 9);
  CHECK_FALSE(p_multiple_reduce(3, 5, 2));
  CHECK_FALSE(p_multiple_reduce(4, 6, 3));
}

TEST_CASE("dispatcher examples") {
  const auto rec = jordan_partition(4, 17, 3);
  CHECK(rec.lambda == Partition({18, 18, 18, 14}));
  CHECK(rec.epsilon == dv({1, 1, 1, -3}));
  CHECK(rec.m == 2);
  CHECK(rec.method == Method::closed_form);

  CHECK(jordan_partition(5, 16, 11).method == Method::standard);
  CHECK(jordan_partition(3, 3, 3).method == Method::uniform);
  CHECK(jordan_partition(3, 3, 3).lambda == Partition({3, 3, 3}));

  const auto scaled = jordan_partition(4, 6, 2);
  CHECK(scaled.lambda == Partition({8, 8, 4, 4}));
  REQUIRE_FALSE(scaled.reductions.empty());
  CHECK(scaled.reductions[0].kind == ReductionKind::p_multiple);

  const auto swapped = jordan_partition(17, 4, 3);
  CHECK(swapped.r == 4);
  CHECK(swapped.s == 17);
  REQUIRE_FALSE(swapped.reductions.empty());
  CHECK(swapped.reductions[0].kind == ReductionKind::swap);
  CHECK(swapped.lambda == rec.lambda);

  const auto zero = jordan_partition(3, 5, 0);
  CHECK(zero.method == Method::char_zero);
  CHECK(zero.m == 0);
  CHECK(zero.lambda == Partition({7, 5, 3}));
}

TEST_CASE("dispatcher errors") {
  CHECK_THROWS_AS(jordan_partition(0, 5, 3), InvalidArgument);
  CHECK_THROWS_AS(jordan_partition(3, 5, 4), InvalidArgument);
  CHECK_THROWS_AS(jordan_partition(3, 5, 0, {Engine::oracle, {}}), Inapplicable);
  CHECK_THROWS_AS(jordan_partition(5, 12, 3, {Engine::closed, {}}), Inapplicable);
  CHECK_THROWS_AS(jordan_partition(150, 150, 2, {Engine::oracle, {}}), ResourceLimit);
}

TEST_CASE("forced engines agree") {
  for (Int p : {2, 3, 5}) {
    for (Int r = 1; r <= 8; ++r) {
      for (Int s = r; s <= 14; ++s) {
        const auto a = jordan_partition(r, s, p);
        REQUIRE(jordan_partition(r, s, p, {Engine::oracle, {}}).lambda == a.lambda);
        REQUIRE(jordan_partition(r, s, p, {Engine::recurrence, {}}).lambda == a.lambda);
        if (closed_form(r, s, p)) REQUIRE(jordan_partition(r, s, p, {Engine::closed, {}}).lambda == a.lambda);
      }
    }
  }
}

TEST_CASE("every applicable closed form matches the recurrence, including coinciding classes") {
  for (Int p : kPrimes) {
    for (Int r = 1; r <= 14; ++r) {
      const Int q = pm(p, r);
      for (Int s = r; s < r + q + 2 && s <= 200; ++s) {
        const auto truth = recurrence_eps(r, s, p);
        for (const auto& e : expected_closed_forms(r, s, p)) REQUIRE(e == truth);
        if (auto cf = closed_form(r, s, p)) REQUIRE(cf->epsilon == truth);
      }
    }
  }
}

TEST_CASE("dispatcher equals the bare recurrence") {
  for (Int p : kPrimes) {
    for (Int r = 1; r <= 12; ++r) {
      for (Int s = r; s <= 60; ++s) {
        REQUIRE(jordan_partition(r, s, p).lambda == recurrence_partition(r, s, p));
      }
    }
  }
}

TEST_CASE("periodicity, duality, uniform-iff, largest part") {
  for (Int p : kPrimes) {
    for (Int r = 1; r <= 10; ++r) {
      const Int q = pm(p, r);
      for (Int s = r; s <= 40; ++s) {
        const auto eps = recurrence_eps(r, s, p);
        REQUIRE(recurrence_eps(r, s + q, p) == eps);
        Int dual = ((-s) % q + q) % q;
        while (dual < r) dual += q;
        REQUIRE(recurrence_eps(r, dual, p) == negative_reverse(eps));
        REQUIRE(eps.is_zero() == (s % q == 0));
        const auto lam = recurrence_partition(r, s, p);
        REQUIRE(largest_part(r, s, p) == LargestPart{lam[0], lam.largest_multiplicity()});
      }
    }
  }
}

TEST_CASE("p-multiple scaling") {
  for (Int p : {2, 3, 5}) {
    for (Int r = 1; r <= 6; ++r) {
      for (Int s = r; s <= 12; ++s) {
        REQUIRE(recurrence_partition(p * r, p * s, p) == k_multiple(recurrence_partition(r, s, p), p));
        REQUIRE(jordan_partition(p * r, p * s, p).lambda == k_multiple(recurrence_partition(r, s, p), p));
      }
    }
  }
}
