#include "doctest.h"

#include "big_oracles.hpp"
#include "modjordan/algebra_oracle.hpp"
#include "modjordan/delta.hpp"
#include "modjordan/error.hpp"

using namespace modjordan;

TEST_CASE("delta_valuation examples") {
  CHECK(delta_valuation(5, 9, 3, 0) == 0);
  CHECK(delta_valuation(2, 2, 2, 1) == 1);  // delta_1 = C(2,1) = 2
  CHECK(delta_valuation(2, 3, 2, 1) == 0);  // delta_1 = C(3,1) = 3
  CHECK_THROWS_AS(delta_valuation(3, 2, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(delta_valuation(3, 4, 2, 4), InvalidArgument);
}

TEST_CASE("exact small determinants") {
  CHECK(oracles::delta(2, 2, 1) == 2);
  CHECK(oracles::delta(2, 3, 1) == 3);
  CHECK(oracles::delta(3, 4, 1) == 10);  // C(5,2)
  CHECK(oracles::delta(3, 4, 2) == 6);   // (1/2) C(3,1) C(4,1)
  CHECK(oracles::delta(3, 4, 3) == 1);
}

TEST_CASE("delta_sequence examples") {
  CHECK(delta_sequence(1, 6, 5).valuations == std::vector<Int>{0, 0});
  CHECK(delta_sequence(2, 2, 2).valuations == std::vector<Int>{0, 1, 0});
  CHECK(delta_sequence(3, 4, 2).valuations == std::vector<Int>{0, 1, 1, 0});
}

TEST_CASE("delta_valuation equals the valuation of the exact determinant") {
  for (Int r = 1; r <= 8; ++r) {
    for (Int s = r; s <= 14; ++s) {
      for (Int i = 0; i <= r; ++i) {
        const auto exact = oracles::delta(r, s, i);
        REQUIRE(exact != 0);
        for (Int p : {2, 3, 5, 7, 11, 13}) {
          REQUIRE(delta_valuation(r, s, p, i) == oracles::valuation(exact, p));
        }
      }
    }
  }
}

TEST_CASE("closed-form entries of the delta table") {
  // delta_1 = C(r+s-2, r-1), delta_{r-1} = C(s, r-1).
  for (Int r = 2; r <= 9; ++r) {
    for (Int s = r; s <= 16; ++s) {
      CHECK(oracles::delta(r, s, 1) == oracles::binomial(r + s - 2, r - 1));
      CHECK(oracles::delta(r, s, r - 1) == oracles::binomial(s, r - 1));
    }
  }
}

TEST_CASE("delta_det_mod_p") {
  CHECK(delta_det_mod_p(3, 5, 2, 0) == 1);
  CHECK(delta_det_mod_p(2, 2, 2, 1) == 0);
  CHECK(delta_det_mod_p(2, 3, 2, 1) == 1);
  CHECK(delta_det_mod_p(4, 7, 5, 4) == 1);  // upper triangular with unit diagonal
}

TEST_CASE("zero pattern: valuation > 0 iff determinant vanishes mod p") {
  for (Int p : {2, 3, 5, 7, 11, 13}) {
    for (Int r = 1; r <= 30; ++r) {
      for (Int s = r; s <= 30; ++s) {
        for (Int i = 0; i <= r; ++i) {
          REQUIRE((delta_valuation(r, s, p, i) > 0) == (delta_det_mod_p(r, s, p, i) == 0));
        }
      }
    }
  }
}

TEST_CASE("recurrence_partition examples") {
  CHECK(recurrence_partition(2, 3, 2) == Partition({4, 2}));
  CHECK(recurrence_partition(2, 2, 2) == Partition({2, 2}));
  CHECK(recurrence_partition(4, 17, 3) == Partition({18, 18, 18, 14}));
  CHECK_THROWS_AS(recurrence_partition(3, 2, 2), InvalidArgument);
}

TEST_CASE("characteristic zero gives the standard partition") {
  for (Int r = 1; r <= 20; ++r) {
    for (Int s = r; s <= 25; ++s) {
      REQUIRE(recurrence_partition(r, s, 0) == standard_partition(r, s));
    }
  }
}

TEST_CASE("no vanishing delta among 1..r-1 means standard") {
  for (Int p : {2, 3, 5, 7, 11, 13}) {
    for (Int r = 1; r <= 12; ++r) {
      for (Int s = r; s <= 40; ++s) {
        const auto v = delta_sequence(r, s, p).valuations;
        if (std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; })) {
          REQUIRE(recurrence_partition(r, s, p) == standard_partition(r, s));
        }
      }
    }
  }
}

TEST_CASE("recurrence agrees with the oracle") {
  for (Int p : {2, 3, 5, 7, 11, 13}) {
    for (Int r = 1; r <= 12; ++r) {
      for (Int s = r; s <= 12; ++s) {
        REQUIRE(recurrence_partition(r, s, p) == oracle_partition(r, s, p));
      }
    }
  }
}

TEST_CASE("partition_from_vanishing rejects malformed patterns") {
  CHECK_THROWS_AS(partition_from_vanishing(2, 3, {true, false, false}), InvalidArgument);
  CHECK_THROWS_AS(partition_from_vanishing(2, 3, {false, false}), InvalidArgument);
  CHECK(partition_from_vanishing(2, 2, {false, true, false}) == Partition({2, 2}));
}
