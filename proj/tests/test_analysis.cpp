#include <doctest.h>

#include "superperm/analysis.hpp"

using namespace superperm;

namespace {

// Exact sums of k! for k = 1..n, frozen from an independent big-integer evaluation.
BigInt frozen_sum_factorials(std::size_t n) {
  switch (n) {
    case 12: return BigInt("522956313");
    case 20: return BigInt("2561327494111820313");
    case 21: return BigInt("53652269665821260313");
    case 30: return BigInt("274410818470142134209703780940313");
    default: return -1;
  }
}

}  // namespace

TEST_CASE("length formulas") {
  CHECK(length_closed_form(1) == 1);
  CHECK(length_closed_form(2) == 3);
  CHECK(length_closed_form(3) == 9);
  CHECK(length_closed_form(5) == 153);
  CHECK(length_closed_form(6) == 873);
  for (std::size_t n : {12u, 20u, 21u, 30u}) {
    CHECK(length_closed_form(n) == frozen_sum_factorials(n));
    CHECK(length_sum_factorials(n) == frozen_sum_factorials(n));
  }
  for (std::size_t n = 1; n <= 30; ++n) CHECK(length_closed_form(n) == length_sum_factorials(n));
  CHECK_THROWS_AS(length_closed_form(0), std::invalid_argument);
}

TEST_CASE("intersection counts") {
  CHECK(intersection_count(1) == 1);
  CHECK(intersection_count(2) == 4);
  CHECK(intersection_count(3) == 18);
  CHECK(intersection_count(4) == 96);
  CHECK_THROWS_AS(intersection_count(0), std::invalid_argument);
}

TEST_CASE("ring-order recurrence") {
  CHECK(intersections_by_ring_order(4, 0) == 4);
  CHECK(intersections_by_ring_order(5, 2) == 1);
  CHECK(intersections_by_ring_order(6, 3) == 1);
  CHECK(intersections_by_ring_order(6, 2) == 4);
  CHECK(intersections_by_ring_order(6, 1) == 18);
  for (std::size_t n = 3; n <= 12; ++n)
    for (std::size_t k = 0; k + 3 <= n; ++k) CHECK(intersections_by_ring_order(n, k) == intersection_count(n - k - 2));
  CHECK_THROWS_AS(intersections_by_ring_order(5, 3), std::out_of_range);
  CHECK_THROWS_AS(intersections_by_ring_order(2, 0), std::out_of_range);
}

TEST_CASE("operation count") {
  CHECK(operation_count(2) == 0);
  CHECK(operation_count(3) == 1);
  CHECK(operation_count(4) == 5);
  CHECK(operation_count(6) == 119);
}

TEST_CASE("length report and accounting identity") {
  const auto r4 = length_report(4);
  CHECK(r4.length_closed_form == 33);
  CHECK(r4.bead_count == 6);
  CHECK(r4.operation_count == 5);
  CHECK(r4.intersection_histogram == std::map<std::size_t, BigInt>{{1, 1}, {2, 4}});
  CHECK(length_report(6).length_closed_form == 873);
  const auto r1 = length_report(1);
  CHECK(r1.length_closed_form == 1);
  CHECK(r1.bead_count == 1);
  CHECK(r1.intersection_histogram.empty());

  for (std::size_t n = 1; n <= 30; ++n) {
    const auto r = length_report(n);
    BigInt overlap = 0;
    for (const auto& [len, count] : r.intersection_histogram) overlap += count * len;
    CHECK(r.bead_count * (2 * n - 1) - overlap == r.length_sum_factorials);
    CHECK(r.length_closed_form == r.length_sum_factorials);
  }
}
