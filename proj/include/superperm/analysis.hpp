#pragma once

#include <map>

#include "superperm/types.hpp"

namespace superperm {

/// Closed-form description of the mirror-shift construction for one n.
struct LengthReport {
  std::size_t n = 0;
  BigInt length_closed_form;    ///< (2n-1)(n-1)! - sum_{i=1}^{n-2} i^2 i!
  BigInt length_sum_factorials; ///< sum_{k=1}^{n} k!
  BigInt bead_count;            ///< (n-1)!
  std::map<std::size_t, BigInt> intersection_histogram;  ///< length -> w_length, 1 <= length <= n-2
  BigInt operation_count;       ///< (n-1)! - 1
};

BigInt factorial(std::size_t k);

/// Output length via bead accounting. Throws std::invalid_argument for n == 0.
BigInt length_closed_form(std::size_t n);

/// sum_{k=1}^{n} k!. Throws std::invalid_argument for n == 0.
BigInt length_sum_factorials(std::size_t n);

/// Number of emissions that overlap the previous output by exactly j symbols: j * j!.
/// Throws std::invalid_argument for j == 0.
BigInt intersection_count(std::size_t j);

/// Intersections between consecutive k-rings, evaluated with the top-down recurrence
/// i(k) = (n-k-1)! - 1 - sum_{j=k+1}^{n-3} i(j). Requires 0 <= k <= n-3.
BigInt intersections_by_ring_order(std::size_t n, std::size_t k);

/// Mirror shifts performed by the generator: (n-1)! - 1. Throws for n == 0.
BigInt operation_count(std::size_t n);

LengthReport length_report(std::size_t n);

}  // namespace superperm
