#include "superperm/analysis.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace superperm {
namespace {

void require_positive_n(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
}

}  // namespace

BigInt factorial(std::size_t k) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt length_closed_form(std::size_t n) {
  require_positive_n(n);
  BigInt length = BigInt(2 * n - 1) * factorial(n - 1);
  BigInt i_factorial = 1;
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    i_factorial *= i;
    length -= BigInt(i) * i * i_factorial;
  }
  return length;
}

BigInt length_sum_factorials(std::size_t n) {
  require_positive_n(n);
  BigInt sum = 0;
  BigInt k_factorial = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    k_factorial *= k;
    sum += k_factorial;
  }
  return sum;
}

BigInt intersection_count(std::size_t j) {
  if (j == 0) throw std::invalid_argument("intersection length must be at least 1");
  return BigInt(j) * factorial(j);
}

BigInt intersections_by_ring_order(std::size_t n, std::size_t k) {
  if (n < 3 || k > n - 3) {
    throw std::out_of_range("ring order " + std::to_string(k) + " invalid for n = " + std::to_string(n) +
                            " (need n >= 3 and k <= n-3)");
  }
  // Bottom-up from the base case k = n-3, accumulating the suffix sum of i(j).
  std::vector<BigInt> by_order(n - 2);
  BigInt higher_orders = 0;
  for (std::size_t order = n - 3 + 1; order-- > k;) {
    by_order[order] = factorial(n - order - 1) - 1 - higher_orders;
    higher_orders += by_order[order];
  }
  return by_order[k];
}

BigInt operation_count(std::size_t n) {
  require_positive_n(n);
  return factorial(n - 1) - 1;
}

LengthReport length_report(std::size_t n) {
  require_positive_n(n);
  LengthReport report;
  report.n = n;
  report.length_closed_form = length_closed_form(n);
  report.length_sum_factorials = length_sum_factorials(n);
  report.bead_count = factorial(n - 1);
  for (std::size_t j = 1; j + 2 <= n; ++j) report.intersection_histogram.emplace(j, intersection_count(j));
  report.operation_count = operation_count(n);
  return report;
}

}  // namespace superperm
