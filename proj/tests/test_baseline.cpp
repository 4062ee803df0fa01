#include <doctest.h>

#include "superperm/analysis.hpp"
#include "superperm/baseline.hpp"
#include "superperm/generator.hpp"
#include "superperm/verifier.hpp"
#include "test_support.hpp"

using namespace superperm;
using test_support::render;

TEST_CASE("base cases") {
  CHECK(render(recursive_superperm(1).sequence, 1) == "1");
  CHECK(render(recursive_superperm(2).sequence, 2) == "121");
  CHECK(render(recursive_superperm(3).sequence, 3) == "123121321");
}

TEST_CASE("overlap merging") {
  const std::vector<Symbol> a{0, 1, 2, 0, 1};
  const std::vector<Symbol> b{2, 0, 1, 2};
  CHECK(max_overlap(a, b) == 3);
  CHECK(max_overlap(b, a) == 3);
  CHECK(max_overlap(a, a) == 2);
  CHECK(max_overlap({}, a) == 0);
  CHECK(max_overlap(std::vector<Symbol>{0}, std::vector<Symbol>{1}) == 0);
}

TEST_CASE("recursive builds are complete with sum-of-factorials length") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto build = recursive_superperm(n);
    CHECK(build.n == n);
    const auto report = verify(build.sequence, n);
    CHECK(report.complete);
    CHECK(BigInt(build.sequence.size()) == length_sum_factorials(n));
    CHECK(BigInt(build.sequence.size()) == BigInt(generate_sequence(n).size()));
  }
}

TEST_CASE("deterministic and bounded") {
  CHECK(recursive_superperm(6).sequence == recursive_superperm(6).sequence);
  CHECK_THROWS_AS(recursive_superperm(10), CapacityExceeded);
  CHECK_THROWS_AS(recursive_superperm(0), std::invalid_argument);
  CHECK(recursive_superperm(4, 4).sequence.size() == 33);
}
