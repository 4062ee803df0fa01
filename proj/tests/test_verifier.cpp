#include <doctest.h>

#include <random>

#include "superperm/generator.hpp"
#include "superperm/verifier.hpp"
#include "test_support.hpp"

using namespace superperm;
using test_support::to_seq;

namespace {

std::vector<Symbol> glyphs(std::string_view text, std::size_t n) { return Alphabet::standard(n).parse(text); }

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank_permutation(glyphs("123", 3)) == PermutationRank{0});
  CHECK(rank_permutation(glyphs("321", 3)) == PermutationRank{5});
  CHECK(rank_permutation(glyphs("231", 3)) == PermutationRank{3});
  CHECK(rank_permutation(glyphs("312", 3)) == PermutationRank{4});
  CHECK_FALSE(rank_permutation(glyphs("121", 3)).has_value());
  CHECK_FALSE(rank_permutation(std::vector<Symbol>{0, 7, 1}).has_value());
  CHECK(rank_permutation({}) == PermutationRank{0});
  CHECK_THROWS_AS(rank_permutation(std::vector<Symbol>(21, 0)), CapacityExceeded);
  CHECK_THROWS_AS(unrank_permutation(PermutationRank{6}, 3), std::out_of_range);
}

TEST_CASE("rank is a bijection matching lexicographic enumeration") {
  for (int n = 1; n <= 7; ++n) {
    auto p = oracle::identity(n);
    std::uint64_t expected = 0;
    do {
      const std::vector<Symbol> perm(p.begin(), p.end());
      const auto rank = rank_permutation(perm);
      REQUIRE(rank.has_value());
      CHECK(rank->value == expected);
      CHECK(unrank_permutation(*rank, static_cast<std::size_t>(n)) == perm);
      ++expected;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  CHECK(oracle::enumerated_rank(oracle::digits("231")) == 3);
}

TEST_CASE("verify examples") {
  auto r = verify(glyphs("123121321", 3), 3, true);
  CHECK(r.length == 9);
  CHECK(r.covered == 6);
  CHECK(r.complete);
  CHECK(r.is_palindrome == true);
  CHECK(r.windows == 7);
  CHECK(r.permutation_windows == 6);
  CHECK_FALSE(r.first_missing.has_value());

  r = verify(glyphs("12312", 3), 3);
  CHECK(r.covered == 3);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.is_palindrome.has_value());
  REQUIRE(r.first_missing.has_value());
  CHECK(r.first_missing->value == 1);  // "132"

  r = verify(glyphs("121", 2), 2);
  CHECK(r.covered == 2);
  CHECK(r.complete);

  r = verify(glyphs("12", 3), 3);
  CHECK(r.windows == 0);
  CHECK_FALSE(r.complete);
}

TEST_CASE("verify errors") {
  CHECK_THROWS_AS(verify(std::vector<Symbol>{0, 1, 3}, 3), MalformedInput);
  CHECK_THROWS_AS(StreamingVerifier(13), CapacityExceeded);
  CHECK_THROWS_AS(StreamingVerifier(0), std::invalid_argument);
  CHECK_NOTHROW(StreamingVerifier(13, VerifierOptions{false, 13}));
  CHECK_THROWS_AS(StreamingVerifier(21, VerifierOptions{false, 30}), CapacityExceeded);
}

TEST_CASE("coverage matches brute force on random strings") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 5; ++n) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 50; ++trial) {
      oracle::Seq seq(static_cast<std::size_t>(40 + trial));
      for (auto& s : seq) s = pick(rng);
      const std::vector<Symbol> symbols(seq.begin(), seq.end());
      const auto report = verify(symbols, static_cast<std::size_t>(n), true);
      CHECK(report.covered == oracle::covered_permutations(seq, n).size());
      CHECK(report.permutation_windows >= report.covered);
      CHECK(*report.is_palindrome == std::equal(seq.begin(), seq.end(), seq.rbegin()));
    }
  }
}

TEST_CASE("streaming in chunks equals one-shot verification") {
  const auto seq = generate_sequence(6);
  const auto whole = verify(seq, 6, true);
  std::mt19937_64 rng(9);
  StreamingVerifier streaming(6, VerifierOptions{true});
  std::size_t pos = 0;
  while (pos < seq.size()) {
    const std::size_t take = std::min<std::size_t>(seq.size() - pos, 1 + rng() % 17);
    streaming.feed(std::span<const Symbol>(seq).subspan(pos, take));
    pos += take;
  }
  const auto chunked = streaming.finish();
  CHECK(chunked.length == whole.length);
  CHECK(chunked.covered == whole.covered);
  CHECK(chunked.permutation_windows == whole.permutation_windows);
  CHECK(chunked.is_palindrome == whole.is_palindrome);
  CHECK(chunked.complete);
}

TEST_CASE("every single-symbol mutation of the n = 4 output is detected") {
  const auto seq = generate_sequence(4);
  REQUIRE(seq.size() == 33);
  for (std::size_t pos = 0; pos < seq.size(); ++pos) {
    for (Symbol alt = 0; alt < 4; ++alt) {
      if (alt == seq[pos]) continue;
      auto mutated = seq;
      mutated[pos] = alt;
      const auto report = verify(mutated, 4);
      CHECK_MESSAGE(!report.complete, "position " << pos << " -> " << int(alt));
    }
  }
}

TEST_CASE("generator output multiplicity for n = 3..8") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto report = verify(generate_sequence(n), n, true);
    CHECK(report.complete);
    CHECK(*report.is_palindrome);
    // Every permutation window is distinct in this construction.
    CHECK(report.permutation_windows == report.covered);
  }
}
