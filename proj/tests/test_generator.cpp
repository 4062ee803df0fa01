#include <doctest.h>

#include "superperm/analysis.hpp"
#include "superperm/generator.hpp"
#include "test_support.hpp"

using namespace superperm;
using test_support::render;

namespace {

// Outputs of a direct transliteration of the reference driver, frozen here.
constexpr const char* kN4 = "123412314231243121342132413214321";
constexpr const char* kN5 =
    "123451234152341253412354123145231425314235142315423124531243512431524312543121345213425134215342135421324513241532413524132541321453214352143251432154321";

std::string run(std::size_t n, GenerationMode mode = GenerationMode::stream) {
  return render(generate_sequence(n, mode), n);
}

struct ThrowingSink final : EmissionSink {
  std::size_t budget;
  explicit ThrowingSink(std::size_t b) : budget(b) {}
  void append(std::span<const Symbol> block) override {
    if (block.size() > budget) throw IoError("disk full");
    budget -= block.size();
  }
};

}  // namespace

TEST_CASE("degenerate alphabets") {
  CHECK(run(1) == "1");
  CHECK(run(2) == "121");
  VectorSink sink;
  CHECK_THROWS_AS(generate(GeneratorConfig{0}, sink), std::invalid_argument);
  CHECK_THROWS_AS(generate(GeneratorConfig{2, GenerationMode::palindrome_buffer}, sink), std::invalid_argument);
}

TEST_CASE("small outputs match the reference driver") {
  CHECK(run(3) == "123121321");
  CHECK(run(4) == kN4);
  CHECK(run(5) == kN5);
  CHECK(run(4).substr(0, 17) == "12341231423124312");
}

TEST_CASE("order-sensitive digests for n = 6..9") {
  // FNV-1a over 0-based symbols of the reference driver's output.
  const std::pair<std::size_t, std::uint64_t> expected[] = {
      {6, 0x4a1e404b32540c60ULL}, {7, 0x42c81c925eb6e7b8ULL}, {8, 0x949fa76d61fabdb8ULL}, {9, 0x437f04b93ca89098ULL}};
  for (auto [n, digest] : expected) {
    CountingSink sink;
    generate(GeneratorConfig{n}, sink);
    CHECK(sink.digest() == digest);
  }
}

TEST_CASE("stats for n = 3 and n = 4") {
  VectorSink sink;
  auto stats = generate(GeneratorConfig{3}, sink);
  CHECK(stats.symbols_emitted == 9);
  CHECK(stats.mirror_shift_count == 1);
  CHECK(stats.intersection_histogram == std::map<std::size_t, BigInt>{{1, 1}});

  VectorSink sink4;
  stats = generate(GeneratorConfig{4}, sink4);
  CHECK(stats.symbols_emitted == 33);
  CHECK(stats.mirror_shift_count == 5);
  CHECK(stats.intersection_histogram == std::map<std::size_t, BigInt>{{1, 1}, {2, 4}});
}

TEST_CASE("stats invariants hold for n = 1..9") {
  for (std::size_t n = 1; n <= 9; ++n) {
    CountingSink sink;
    const auto stats = generate(GeneratorConfig{n}, sink);
    BigInt from_histogram = 2 * n - 1;
    BigInt shifts = 0;
    for (const auto& [len, count] : stats.intersection_histogram) {
      from_histogram += count * (2 * n - 1 - len);
      shifts += count;
    }
    CHECK(stats.mirror_shift_count == shifts);
    CHECK(stats.symbols_emitted == from_histogram);
    CHECK(stats.symbols_emitted == BigInt(sink.count()));
    CHECK(stats.footprint.bead_symbols == n);
    CHECK(stats.footprint.scratch_symbols == n);
    CHECK(stats.footprint.max_recursion_depth <= n);
  }
}

TEST_CASE("palindrome mode reproduces stream mode") {
  for (std::size_t n = 3; n <= 8; ++n) {
    CountingSink stream_sink;
    CountingSink palindrome_sink;
    generate(GeneratorConfig{n}, stream_sink);
    const auto stats = generate(GeneratorConfig{n, GenerationMode::palindrome_buffer}, palindrome_sink);
    CHECK(palindrome_sink.count() == stream_sink.count());
    CHECK(palindrome_sink.digest() == stream_sink.digest());
    CHECK(stats.symbols_emitted == BigInt(stream_sink.count()));
    CHECK(stats.mirror_shift_count <= operation_count(n));
    CHECK(stats.footprint.buffered_symbols > 0);
  }
  CHECK(run(3, GenerationMode::palindrome_buffer) == "123121321");
  CHECK(run(5, GenerationMode::palindrome_buffer) == kN5);
}

TEST_CASE("sink failures propagate") {
  ThrowingSink sink(20);
  CHECK_THROWS_AS(generate(GeneratorConfig{5}, sink), IoError);
  ThrowingSink small(3);
  CHECK_THROWS_AS(generate(GeneratorConfig{5, GenerationMode::palindrome_buffer}, small), IoError);
}
