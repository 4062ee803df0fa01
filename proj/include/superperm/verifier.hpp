#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "superperm/types.hpp"

namespace superperm {

/// Lexicographic (Lehmer code) index of a permutation of n symbols, in [0, n!).
struct PermutationRank {
  std::uint64_t value;
  friend bool operator==(PermutationRank, PermutationRank) = default;
};

/// Largest n whose ranks fit in 64 bits.
inline constexpr std::size_t kMaxRankableN = 20;

/// Rank of `window`, or nullopt when it is not a permutation of 0..size-1.
/// Throws CapacityExceeded for windows longer than kMaxRankableN.
std::optional<PermutationRank> rank_permutation(std::span<const Symbol> window);

/// Inverse of rank_permutation. Throws std::out_of_range when rank >= n!.
std::vector<Symbol> unrank_permutation(PermutationRank rank, std::size_t n);

struct VerificationReport {
  std::uint64_t length = 0;
  std::size_t n = 0;
  std::uint64_t covered = 0;              ///< distinct permutations seen as windows
  bool complete = false;                  ///< covered == n!
  std::uint64_t permutation_windows = 0;  ///< windows that were permutations, repeats included
  std::uint64_t windows = 0;              ///< all length-n windows
  std::optional<bool> is_palindrome;      ///< set only when requested
  std::optional<PermutationRank> first_missing;
};

struct VerifierOptions {
  bool check_palindrome = false;
  /// Coverage uses an n!-bit map; larger n is refused rather than approximated.
  std::size_t max_coverage_n = 12;
};

/// Slides a length-n window over a stream fed in arbitrary chunks.
class StreamingVerifier {
 public:
  /// Throws std::invalid_argument for n == 0, CapacityExceeded above options.max_coverage_n.
  StreamingVerifier(std::size_t n, VerifierOptions options = {});

  /// Throws MalformedInput when a symbol is not below n.
  void feed(std::span<const Symbol> symbols);

  VerificationReport finish() const;

 private:
  void push(Symbol s);

  std::size_t n_;
  VerifierOptions options_;
  std::vector<std::uint64_t> coverage_;
  std::uint64_t factorial_n_ = 1;

  std::vector<Symbol> window_;       // ring buffer of the last n symbols
  std::vector<std::uint32_t> counts_;
  std::size_t head_ = 0;
  std::size_t repeated_ = 0;         // symbols occurring more than once in the window

  std::uint64_t length_ = 0;
  std::uint64_t covered_ = 0;
  std::uint64_t permutation_windows_ = 0;
  std::vector<Symbol> retained_;     // whole stream, only for the palindrome check
};

/// One-shot verification of a materialized sequence.
VerificationReport verify(std::span<const Symbol> symbols, std::size_t n, bool check_palindrome = false,
                          std::size_t max_coverage_n = 12);

}  // namespace superperm
