#include "superperm/verifier.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace superperm {
namespace {

std::uint64_t small_factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::optional<PermutationRank> rank_permutation(std::span<const Symbol> window) {
  const std::size_t n = window.size();
  if (n > kMaxRankableN) throw CapacityExceeded("cannot rank permutations of more than 20 symbols");
  std::uint64_t used = 0;
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol s = window[i];
    if (s >= n) return std::nullopt;
    const std::uint64_t bit = std::uint64_t{1} << s;
    if (used & bit) return std::nullopt;
    const auto smaller_unused = static_cast<std::uint64_t>(s - std::popcount(used & (bit - 1)));
    rank = rank * (n - i) + smaller_unused;
    used |= bit;
  }
  return PermutationRank{rank};
}

std::vector<Symbol> unrank_permutation(PermutationRank rank, std::size_t n) {
  if (n > kMaxRankableN) throw CapacityExceeded("cannot unrank permutations of more than 20 symbols");
  if (rank.value >= small_factorial(n))
    throw std::out_of_range("rank " + std::to_string(rank.value) + " out of range for n = " + std::to_string(n));
  std::vector<Symbol> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Symbol>(i);
  std::vector<Symbol> out;
  out.reserve(n);
  std::uint64_t rest = rank.value;
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t block = small_factorial(i - 1);
    const auto pick = static_cast<std::size_t>(rest / block);
    rest %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

StreamingVerifier::StreamingVerifier(std::size_t n, VerifierOptions options) : n_(n), options_(options) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  const std::size_t limit = std::min(options_.max_coverage_n, kMaxRankableN);
  if (n > limit) {
    throw CapacityExceeded("coverage tracking supports n <= " + std::to_string(limit) + ", got " +
                           std::to_string(n));
  }
  factorial_n_ = small_factorial(n);
  coverage_.assign(static_cast<std::size_t>((factorial_n_ + 63) / 64), 0);
  window_.assign(n, 0);
  counts_.assign(n, 0);
}

void StreamingVerifier::feed(std::span<const Symbol> symbols) {
  for (Symbol s : symbols) {
    if (s >= n_) {
      throw MalformedInput("symbol index " + std::to_string(s) + " at offset " + std::to_string(length_) +
                           " is outside the alphabet of size " + std::to_string(n_));
    }
    push(s);
  }
  if (options_.check_palindrome) retained_.insert(retained_.end(), symbols.begin(), symbols.end());
}

void StreamingVerifier::push(Symbol s) {
  if (length_ >= n_) {
    const Symbol leaving = window_[head_];
    if (--counts_[leaving] == 1) --repeated_;
  }
  window_[head_] = s;
  if (++counts_[s] == 2) ++repeated_;
  head_ = (head_ + 1) % n_;
  ++length_;
  if (length_ < n_ || repeated_ != 0) return;

  // Window in stream order starts at head_.
  std::uint64_t used = 0;
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    const Symbol sym = window_[(head_ + i) % n_];
    const std::uint64_t bit = std::uint64_t{1} << sym;
    rank = rank * (n_ - i) + static_cast<std::uint64_t>(sym - std::popcount(used & (bit - 1)));
    used |= bit;
  }
  ++permutation_windows_;
  std::uint64_t& word = coverage_[static_cast<std::size_t>(rank / 64)];
  const std::uint64_t mask = std::uint64_t{1} << (rank % 64);
  if (!(word & mask)) {
    word |= mask;
    ++covered_;
  }
}

VerificationReport StreamingVerifier::finish() const {
  VerificationReport report;
  report.length = length_;
  report.n = n_;
  report.covered = covered_;
  report.complete = covered_ == factorial_n_;
  report.permutation_windows = permutation_windows_;
  report.windows = length_ >= n_ ? length_ - n_ + 1 : 0;
  if (options_.check_palindrome) report.is_palindrome = std::equal(retained_.begin(), retained_.end(), retained_.rbegin());
  if (!report.complete) {
    for (std::size_t w = 0; w < coverage_.size(); ++w) {
      if (coverage_[w] == ~std::uint64_t{0}) continue;
      const std::uint64_t rank = w * 64 + static_cast<std::uint64_t>(std::countr_one(coverage_[w]));
      if (rank < factorial_n_) report.first_missing = PermutationRank{rank};
      break;
    }
  }
  return report;
}

VerificationReport verify(std::span<const Symbol> symbols, std::size_t n, bool check_palindrome,
                          std::size_t max_coverage_n) {
  StreamingVerifier verifier(n, VerifierOptions{check_palindrome, max_coverage_n});
  verifier.feed(symbols);
  return verifier.finish();
}

}  // namespace superperm
