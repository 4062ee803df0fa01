#include "superperm/baseline.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>

#include "superperm/verifier.hpp"

namespace superperm {

std::size_t max_overlap(std::span<const Symbol> left, std::span<const Symbol> right) {
  const std::size_t longest = std::min(left.size(), right.size());
  for (std::size_t len = longest; len > 0; --len) {
    if (len == left.size() && len == right.size()) continue;
    if (std::equal(left.end() - static_cast<std::ptrdiff_t>(len), left.end(), right.begin())) return len;
  }
  return 0;
}

namespace {

/// Distinct permutation windows of `sequence` (over k symbols), in order of first appearance.
std::vector<std::vector<Symbol>> permutations_by_first_appearance(const std::vector<Symbol>& sequence,
                                                                   std::size_t k) {
  std::vector<bool> seen;
  std::size_t total = 1;
  for (std::size_t i = 2; i <= k; ++i) total *= i;
  seen.assign(total, false);

  std::vector<std::vector<Symbol>> out;
  const std::span<const Symbol> all(sequence);
  for (std::size_t start = 0; start + k <= sequence.size(); ++start) {
    const auto window = all.subspan(start, k);
    const auto rank = rank_permutation(window);
    if (!rank || seen[rank->value]) continue;
    seen[rank->value] = true;
    out.emplace_back(window.begin(), window.end());
  }
  return out;
}

}  // namespace

RecursiveBuild recursive_superperm(std::size_t n, std::size_t max_n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (n > max_n) {
    throw CapacityExceeded("recursive baseline materializes O(n!) symbols; n = " + std::to_string(n) +
                           " exceeds the configured maximum " + std::to_string(max_n));
  }

  std::vector<Symbol> level{0};
  for (std::size_t k = 2; k <= n; ++k) {
    const auto new_symbol = static_cast<Symbol>(k - 1);
    std::vector<Symbol> next;
    std::vector<Symbol> block;
    for (const auto& perm : permutations_by_first_appearance(level, k - 1)) {
      block.assign(perm.begin(), perm.end());
      block.push_back(new_symbol);
      block.insert(block.end(), perm.begin(), perm.end());

      // Only the last block-length symbols of the chain can take part in an overlap.
      const std::size_t tail = std::min(next.size(), block.size());
      const std::span<const Symbol> chain_tail(next.data() + next.size() - tail, tail);
      const std::size_t overlap = max_overlap(chain_tail, block);
      next.insert(next.end(), block.begin() + static_cast<std::ptrdiff_t>(overlap), block.end());
    }
    level = std::move(next);
  }
  return RecursiveBuild{n, std::move(level)};
}

}  // namespace superperm
