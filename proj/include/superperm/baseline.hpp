#pragma once

#include <span>
#include <vector>

#include "superperm/types.hpp"

namespace superperm {

/// Fully materialized output of the classical recursive construction.
struct RecursiveBuild {
  std::size_t n = 0;
  std::vector<Symbol> sequence;
};

/// Classical construction: for every permutation p of the (n-1)-level result, taken in
/// order of first appearance as a window, form p + (n-1) + p and chain the blocks,
/// merging each junction on its longest suffix/prefix overlap.
/// Throws std::invalid_argument for n == 0 and CapacityExceeded for n > max_n.
RecursiveBuild recursive_superperm(std::size_t n, std::size_t max_n = 9);

/// Length of the longest proper suffix of `left` that equals a prefix of `right`.
std::size_t max_overlap(std::span<const Symbol> left, std::span<const Symbol> right);

}  // namespace superperm
