#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "superperm/alphabet.hpp"
#include "superperm/bead.hpp"

namespace test_support {

inline superperm::Bead to_bead(const oracle::Seq& core) {
  return superperm::Bead(std::vector<superperm::Symbol>(core.begin(), core.end()));
}

inline oracle::Seq to_seq(std::span<const superperm::Symbol> symbols) {
  return oracle::Seq(symbols.begin(), symbols.end());
}

inline std::string render(std::span<const superperm::Symbol> symbols, std::size_t n) {
  return superperm::Alphabet::standard(n).render(symbols);
}

}  // namespace test_support
