#include "superperm/bead.hpp"

#include <algorithm>
#include <stdexcept>

namespace superperm {
namespace {

void require_shift_position(const Bead& bead, ShiftPosition p) {
  const std::size_t n = bead.size();
  if (p.value < 2 || p.value + 1 > n) {
    throw std::out_of_range("shift position " + std::to_string(p.value) + " outside [2, " +
                            std::to_string(n == 0 ? 0 : n - 1) + "] for n = " + std::to_string(n));
  }
}

void require_ring_order(const Bead& bead, RingOrder r, std::size_t slack) {
  const std::size_t n = bead.size();
  if (r.value + slack > n) {
    const std::string hi = n >= slack ? std::to_string(n - slack) : std::string("none");
    throw std::out_of_range("ring order " + std::to_string(r.value) + " outside [0, " + hi +
                            "] for n = " + std::to_string(n));
  }
}

}  // namespace

bool is_permutation_of_indices(std::span<const Symbol> symbols) {
  const std::size_t n = symbols.size();
  if (n > kMaxAlphabetSize) return false;
  std::array<bool, kMaxAlphabetSize> seen{};
  for (Symbol s : symbols) {
    if (s >= n || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

Bead::Bead(std::vector<Symbol> core) : core_(std::move(core)) {
  if (core_.empty()) throw std::invalid_argument("bead core must be non-empty");
  if (!is_permutation_of_indices(core_))
    throw std::invalid_argument("bead core is not a permutation of 0..n-1");
}

Bead Bead::parse(std::string_view glyphs) {
  return Bead(Alphabet::standard(glyphs.size()).parse(glyphs));
}

std::string Bead::str() const { return Alphabet::standard(size()).render(core_); }

Bead initial_bead(std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty alphabet: n must be at least 1");
  if (n > kMaxAlphabetSize)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxAlphabetSize));
  std::vector<Symbol> core(n);
  for (std::size_t i = 0; i < n; ++i) core[i] = static_cast<Symbol>(i);
  return Bead(std::move(core), Bead::Unchecked{});
}

std::vector<Symbol> expand(const Bead& bead) {
  auto core = bead.core();
  std::vector<Symbol> full(core.begin(), core.end());
  full.insert(full.end(), core.begin(), core.end() - 1);
  return full;
}

Bead straight_shift(const Bead& bead, ShiftPosition p) {
  require_shift_position(bead, p);
  std::vector<Symbol> core(bead.core_);
  kernel::straight_shift(core, p.value);
  return Bead(std::move(core), Bead::Unchecked{});
}

Bead straight_unshift(const Bead& bead, ShiftPosition p) {
  require_shift_position(bead, p);
  std::vector<Symbol> core(bead.core_);
  kernel::straight_unshift(core, p.value);
  return Bead(std::move(core), Bead::Unchecked{});
}

Bead mirror_shift(const Bead& bead, RingOrder r) {
  require_ring_order(bead, r, 2);
  std::vector<Symbol> core(bead.core_);
  std::vector<Symbol> scratch(r.value + 1);
  kernel::mirror_shift(core, r.value, scratch);
  return Bead(std::move(core), Bead::Unchecked{});
}

Bead mirror_unshift(const Bead& bead, RingOrder r) {
  require_ring_order(bead, r, 2);
  std::vector<Symbol> core(bead.core_);
  std::vector<Symbol> scratch(r.value + 1);
  kernel::mirror_unshift(core, r.value, scratch);
  return Bead(std::move(core), Bead::Unchecked{});
}

Bead trailing_bead(const Bead& leading, RingOrder r) {
  if (r.value == 0) return leading;
  require_ring_order(leading, r, 3);
  const auto x = leading.core();
  const std::size_t n = x.size();
  std::vector<Symbol> core;
  core.reserve(n);
  // x[n-2] down to x[n-r-1], then the untouched prefix, then the fixed last symbol.
  for (std::size_t i = 0; i < r.value; ++i) core.push_back(x[n - 2 - i]);
  core.insert(core.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n - r.value - 1));
  core.push_back(x[n - 1]);
  return Bead(std::move(core), Bead::Unchecked{});
}

Bead mirror_bead(const Bead& bead) {
  std::vector<Symbol> core(bead.core_);
  std::reverse(core.begin(), core.end() - 1);
  return Bead(std::move(core), Bead::Unchecked{});
}

std::vector<Symbol> mirror_sequence(std::span<const Symbol> symbols) {
  return std::vector<Symbol>(symbols.rbegin(), symbols.rend());
}

namespace kernel {

void straight_shift(std::span<Symbol> core, std::size_t p) noexcept {
  std::rotate(core.begin(), core.begin() + 1, core.begin() + static_cast<std::ptrdiff_t>(p));
}

void straight_unshift(std::span<Symbol> core, std::size_t p) noexcept {
  const auto pos = static_cast<std::ptrdiff_t>(p);
  std::rotate(core.begin(), core.begin() + pos - 1, core.begin() + pos);
}

void mirror_shift(std::span<Symbol> core, std::size_t r, std::span<Symbol> scratch) noexcept {
  const std::size_t n = core.size();
  const std::size_t moved = r + 1;
  std::copy_n(core.begin(), moved, scratch.begin());
  std::copy(core.begin() + static_cast<std::ptrdiff_t>(moved), core.end() - 1, core.begin());
  // Reversed prefix lands just before the fixed last symbol.
  std::reverse_copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(moved),
                    core.begin() + static_cast<std::ptrdiff_t>(n - 1 - moved));
}

void mirror_unshift(std::span<Symbol> core, std::size_t r, std::span<Symbol> scratch) noexcept {
  const std::size_t n = core.size();
  const std::size_t moved = r + 1;
  const auto tail = core.begin() + static_cast<std::ptrdiff_t>(n - 1 - moved);
  std::copy_n(tail, moved, scratch.begin());
  std::copy_backward(core.begin(), tail, core.end() - 1);
  std::reverse_copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(moved), core.begin());
}

}  // namespace kernel
}  // namespace superperm
