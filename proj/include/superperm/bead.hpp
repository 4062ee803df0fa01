#pragma once

#include <span>
#include <string>
#include <vector>

#include "superperm/alphabet.hpp"
#include "superperm/types.hpp"

namespace superperm {

/// Target position of a straight shift / unshift, 2 <= p <= n-1.
/// A straight shift moves the leading symbol so that it lands at (1-based) position p.
struct ShiftPosition {
  std::size_t value;
  constexpr explicit ShiftPosition(std::size_t p) noexcept : value(p) {}
};

/// Order of the ring a mirror shift transitions between, 0 <= r <= n-2.
/// MS_r moves the leading r+1 symbols to the slot just before the last symbol, reversed.
/// In the generator, depth d uses r = n-d-1 and skips d-1 = n-r-2 symbols on emission.
struct RingOrder {
  std::size_t value;
  constexpr explicit RingOrder(std::size_t r) noexcept : value(r) {}
};

/// A bead stored as its n-symbol core. The full (2n-1)-symbol form repeats the
/// first n-1 symbols after the core; its n length-n windows are distinct permutations.
class Bead {
 public:
  /// Throws std::invalid_argument unless core is a permutation of 0..n-1 with 1 <= n <= 255.
  explicit Bead(std::vector<Symbol> core);

  /// Parses core glyphs under the standard glyph table, e.g. Bead::parse("12345").
  static Bead parse(std::string_view glyphs);

  std::size_t size() const noexcept { return core_.size(); }
  std::span<const Symbol> core() const noexcept { return core_; }
  Symbol operator[](std::size_t i) const noexcept { return core_[i]; }

  /// Core rendered with the standard glyph table.
  std::string str() const;

  friend bool operator==(const Bead&, const Bead&) = default;

 private:
  struct Unchecked {};
  Bead(std::vector<Symbol> core, Unchecked) noexcept : core_(std::move(core)) {}

  std::vector<Symbol> core_;

  friend Bead initial_bead(std::size_t);
  friend Bead straight_shift(const Bead&, ShiftPosition);
  friend Bead straight_unshift(const Bead&, ShiftPosition);
  friend Bead mirror_shift(const Bead&, RingOrder);
  friend Bead mirror_unshift(const Bead&, RingOrder);
  friend Bead trailing_bead(const Bead&, RingOrder);
  friend Bead mirror_bead(const Bead&);
};

/// True iff symbols hold each of 0..size-1 exactly once.
bool is_permutation_of_indices(std::span<const Symbol> symbols);

/// The identity core (0, 1, ..., n-1). Throws std::invalid_argument for n == 0 or n > 255.
Bead initial_bead(std::size_t n);

/// Full form: core followed by core[0..n-2].
std::vector<Symbol> expand(const Bead& bead);

Bead straight_shift(const Bead& bead, ShiftPosition p);
Bead straight_unshift(const Bead& bead, ShiftPosition p);
Bead mirror_shift(const Bead& bead, RingOrder r);
Bead mirror_unshift(const Bead& bead, RingOrder r);

/// Last bead of the r-ring whose leading bead is `leading`. Requires r <= n-3
/// (r == 0 is the bead itself and is also accepted for n < 3).
Bead trailing_bead(const Bead& leading, RingOrder r);

/// The bead whose full form is the reversal of this bead's full form:
/// the first n-1 core symbols reversed, the last one kept.
Bead mirror_bead(const Bead& bead);

/// Reversal of an arbitrary symbol sequence.
std::vector<Symbol> mirror_sequence(std::span<const Symbol> symbols);

/// Allocation-free kernels used by the generator hot path. Callers guarantee the
/// preconditions of the checked operators; `scratch` must hold at least r+1 symbols.
namespace kernel {

void straight_shift(std::span<Symbol> core, std::size_t p) noexcept;
void straight_unshift(std::span<Symbol> core, std::size_t p) noexcept;
void mirror_shift(std::span<Symbol> core, std::size_t r, std::span<Symbol> scratch) noexcept;
void mirror_unshift(std::span<Symbol> core, std::size_t r, std::span<Symbol> scratch) noexcept;

}  // namespace kernel

}  // namespace superperm
