#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superperm/types.hpp"

namespace superperm {

/// Glyphs of the plain text format, in index order: '1'-'9', 'A'-'Z', 'a'-'z'.
inline constexpr std::string_view kGlyphTable =
    "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

/// Ordered set of n distinct single-character glyphs; glyph i renders symbol i.
class Alphabet {
 public:
  /// Throws std::invalid_argument on an empty or repeating glyph list.
  explicit Alphabet(std::string glyphs);

  /// The first n entries of kGlyphTable. Throws std::invalid_argument unless 1 <= n <= 61.
  static Alphabet standard(std::size_t n);

  std::size_t size() const noexcept { return glyphs_.size(); }
  std::string_view glyphs() const noexcept { return glyphs_; }
  char glyph(Symbol s) const { return glyphs_.at(s); }

  /// Symbol index of a glyph, or nullopt when the glyph is not part of the alphabet.
  std::optional<Symbol> index_of(char glyph) const noexcept {
    const int idx = lookup_[static_cast<unsigned char>(glyph)];
    if (idx < 0) return std::nullopt;
    return static_cast<Symbol>(idx);
  }

  std::string render(std::span<const Symbol> symbols) const;

  /// Throws MalformedInput on the first glyph outside the alphabet.
  std::vector<Symbol> parse(std::string_view text) const;

 private:
  std::string glyphs_;
  std::array<int, 256> lookup_{};
};

}  // namespace superperm
