#include "superperm/alphabet.hpp"

#include <stdexcept>
#include <vector>

namespace superperm {

Alphabet::Alphabet(std::string glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.empty()) throw std::invalid_argument("alphabet must contain at least one glyph");
  if (glyphs_.size() > kMaxAlphabetSize)
    throw std::invalid_argument("alphabet larger than " + std::to_string(kMaxAlphabetSize));
  lookup_.fill(-1);
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    auto& slot = lookup_[static_cast<unsigned char>(glyphs_[i])];
    if (slot >= 0) throw std::invalid_argument(std::string("duplicate glyph '") + glyphs_[i] + "'");
    slot = static_cast<int>(i);
  }
}

Alphabet Alphabet::standard(std::size_t n) {
  if (n == 0 || n > kGlyphTable.size())
    throw std::invalid_argument("plain glyph table supports 1.." + std::to_string(kGlyphTable.size()) +
                                " symbols, got " + std::to_string(n));
  return Alphabet(std::string(kGlyphTable.substr(0, n)));
}

std::string Alphabet::render(std::span<const Symbol> symbols) const {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(glyph(s));
  return out;
}

std::vector<Symbol> Alphabet::parse(std::string_view text) const {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto idx = index_of(text[i]);
    if (!idx) {
      throw MalformedInput("glyph '" + std::string(1, text[i]) + "' at offset " + std::to_string(i) +
                           " is not in the alphabet \"" + glyphs_ + "\"");
    }
    out.push_back(*idx);
  }
  return out;
}

}  // namespace superperm
