#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superperm/alphabet.hpp"
#include "superperm/generator.hpp"

namespace superperm {

/// On-disk sequence encodings.
///   plain: one line of glyphs from kGlyphTable plus one trailing newline (n <= 61).
///   csv:   decimal symbol indices joined by ',' plus one trailing newline (any n).
enum class OutputFormat { plain, csv };

std::optional<OutputFormat> parse_output_format(std::string_view name);
std::string_view format_name(OutputFormat format);

/// True iff `format` can encode an alphabet of n symbols.
bool format_supports(OutputFormat format, std::size_t n) noexcept;

/// Buffered writer sink. Call finish() to write the trailing newline and flush;
/// throws IoError as soon as the stream reports a failure.
class SequenceWriter final : public EmissionSink {
 public:
  SequenceWriter(std::ostream& out, OutputFormat format, std::size_t n);
  ~SequenceWriter() override = default;

  void append(std::span<const Symbol> block) override;
  void finish();

 private:
  void flush_buffer();

  std::ostream& out_;
  OutputFormat format_;
  std::optional<Alphabet> alphabet_;
  std::string buffer_;
  bool first_ = true;
};

/// Decodes a stream in `format` for an n-symbol alphabet, delivering symbols in chunks.
/// Exactly one trailing newline is accepted and ignored. Throws MalformedInput on any
/// other byte that does not decode, IoError on read failure.
void read_sequence(std::istream& in, OutputFormat format, std::size_t n,
                   const std::function<void(std::span<const Symbol>)>& consume);

/// Encodes a whole sequence, trailing newline included.
std::string encode_sequence(std::span<const Symbol> symbols, OutputFormat format, std::size_t n);

/// Decodes a whole in-memory text.
std::vector<Symbol> decode_sequence(std::string_view text, OutputFormat format, std::size_t n);

}  // namespace superperm
