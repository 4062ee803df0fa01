#include "superperm/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace superperm {
namespace {

constexpr std::size_t kFlushThreshold = 1 << 16;

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

std::string_view format_name(OutputFormat format) { return format == OutputFormat::plain ? "plain" : "csv"; }

bool format_supports(OutputFormat format, std::size_t n) noexcept {
  if (n == 0 || n > kMaxAlphabetSize) return false;
  return format == OutputFormat::csv || n <= kGlyphTable.size();
}

SequenceWriter::SequenceWriter(std::ostream& out, OutputFormat format, std::size_t n)
    : out_(out), format_(format) {
  if (!format_supports(format, n)) {
    throw std::invalid_argument(std::string(format_name(format)) + " format cannot encode n = " + std::to_string(n));
  }
  if (format == OutputFormat::plain) alphabet_.emplace(Alphabet::standard(n));
  buffer_.reserve(kFlushThreshold + 1024);
}

void SequenceWriter::append(std::span<const Symbol> block) {
  if (alphabet_) {
    for (Symbol s : block) buffer_.push_back(alphabet_->glyph(s));
  } else {
    std::array<char, 4> digits{};
    for (Symbol s : block) {
      if (!first_) buffer_.push_back(',');
      first_ = false;
      auto [end, ec] = std::to_chars(digits.data(), digits.data() + digits.size(), static_cast<unsigned>(s));
      buffer_.append(digits.data(), end);
    }
  }
  if (buffer_.size() >= kFlushThreshold) flush_buffer();
}

void SequenceWriter::finish() {
  buffer_.push_back('\n');
  flush_buffer();
  out_.flush();
  if (!out_) throw IoError("failed to flush output stream");
}

void SequenceWriter::flush_buffer() {
  out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  if (!out_) throw IoError("failed to write output stream");
  buffer_.clear();
}

void read_sequence(std::istream& in, OutputFormat format, std::size_t n,
                   const std::function<void(std::span<const Symbol>)>& consume) {
  if (!format_supports(format, n)) {
    throw std::invalid_argument(std::string(format_name(format)) + " format cannot encode n = " + std::to_string(n));
  }
  std::optional<Alphabet> alphabet;
  if (format == OutputFormat::plain) alphabet.emplace(Alphabet::standard(n));

  std::vector<char> raw(1 << 16);
  std::vector<Symbol> decoded;
  decoded.reserve(raw.size());
  std::uint64_t offset = 0;
  bool ended = false;            // saw the trailing newline
  bool have_value = false;       // csv: digits pending in `value`
  bool after_comma = false;      // csv: a separator is waiting for its field
  unsigned value = 0;

  const auto fail = [&](const std::string& what) {
    throw MalformedInput(what + " at byte offset " + std::to_string(offset));
  };
  const auto close_field = [&] {
    if (value >= n) fail("symbol index " + std::to_string(value) + " outside alphabet of size " + std::to_string(n));
    decoded.push_back(static_cast<Symbol>(value));
    value = 0;
    have_value = false;
  };

  while (in) {
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got == 0) break;
    for (std::size_t i = 0; i < got; ++i, ++offset) {
      const char c = raw[i];
      if (ended) fail("unexpected data after trailing newline");
      if (c == '\n') {
        if (format == OutputFormat::csv) {
          if (after_comma && !have_value) fail("empty csv field");
          if (have_value) close_field();
        }
        ended = true;
        continue;
      }
      if (alphabet) {
        const auto idx = alphabet->index_of(c);
        if (!idx) fail(std::string("glyph '") + c + "' is not in the alphabet");
        decoded.push_back(*idx);
        continue;
      }
      if (c >= '0' && c <= '9') {
        value = value * 10 + static_cast<unsigned>(c - '0');
        if (value > 100000) fail("symbol index too large");
        have_value = true;
        after_comma = false;
      } else if (c == ',') {
        if (!have_value) fail("empty csv field");
        close_field();
        after_comma = true;
      } else {
        fail(std::string("unexpected character '") + c + "' in csv input");
      }
    }
    if (!decoded.empty()) {
      consume(decoded);
      decoded.clear();
    }
  }
  if (in.bad()) throw IoError("failed to read input stream");
  if (format == OutputFormat::csv) {
    if (after_comma && !have_value) fail("empty csv field");
    if (have_value) close_field();
  }
  if (!decoded.empty()) consume(decoded);
}

std::string encode_sequence(std::span<const Symbol> symbols, OutputFormat format, std::size_t n) {
  std::ostringstream out;
  SequenceWriter writer(out, format, n);
  writer.append(symbols);
  writer.finish();
  return std::move(out).str();
}

std::vector<Symbol> decode_sequence(std::string_view text, OutputFormat format, std::size_t n) {
  std::istringstream in{std::string(text)};
  std::vector<Symbol> out;
  read_sequence(in, format, n, [&](std::span<const Symbol> chunk) { out.insert(out.end(), chunk.begin(), chunk.end()); });
  return out;
}

}  // namespace superperm
