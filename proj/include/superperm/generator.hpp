#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "superperm/types.hpp"

namespace superperm {

/// Append-only consumer of generated symbols. Blocks arrive strictly in output
/// order; block boundaries carry no meaning. Exceptions thrown by append abort
/// generation and propagate to the caller.
class EmissionSink {
 public:
  virtual ~EmissionSink() = default;
  virtual void append(std::span<const Symbol> block) = 0;
};

/// Materializes the whole sequence. Only sensible for small n.
class VectorSink final : public EmissionSink {
 public:
  void append(std::span<const Symbol> block) override { symbols_.insert(symbols_.end(), block.begin(), block.end()); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::vector<Symbol> release() noexcept { return std::move(symbols_); }

 private:
  std::vector<Symbol> symbols_;
};

/// Counts symbols and folds them into an order-sensitive FNV-1a digest; keeps no buffer.
class CountingSink final : public EmissionSink {
 public:
  void append(std::span<const Symbol> block) override {
    count_ += block.size();
    for (Symbol s : block) digest_ = (digest_ ^ s) * 0x100000001b3ULL;
  }
  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t digest() const noexcept { return digest_; }

 private:
  std::uint64_t count_ = 0;
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;
};

enum class GenerationMode {
  stream,             ///< O(n) state, emits as it goes
  palindrome_buffer,  ///< runs the driver to the midpoint, then mirrors the buffered half
};

struct GeneratorConfig {
  std::size_t n = 0;
  GenerationMode mode = GenerationMode::stream;
  bool emit_stats = false;  ///< consumed by front-ends; stats are always returned
};

/// Working state the generator retained during a run.
struct StateFootprint {
  std::size_t bead_symbols = 0;        ///< the single current bead core
  std::size_t scratch_symbols = 0;     ///< block moved by a mirror shift
  std::size_t buffered_symbols = 0;    ///< palindrome half-buffer; 0 in stream mode
  std::size_t max_recursion_depth = 0; ///< deepest active driver frame count
};

struct GenerationStats {
  GenerationMode mode = GenerationMode::stream;
  BigInt symbols_emitted;
  BigInt mirror_shift_count;
  /// Skip length -> number of mirror shifts emitted with that skip (1 <= length <= n-2).
  std::map<std::size_t, BigInt> intersection_histogram;
  StateFootprint footprint;
};

/// Streams the mirror-shift superpermutation of n symbols into `sink`.
/// In palindrome mode delegates to generate_palindrome. Throws std::invalid_argument for n == 0.
GenerationStats generate(const GeneratorConfig& config, EmissionSink& sink);

/// Emits the first (l(n)+1)/2 symbols of the stream-mode run, then their mirror
/// without the centre symbol. Output is identical to stream mode; the stats count
/// only the shifts actually performed, so roughly half of the stream-mode totals.
/// Requires n >= 3.
GenerationStats generate_palindrome(const GeneratorConfig& config, EmissionSink& sink);

/// Convenience wrapper returning the full sequence.
std::vector<Symbol> generate_sequence(std::size_t n, GenerationMode mode = GenerationMode::stream);

}  // namespace superperm
