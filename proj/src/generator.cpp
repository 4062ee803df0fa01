#include "superperm/generator.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "superperm/analysis.hpp"
#include "superperm/bead.hpp"

namespace superperm {
namespace {

/// 64-bit hot counter that spills carries into an exact integer instead of wrapping.
class ExactCounter {
 public:
  void add(std::uint64_t amount) noexcept {
    if (__builtin_add_overflow(low_, amount, &low_)) ++carries_;
  }
  BigInt value() const {
    BigInt total = carries_;
    total <<= 64;
    total += low_;
    return total;
  }

 private:
  std::uint64_t low_ = 0;
  std::uint64_t carries_ = 0;
};

/// Recursive mirror-shift driver. Holds one bead core, one scratch block and counters.
class Driver {
 public:
  Driver(std::size_t n, EmissionSink& sink, std::optional<std::uint64_t> budget)
      : n_(n), sink_(sink), budget_(budget), histogram_(n) {
    const Bead start = initial_bead(n);
    core_.assign(start.core().begin(), start.core().end());
    scratch_.resize(n);
  }

  void run() {
    emit(0);
    descend(2);
  }

  GenerationStats stats(GenerationMode mode) const {
    GenerationStats out;
    out.mode = mode;
    out.symbols_emitted = emitted_.value();
    out.mirror_shift_count = shifts_.value();
    for (std::size_t len = 1; len + 2 <= n_; ++len) out.intersection_histogram.emplace(len, histogram_[len].value());
    out.footprint.bead_symbols = core_.capacity();
    out.footprint.scratch_symbols = scratch_.capacity();
    out.footprint.max_recursion_depth = max_depth_;
    return out;
  }

 private:
  void descend(std::size_t d) {
    if (d >= n_ || stopped_) return;
    ++depth_;
    max_depth_ = std::max(max_depth_, depth_);
    for (std::size_t i = 0; i < d; ++i) {
      descend(d + 1);
      if (stopped_ || i == d - 1) break;
      // Depth d transitions rings of order n-d-1, which overlap by d-1 symbols.
      kernel::mirror_shift(core_, n_ - d - 1, scratch_);
      shifts_.add(1);
      histogram_[d - 1].add(1);
      emit(d - 1);
    }
    --depth_;
  }

  /// Full form of the current bead with the first `skip` symbols dropped.
  void emit(std::size_t skip) {
    const std::span<const Symbol> core(core_);
    put(core.subspan(skip));
    put(core.first(n_ - 1));
  }

  void put(std::span<const Symbol> block) {
    if (stopped_ || block.empty()) return;
    if (budget_) {
      if (*budget_ <= block.size()) {
        block = block.first(static_cast<std::size_t>(*budget_));
        stopped_ = true;
      }
      *budget_ -= block.size();
    }
    sink_.append(block);
    emitted_.add(block.size());
  }

  std::size_t n_;
  EmissionSink& sink_;
  std::optional<std::uint64_t> budget_;
  bool stopped_ = false;

  std::vector<Symbol> core_;
  std::vector<Symbol> scratch_;

  std::size_t depth_ = 0;
  std::size_t max_depth_ = 0;
  ExactCounter emitted_;
  ExactCounter shifts_;
  std::vector<ExactCounter> histogram_;
};

void require_n(std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty alphabet: n must be at least 1");
  if (n > kMaxAlphabetSize)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxAlphabetSize));
}

}  // namespace

GenerationStats generate(const GeneratorConfig& config, EmissionSink& sink) {
  if (config.mode == GenerationMode::palindrome_buffer) return generate_palindrome(config, sink);
  require_n(config.n);
  Driver driver(config.n, sink, std::nullopt);
  driver.run();
  return driver.stats(GenerationMode::stream);
}

GenerationStats generate_palindrome(const GeneratorConfig& config, EmissionSink& sink) {
  require_n(config.n);
  if (config.n < 3) throw std::invalid_argument("palindrome mode requires n >= 3");

  const BigInt total = length_sum_factorials(config.n);
  const BigInt half_exact = (total + 1) / 2;
  if (half_exact > std::numeric_limits<std::size_t>::max() / 2)
    throw CapacityExceeded("palindrome buffer of " + half_exact.str() + " symbols does not fit in memory");
  const auto half = static_cast<std::size_t>(half_exact);

  VectorSink front;
  Driver driver(config.n, front, static_cast<std::uint64_t>(half));
  driver.run();
  const std::vector<Symbol>& buffer = front.symbols();

  sink.append(buffer);
  std::array<Symbol, 4096> chunk{};
  std::size_t remaining = buffer.size() - 1;  // the centre symbol is not repeated
  while (remaining > 0) {
    const std::size_t take = std::min(remaining, chunk.size());
    std::reverse_copy(buffer.begin() + static_cast<std::ptrdiff_t>(remaining - take),
                      buffer.begin() + static_cast<std::ptrdiff_t>(remaining), chunk.begin());
    sink.append(std::span<const Symbol>(chunk.data(), take));
    remaining -= take;
  }

  GenerationStats stats = driver.stats(GenerationMode::palindrome_buffer);
  stats.symbols_emitted = BigInt(2 * buffer.size() - 1);
  stats.footprint.buffered_symbols = buffer.capacity() + chunk.size();
  return stats;
}

std::vector<Symbol> generate_sequence(std::size_t n, GenerationMode mode) {
  VectorSink sink;
  generate(GeneratorConfig{n, mode, false}, sink);
  return sink.release();
}

}  // namespace superperm
