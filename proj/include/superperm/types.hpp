#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace superperm {

/// Dense symbol index in 0..n-1. Glyphs only exist at the I/O boundary.
using Symbol = std::uint8_t;

/// Exact integer used for every count that can exceed 64 bits (factorials overflow at n = 21).
using BigInt = boost::multiprecision::cpp_int;

/// Largest alphabet a Symbol can index.
inline constexpr std::size_t kMaxAlphabetSize = 255;

/// Input that does not decode under the expected alphabet or format.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request whose size exceeds a configured bound (coverage map, materialized baseline).
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure writing or reading an external stream.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace superperm
