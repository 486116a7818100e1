#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace lavatube {

/// Portable random stream.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Standard distributions are implementation-defined, so draws are
/// derived from raw 64-bit outputs here:
///   uniform01()  = (next() >> 11) * 2^-53
///   index(n)     = min(n - 1, floor(uniform01() * n))
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::size_t index(std::size_t n) {
    const auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lavatube
