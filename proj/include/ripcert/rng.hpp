#pragma once

#include <cstdint>
#include <limits>

namespace ripcert {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// A (base, stream) pair. Every generated object is a pure function of its
/// parameters and its seed.
struct Seed {
  std::uint64_t base = 0;
  std::uint64_t stream = 0;

  /// Independent child stream, e.g. one per Monte Carlo sample.
  constexpr Seed child(std::uint64_t index) const noexcept {
    return Seed{base, mix64(stream ^ mix64(index + 0x9e3779b97f4a7c15ULL))};
  }

  friend constexpr bool operator==(const Seed&, const Seed&) = default;
};

/// Counter-based generator: word(i) is a keyed hash of i, so any position
/// of the stream can be read directly and in any order.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterRng(Seed seed) noexcept
      : key_(mix64(mix64(seed.base + 0x632be59bd9b4e019ULL) ^ (seed.stream * 0x9e3779b97f4a7c15ULL))) {}

  constexpr std::uint64_t word(std::uint64_t counter) const noexcept {
    return mix64(key_ ^ mix64(counter * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
  }

  /// Bit `index` of the stream viewed as a bit string.
  constexpr bool bit(std::uint64_t index) const noexcept { return (word(index >> 6) >> (index & 63)) & 1u; }

  // Sequential interface (UniformRandomBitGenerator).
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  constexpr result_type operator()() noexcept { return word(position_++); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by rejection; platform independent.
  std::uint64_t below(std::uint64_t bound) noexcept;

  void seek(std::uint64_t position) noexcept { position_ = position; }

 private:
  std::uint64_t key_;
  std::uint64_t position_ = 0;
};

inline std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
  if (bound <= 1) return 0;
  const std::uint64_t limit = max() - max() % bound;
  for (;;) {
    const std::uint64_t r = (*this)();
    if (r < limit) return r % bound;
  }
}

}  // namespace ripcert
