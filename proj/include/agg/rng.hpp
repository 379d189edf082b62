#pragma once

#include <cstdint>

namespace agg {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so any sample can be regenerated without
/// replaying the ones before it. `split` derives an independent stream.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream) {}

  constexpr CounterRng split(std::uint64_t child) const noexcept {
    return CounterRng(seed_, mix(stream_ ^ mix(child + 0x632be59bd9b4e019ULL)));
  }

  constexpr std::uint64_t operator()() noexcept {
    return mix(seed_ ^ mix(stream_ + 0x9e3779b97f4a7c15ULL * ++counter_));
  }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v = (*this)();
    while (v >= limit) v = (*this)();
    return v % bound;
  }

  /// Uniform in [lo, hi].
  constexpr std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  // splitmix64 finalizer
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace agg
