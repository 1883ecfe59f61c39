#pragma once

#include <cstdint>

namespace auctionlab {

namespace detail {

// SplitMix64 output function (Steele, Lea, Flood 2014). Bijective mix of a
// 64-bit word; the standard increment constant is the golden-ratio gamma.
inline constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// Counter-based random stream keyed by (seed, stream). Stream j of seed s is
// an independent SplitMix64 sequence whose starting state is a hash of the
// pair, so replicate j produces the same draws whether it runs on one worker
// or many. Cheap to construct per replicate.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(detail::mix64(seed + detail::kSplitMixGamma) ^
               detail::mix64(stream * 0xda942042e4dd58b5ULL + 0x632be59bd9b4e019ULL)) {}

  std::uint64_t next_u64() {
    state_ += detail::kSplitMixGamma;
    return detail::mix64(state_);
  }

  // Uniform draw strictly inside (0,1); both endpoints are unreachable so the
  // result is always a valid quantile argument.
  double next_uniform01() {
    const double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
    return (static_cast<double>(next_u64() >> 11) + 0.5) * kInv53;
  }

  // Uniform index in [0, n). Modulo bias is below 2^-53 for the small n used
  // in tie-breaking.
  std::size_t next_below(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

 private:
  std::uint64_t state_;
};

}  // namespace auctionlab
