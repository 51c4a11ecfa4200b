#pragma once

#include <cstdint>
#include <stdexcept>

namespace layersum {

/// 64-bit master seed. A run's output is a pure function of the master seed
/// and the per-set stream ids; any value is permitted.
struct MasterSeed {
  std::uint64_t value = 0;
};

namespace detail {

// SplitMix64 finalizer (Steele/Lea/Flood 2014, constants by Vigna).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t rotl64(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// One independent pseudo-random stream: xoshiro256** (Blackman & Vigna 2018)
/// whose 256-bit state is expanded from mix64(seed + gamma * stream_id) through
/// a SplitMix64 chain. Adjacent stream ids therefore start from decorrelated
/// states, and the output sequence is a pure function of (seed, stream_id).
///
/// A stream is single-owner: never share one instance across threads. Streams
/// are cheap to construct and may be created on and moved between threads.
class RandomStream {
 public:
  RandomStream(MasterSeed seed, std::uint64_t stream_id) noexcept
      : stream_id_(stream_id) {
    std::uint64_t sm = detail::mix64(seed.value + detail::kGoldenGamma * stream_id);
    for (auto& word : state_) {
      sm += detail::kGoldenGamma;
      word = detail::mix64(sm);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
      state_[0] = detail::kGoldenGamma;  // all-zero state is the one forbidden point
  }

  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Number of bounded draws produced so far (next_int calls, not raw words).
  std::uint64_t draw_count() const noexcept { return draws_; }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  /// Uniform integer on [lo, hi], both ends inclusive, each outcome with
  /// probability exactly 1/(hi-lo+1). Requires hi - lo + 1 <= 2^63.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("next_int: lo > hi");
    ++draws_;
    const std::uint64_t range =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<std::int64_t>(bounded(range));
  }

 private:
  // Unbiased bounded sampling by widening multiply with rejection
  // (Lemire 2019, "Fast Random Integer Generation in an Interval").
  std::uint64_t bounded(std::uint64_t range) noexcept {
    unsigned __int128 product =
        static_cast<unsigned __int128>(next_u64()) * range;
    auto low = static_cast<std::uint64_t>(product);
    if (low < range) {
      const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
      while (low < threshold) {
        product = static_cast<unsigned __int128>(next_u64()) * range;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  std::uint64_t state_[4];
  std::uint64_t stream_id_ = 0;
  std::uint64_t draws_ = 0;
};

inline RandomStream make_stream(MasterSeed seed, std::uint64_t stream_id) noexcept {
  return RandomStream(seed, stream_id);
}

}  // namespace layersum
