#pragma once

// Philox4x32-10 counter-based generator (Salmon et al. construction).

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace fracdiff::mc {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

inline PhiloxCounter philox4x32_10(PhiloxCounter c, PhiloxKey k) {
  constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      k[0] += kW0;
      k[1] += kW1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
  return c;
}

// (master_seed, stream_id) names an independent substream
struct RngStream {
  std::uint64_t master_seed = 42;
  std::uint64_t stream_id = 0;
};

// One block of a substream. Counter words: [draw index, block, stream lo, stream hi];
// the key is the master seed.
class PhiloxEngine {
 public:
  using result_type = std::uint32_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<std::uint32_t>::max(); }

  explicit PhiloxEngine(const RngStream& s, std::uint32_t block = 0)
      : key_{static_cast<std::uint32_t>(s.master_seed), static_cast<std::uint32_t>(s.master_seed >> 32)},
        ctr_{0u, block, static_cast<std::uint32_t>(s.stream_id), static_cast<std::uint32_t>(s.stream_id >> 32)} {}

  result_type operator()() {
    if (pos_ == 4) {
      buf_ = philox4x32_10(ctr_, key_);
      ++ctr_[0];
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = (*this)();
    return (hi << 32) | (*this)();
  }

  // uniform on the open interval (0, 1), 53-bit resolution
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  // Box-Muller, one normal per pair of uniforms
  double normal() {
    const double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double exponential() { return -std::log(uniform()); }

 private:
  PhiloxKey key_;
  PhiloxCounter ctr_;
  PhiloxCounter buf_{};
  int pos_ = 4;
};

}  // namespace fracdiff::mc
