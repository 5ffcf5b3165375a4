#pragma once

#include <cstdint>

namespace gsdiv {

// splitmix64 stream. Fully specified arithmetic, so sequences are identical
// across platforms and compilers. keyed(seed, k) derives independent
// substreams for Monte Carlo replications: results cannot depend on thread
// scheduling because replication k always sees the same stream.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  static RngStream keyed(std::uint64_t seed, std::uint64_t stream) {
    RngStream r(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
    // burn one output so nearby keys decorrelate immediately
    r.next_u64();
    return r;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // [0,1) with 53 random bits; one call per variate by construction.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace gsdiv
