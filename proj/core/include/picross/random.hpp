#pragma once

// Counter-based random numbers. Every draw is a pure function of
// (seed, stream, counter), so results do not depend on platform, standard
// library, or the order in which independent checks run.

#include <cstdint>

namespace picross {

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  bool coin() { return (next_u64() >> 63) != 0; }
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  bool hasSpare_ = false;
  double spare_ = 0.0;
};

}  // namespace picross
