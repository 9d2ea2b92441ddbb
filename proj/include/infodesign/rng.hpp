#pragma once

#include <cstdint>

namespace infodesign {

// Counter-based stream: the state is a keyed hash of (seed, b_index, trial),
// advanced by splitmix64 steps. Streams for distinct keys are independent, so
// trials can run in any order without changing their draws.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t b_index, std::uint64_t trial) {
    state_ = mix(mix(mix(seed ^ 0x9e3779b97f4a7c15ull) + b_index) + trial);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace infodesign
