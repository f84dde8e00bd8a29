#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace atsp {

// Deterministic seeded generator: xoshiro256** with splitmix64 state
// expansion. The stream is a pure function of the 64-bit seed, identical
// across platforms and runs. Child sources are derived by hashing a label
// into the parent seed, so parallel consumers get independent streams
// without coordinating draw order.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  RandomSource derive_child(std::string_view label) const;

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  // Uniform in [0, bound), bound >= 1. Rejection-sampled, unbiased.
  std::uint64_t next_below(std::uint64_t bound);

  // Uniform in [0, 1).
  double next_unit();

  // True with probability p.
  bool next_bool(double p) { return next_unit() < p; }

  // Uniform pair of distinct indices in [lo, n).
  std::pair<int, int> next_distinct_pair(int lo, int n);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(next_below(i))]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_[4];
};

}  // namespace atsp
