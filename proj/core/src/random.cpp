#include "atsp/random.hpp"

namespace atsp {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
  std::uint64_t sm = seed;
  for (auto& s : state_) s = splitmix64(sm);
}

RandomSource RandomSource::derive_child(std::string_view label) const {
  std::uint64_t mix = seed_ ^ rotl(fnv1a(label), 17);
  // One extra splitmix round decorrelates children of adjacent seeds.
  return RandomSource(splitmix64(mix));
}

std::uint64_t RandomSource::next_u64() {
  std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t RandomSource::next_below(std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

double RandomSource::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::pair<int, int> RandomSource::next_distinct_pair(int lo, int n) {
  int span = n - lo;
  int a = lo + static_cast<int>(next_below(static_cast<std::uint64_t>(span)));
  int b = lo + static_cast<int>(next_below(static_cast<std::uint64_t>(span - 1)));
  if (b >= a) ++b;
  return {a, b};
}

}  // namespace atsp
