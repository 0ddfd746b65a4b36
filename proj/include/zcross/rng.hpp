#ifndef ZCROSS_RNG_HPP
#define ZCROSS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace zcross {

// splitmix64 output mixer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_key(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a) ^ (b + 0x165667b19e3779f9ull));
}

inline std::uint64_t derive_key(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return derive_key(derive_key(a, b), c);
}

// Counter-based stream: the draw sequence depends only on (key, counter),
// so particles and replicas can be stepped in any thread order and still
// produce bit-identical results.
class CounterRng {
public:
  CounterRng() = default;
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ull); }

  // in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // in (0, 1]
  double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Box-Muller; one draw consumed per call pair, second value discarded to
  // keep the per-particle counter advance fixed.
  double gaussian() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace zcross

#endif
