#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace aqs {

// One SplitMix64 step. Used to whiten and combine seed material.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic sub-stream seed. Experiment instance (n, k) derives its seed
// from the base seed this way, so record sets do not depend on execution
// order or thread count.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = base;
  splitmix64_next(s);
  s ^= 0x632be59bd9b4e019ull * (a + 0x9e3779b97f4a7c15ull);
  splitmix64_next(s);
  s ^= 0xd1342543de82ef95ull * (b + 0x2545f4914f6cdd1dull);
  return splitmix64_next(s);
}

// Seeded generator with rejection-sampled bounded draws and a hand-rolled
// Fisher-Yates shuffle. std::uniform_int_distribution and std::shuffle are
// implementation-defined, which would make seeded outputs differ between
// standard libraries; the mt19937_64 stream itself is pinned by the standard.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw in [0, bound), unbiased via power-of-two masking.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t r;
    do {
      r = engine_() & mask;
    } while (r >= bound);
    return r;
  }

  double unit_real() {
    // 53-bit mantissa draw in [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace aqs
