#pragma once

#include <cstdint>
#include <cstring>
#include <cmath>
#include <string_view>
#include <vector>

namespace xlc::core {

// 64-bit FNV-1a over a byte string.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Child seed derivation: (master seed, stage name, item id) -> independent
// stream seed. Per-item results stay independent of processing order.
inline std::uint64_t child_seed(std::uint64_t master, std::string_view stage,
                                std::string_view item_id) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[8];
  std::memcpy(buf, &master, 8);
  h = fnv1a64(std::string_view(buf, 8), h);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(stage, h);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(item_id, h);
  std::uint64_t s = h;
  return splitmix64(s);
}

// Deterministic RNG with platform-independent draws. Used everywhere the
// artifact needs reproducible randomness (stdlib distributions are
// implementation-defined, so draws are hand-rolled).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n), unbiased via rejection.
  std::size_t uniform_index(std::size_t n) {
    std::uint64_t bound = n;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  // Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace xlc::core
