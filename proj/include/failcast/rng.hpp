#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace failcast {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Deterministic random stream. Variates are generated from raw mt19937_64
// output so sequences are identical on every platform and rebuild; the
// standard <random> distributions carry no such guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  // Independent named sub-stream of a root seed. Used to give chains,
  // units and parameter draws their own reproducible streams.
  static Rng derive(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0) {
    return Rng(splitmix64(seed ^ splitmix64(fnv1a64(stream) + 0x9e3779b97f4a7c15ULL * index)));
  }

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; two uniforms per call.
  double normal(double mean = 0.0, double sd = 1.0) {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return mean + sd * r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace failcast
