#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace gatelab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives the seed of an independent stream from a root seed and up to two
// task indices. Every parallel task gets its own stream so results do not
// depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = splitmix64(root);
  s = splitmix64(s ^ (a + 0x9e3779b97f4a7c15ull));
  s = splitmix64(s ^ (b + 0xd1b54a32d192ed03ull));
  return s;
}

// Seeded random stream. All transforms (uniform, normal, categorical) are
// implemented here on top of the engine's raw 64-bit output, so a given seed
// produces the same draw sequence on every build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform double in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // uniform double in (0, 1]
  double uniform_pos() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

  // standard normal via Box-Muller; consumes two uniforms per call
  double normal() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // index drawn from a (nearly) normalized weight vector
  std::size_t categorical(const std::vector<double>& probs) {
    if (probs.empty()) throw std::invalid_argument("categorical: empty weight vector");
    const double u = uniform();
    double cum = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] > 0.0) last_positive = i;
      cum += probs[i];
      if (u < cum) return i;
    }
    return last_positive;  // u landed in the rounding gap at the top
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gatelab
