#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bg/errors.hpp"

namespace bg {

// SplitMix64 finalizer. Used as a counter-based mix so per-replication
// seeds depend only on (master seed, replication index), never on worker
// scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) + index);
}

// mt19937_64 plus hand-rolled draws. The standard distributions are
// implementation-defined, so sampling is done from raw 64-bit words to keep
// traces bit-identical across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // [0, 1)
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // uniform over {lo, ..., hi} inclusive
  int uniform_int(int lo, int hi) {
    if (hi < lo) throw DomainError("rng: empty integer range");
    int span = hi - lo + 1;
    int k = static_cast<int>(uniform01() * span);
    return lo + (k >= span ? span - 1 : k);
  }

  int categorical(const std::vector<double>& probs) {
    if (probs.empty()) throw DimensionError("rng: empty categorical");
    double u = uniform01();
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
      cum += probs[i];
      if (u < cum) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
  }

  std::uint64_t word() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bg
