#pragma once

#include <cstdint>
#include <vector>

namespace gdmcf {

// All randomness in the library flows from one root seed through named
// streams. The generator is SplitMix64 (Steele, Lea & Flood 2014): the state
// advances by the golden gamma and the output is the avalanche finalizer.
// Gaussians use Box-Muller on the uniform stream. The algorithms are spelled
// out here so another implementation can reproduce the statistics.

inline uint64_t splitmix64_mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent stream ids. Corruption levels, step sampling, batching etc.
// each consume their own stream so ablations stay seed-comparable.
enum class Stream : uint64_t {
  DiscreteCorruption = 1,
  ContinuousCorruption = 2,
  StepSampling = 3,
  Batching = 4,
  Activation = 5,
  GuidedUpdate = 6,
  ParamInit = 7,
  PosteriorStructure = 8,
  PosteriorFeature = 9,
  Synthetic = 10,
};

// seed' = mix(mix(mix(root + g*(stream+1)) + g*(a+1)) + g*(b+1)),
// g = 0x9e3779b97f4a7c15 (the SplitMix64 gamma).
inline uint64_t derive_seed(uint64_t root, Stream stream, uint64_t a = 0, uint64_t b = 0) {
  constexpr uint64_t g = 0x9e3779b97f4a7c15ULL;
  uint64_t h = root;
  h = splitmix64_mix(h + g * (static_cast<uint64_t>(stream) + 1));
  h = splitmix64_mix(h + g * (a + 1));
  h = splitmix64_mix(h + g * (b + 1));
  return h;
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64_mix(state_);
  }

  // uniform in [0, 1)
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1]
  double next_double_open() { return 1.0 - next_double(); }

  double next_gaussian();

  // uniform integer in [0, n), unbiased (rejection)
  int64_t next_below(int64_t n);

  // Number of failures before the next success of a Bernoulli(p) process,
  // by inversion: floor(log(U) / log(1-p)), U in (0,1]. Requires 0 < p < 1.
  int64_t geometric_skip(double p);

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int64_t i = static_cast<int64_t>(v.size()) - 1; i > 0; --i) {
      int64_t j = next_below(i + 1);
      std::swap(v[i], v[static_cast<size_t>(j)]);
    }
  }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Positions of successes of a Bernoulli(p) process over [0, n), ascending.
// Expected cost O(n*p); exact in distribution.
std::vector<int64_t> bernoulli_positions(Rng& rng, int64_t n, double p);

}  // namespace gdmcf
