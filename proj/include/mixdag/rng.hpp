#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace mixdag {

// Deterministic random source. mt19937_64 output is pinned by the standard,
// but the std distributions are not, so every conversion here is hand-rolled
// to keep streams bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // uniform double in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // strictly positive unit-rate exponential
  double exponential() {
    for (;;) {
      double e = -std::log1p(-uniform());
      if (e > 0.0) return e;
    }
  }

  // inclusive bounds; modulo bias is irrelevant at the ranges used here
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  // index drawn according to `probs` (assumed to sum to ~1)
  int categorical(std::span<const double> probs) {
    double u = uniform();
    double acc = 0.0;
    int last_positive = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] > 0.0) last_positive = static_cast<int>(i);
      acc += probs[i];
      if (u < acc) return static_cast<int>(i);
    }
    return last_positive;
  }

  // flat draw from the probability simplex, entries strictly positive
  std::vector<double> simplex(int k) {
    std::vector<double> out(static_cast<size_t>(k));
    double total = 0.0;
    for (double& x : out) {
      x = exponential();
      total += x;
    }
    for (double& x : out) x /= total;
    return out;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(0, static_cast<int>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

uint64_t splitmix64(uint64_t x);
uint64_t mix_seed(uint64_t a, uint64_t b);

}  // namespace mixdag
