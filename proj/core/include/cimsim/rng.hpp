#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cimsim {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent stream seed from (root seed, tag, index).
// Every unit of Monte Carlo work owns one stream, so results do not
// depend on how work is split across threads.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view tag,
                          std::uint64_t index = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal(double sigma) {
    if (sigma <= 0.0) return 0.0;
    return sigma * normal_(gen_);
  }
  double uniform() { return uni_(gen_); }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uni_{0.0, 1.0};
};

}  // namespace cimsim
