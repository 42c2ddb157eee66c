// Copyright 2026 The cimsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

// Seeded randomness helpers. The engine is std::mt19937_64 (its output
// sequence is pinned by the standard); the distributions are hand-rolled
// because the std:: ones are implementation-defined, and identical seeds
// must reproduce identical streams everywhere.
namespace cimsim::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stateless stream split: one independent seed per (base, batch, run).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ (a * 0x9e3779b97f4a7c15ULL + 1));
  h = splitmix64(h ^ (b * 0xd1b54a32d192ed03ULL + 1));
  return h;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n), n >= 1, via rejection.
inline std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t n) {
  std::uint64_t x, r;
  do {
    x = eng();
    r = x % n;
  } while (x - r > std::uint64_t(0) - n);
  return r;
}

// Standard-normal sampler (Box-Muller, second value cached).
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return uniform01(eng_); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform01(eng_);
    } while (u1 <= 0.0);
    const double u2 = uniform01(eng_);
    const double mag = std::sqrt(-2.0 * std::log(u1));
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    spare_ = mag * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return mag * std::cos(kTwoPi * u2);
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace cimsim::rng
