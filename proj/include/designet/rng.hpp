/*
 * Copyright 2026 The designet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DESIGNET_RNG_HPP
#define DESIGNET_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace designet {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Addressable random stream: the same (seed, stream) always yields the same
/// sample sequence. Parallel Monte Carlo derives one block() per work chunk and
/// reduces in block order, so results do not depend on scheduling.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngStream block(std::uint64_t index) const {
    return RngStream{seed, detail::splitmix64(stream * 0x9e3779b97f4a7c15ULL + index + 1)};
  }
};

/// Stateful sampler over one stream. Distributions are hand-rolled on top of
/// mt19937_64 so sequences are identical across standard libraries.
class Sampler {
public:
  explicit Sampler(RngStream s) {
    std::uint64_t k = detail::splitmix64(detail::splitmix64(s.seed) ^ s.stream);
    std::seed_seq seq{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32),
                      static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.stream)};
    eng_.seed(seq);
  }

  std::uint64_t bits() { return eng_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection sampling keeps the map exactly uniform.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Standard normal via Box-Muller (one spare cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Complex with independent standard-normal real and imaginary parts.
  std::complex<double> complex_normal() {
    double re = normal();
    double im = normal();
    return {re, im};
  }

private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace designet

#endif
