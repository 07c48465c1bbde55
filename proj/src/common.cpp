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

#include "designet/common.hpp"

#include <cmath>
#include <cstdlib>

namespace designet {

long max_dense_dim() {
  static const long value = [] {
    const char* env = std::getenv("DESIGNET_MAX_DIM");
    if (env != nullptr) {
      long v = std::strtol(env, nullptr, 10);
      if (v > 0) return v;
    }
    return 4096L;
  }();
  return value;
}

McEstimate wilson_interval(long k, long n) {
  const double z = 1.959963984540054;
  double p = static_cast<double>(k) / static_cast<double>(n);
  double z2n = z * z / static_cast<double>(n);
  double center = (p + z2n / 2.0) / (1.0 + z2n);
  double half = z * std::sqrt(p * (1.0 - p) / static_cast<double>(n) + z2n * z2n / (4.0 * z * z)) /
                (1.0 + z2n);
  McEstimate e;
  e.estimate = p;
  e.ci_lo = std::max(0.0, center - half);
  e.ci_hi = std::min(1.0, center + half);
  e.stderr_ = std::sqrt(std::max(p * (1.0 - p), 1.0 / static_cast<double>(n)) / static_cast<double>(n));
  e.n_samples = n;
  return e;
}

McEstimate mean_interval(double sum, double sum_sq, long n) {
  double mean = sum / static_cast<double>(n);
  double var = std::max(0.0, sum_sq / static_cast<double>(n) - mean * mean);
  double se = std::sqrt(var / static_cast<double>(n));
  McEstimate e;
  e.estimate = mean;
  e.stderr_ = se;
  e.ci_lo = mean - 1.959963984540054 * se;
  e.ci_hi = mean + 1.959963984540054 * se;
  e.n_samples = n;
  return e;
}

}  // namespace designet
