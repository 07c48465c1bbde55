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

#include "designet/bounds.hpp"

#include <cmath>

namespace designet::bounds {

namespace {

void require_eps_unit(double eps) {
  if (!(eps > 0.0) || eps > 1.0) {
    throw Error(Error::Kind::precondition, "eps must lie in (0, 1]");
  }
}

double inner_log(double eps, int d) {
  double l = std::log(6.0 * kSzarekC / eps);
  if (!(l > 0.0)) throw Error(Error::Kind::numeric, "nonpositive logarithm in tau");
  return l;
}

// ceil with a small backoff so exact integer ratios do not round up.
long safe_ceil(double x) { return static_cast<long>(std::ceil(x - 1e-12)); }

}  // namespace

double tau(double eps, int d) {
  require_eps_unit(eps);
  double sqrt_l = std::sqrt(inner_log(eps, d));
  double inner = std::log(static_cast<double>(d) / eps * sqrt_l);
  if (!(sqrt_l / 32.0 + inner > 0.0)) {
    throw Error(Error::Kind::numeric, "nonpositive inner logarithm in tau");
  }
  return sqrt_l * std::sqrt(sqrt_l / 32.0 + inner);
}

double t_design_degree(double eps, int d) {
  return 5.0 * std::pow(static_cast<double>(d), 2.5) / eps * tau(eps, d);
}

double delta_required(double eps, int d) {
  require_eps_unit(eps);
  double sqrt_l = std::sqrt(inner_log(eps, d));
  double base = std::pow(eps, 1.5) / (4.0 * kSzarekC * sqrt_l * static_cast<double>(d));
  return std::pow(base, static_cast<double>(d) * d - 1.0) / 32.0;
}

double sigma_star(double eps, int d) {
  require_eps_unit(eps);
  return eps / static_cast<double>(d) / std::sqrt(inner_log(eps, d));
}

double word_length(double eps, int d, double delta) {
  require_eps_unit(eps);
  if (delta >= 1.0) throw Error(Error::Kind::precondition, "delta must be < 1");
  double per_dim = 2.0 * std::log(1.0 / eps) + std::log(4.0 * std::pow(kSzarekC, 1.5) * d);
  return (std::log(32.0) + (static_cast<double>(d) * d - 1.0) * per_dim) / (1.0 - delta);
}

double sk_length(double eps, double a_const, double b_const, double gap0) {
  if (gap0 <= 0.0 || gap0 > 1.0) throw Error(Error::Kind::precondition, "gap0 must lie in (0, 1]");
  double l = std::log(1.0 / eps);
  return a_const * (l * l * l + b_const) / gap0;
}

NetLowerBounds net_lower_bounds(double eps, int d) {
  if (!(eps > 0.0) || eps > 2.0) throw Error(Error::Kind::precondition, "eps must lie in (0, 2]");
  NetLowerBounds out;
  double volume = (static_cast<double>(d) * d - 1.0) / 2.0 * std::log(kSzarekSmallC / (2.0 * eps)) -
                  static_cast<double>(d);
  out.t_volume = std::max(0.0, volume);
  out.t_design = std::max(0.0, 2.0 / (5.0 * eps) - 2.0);
  return out;
}

std::uint64_t design_cardinality(int d, int t) {
  if (d < 2 || t < 0) throw Error(Error::Kind::invalid_argument, "need d >= 2, t >= 0");
  // binom(d+t-1, t) over the smaller of t and d-1 factors, exact in 128 bits.
  unsigned long long n = static_cast<unsigned long long>(d) + t - 1;
  unsigned long long k = std::min<unsigned long long>(t, d - 1);
  unsigned __int128 binom = 1;
  for (unsigned long long i = 1; i <= k; ++i) {
    binom = binom * (n - k + i) / i;
    if (binom > static_cast<unsigned __int128>(UINT32_MAX)) {
      throw Error(Error::Kind::dimension_limit, "design cardinality exceeds 64-bit range");
    }
  }
  unsigned long long b = static_cast<unsigned long long>(binom);
  return b * b;
}

double support_lower_bound(double delta_diamond, int d, int k) {
  if (delta_diamond < 0.0 || delta_diamond > 1.0) {
    throw Error(Error::Kind::precondition, "delta_diamond must lie in [0, 1]");
  }
  return (1.0 - delta_diamond) * static_cast<double>(design_cardinality(d, k));
}

BhhDepths bhh_depths(int n, int t, int d, double eps) {
  if (n < 2 || t < 1) throw Error(Error::Kind::precondition, "need n >= 2 and t >= 1");
  if (!(eps > 0.0)) throw Error(Error::Kind::precondition, "eps must be positive");
  double log_d = std::log(static_cast<double>(d));
  double ceil_logd = static_cast<double>(safe_ceil(std::log(4.0 * t) / log_d));
  double shared = ceil_logd * ceil_logd * static_cast<double>(d) * d *
                  std::pow(static_cast<double>(t), 5.0 + 3.1 * log_d) *
                  (2.0 * n * t * log_d + std::log(1.0 / eps));
  BhhDepths out;
  out.l_loc_haar = 42500.0 * n * shared;
  out.l_par_haar = 523000.0 * shared;
  return out;
}

double composite_depth(double l_haar, int n, double t, double c_gateset, bool parallel) {
  if (c_gateset <= 0.0) throw Error(Error::Kind::precondition, "C(G) must be positive");
  if (t < 2.0) throw Error(Error::Kind::precondition, "t must be >= 2 (log^2 degenerate)");
  double lt = std::log(t);
  double factor = parallel ? 2.0 : static_cast<double>(n);
  return factor * lt * lt * c_gateset * l_haar;
}

double varju_gap_floor(double gap_t0, double t, double d_varju) {
  if (t < 2.0) throw Error(Error::Kind::precondition, "t must be >= 2");
  if (d_varju <= 0.0) throw Error(Error::Kind::precondition, "D must be positive");
  if (gap_t0 < 0.0 || gap_t0 > 1.0) throw Error(Error::Kind::precondition, "gap must lie in [0, 1]");
  double lt = std::log(t);
  return gap_t0 / (d_varju * lt * lt);
}

long design_depth_needed(double gap, double delta_target) {
  if (!(gap > 0.0) || gap > 1.0) throw Error(Error::Kind::precondition, "gap must lie in (0, 1]");
  if (!(delta_target > 0.0) || delta_target >= 1.0) {
    throw Error(Error::Kind::precondition, "delta target must lie in (0, 1)");
  }
  return safe_ceil(std::log(1.0 / delta_target) / gap);
}

ConsistencyReport consistency_check(int d, double eps) {
  ConsistencyReport r;
  r.t_upper = t_design_degree(eps, d);
  r.lower = net_lower_bounds(eps, d);
  r.margin_volume = r.t_upper - r.lower.t_volume;
  r.margin_design = r.t_upper - r.lower.t_design;
  r.pass = r.margin_volume >= 0.0 && r.margin_design >= 0.0;
  return r;
}

}  // namespace designet::bounds
