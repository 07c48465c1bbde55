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

#ifndef DESIGNET_BOUNDS_HPP
#define DESIGNET_BOUNDS_HPP

#include <cstdint>

#include "designet/common.hpp"

namespace designet::bounds {

// Closed-form evaluators for the quantitative design/net bounds. All
// logarithms are natural unless a base is spelled out (log_d below); tokens of
// the form log(x)^(1/2) are read as [log(x)]^(1/2) throughout, matching their
// use inside denominators.

inline constexpr double kSzarekC = 15.707963267948966;  // 5 pi
inline constexpr double kSzarekSmallC = 0.3141592653589793;  // pi / 10

/// tau(eps, d) = sqrt(L) * sqrt(sqrt(L)/32 + log((d/eps) sqrt(L))) with
/// L = log(6 C / eps), C = 5 pi. Requires eps in (0, 1].
double tau(double eps, int d);

/// Degree at which an exact design is guaranteed to be an eps-net:
/// 5 d^(5/2) / eps * tau(eps, d).
double t_design_degree(double eps, int d);

/// Expander accuracy sufficient for an approximate design to net:
/// (1/32) (eps^(3/2) / (4 C sqrt(L) d))^(d^2 - 1).
double delta_required(double eps, int d);

/// sigma*(d, eps) = (eps / d) / sqrt(L).
double sigma_star(double eps, int d);

/// Word length making nu^(*l) an eps-net:
/// (log 32 + (d^2-1)(2 log(1/eps) + log(4 C^(3/2) d))) / (1 - delta).
double word_length(double eps, int d, double delta);

/// Inverse-free compilation length A (log^3(1/eps) + B) / gap0 with
/// caller-supplied constants.
double sk_length(double eps, double a_const, double b_const, double gap0);

/// Lower bounds on the degree of an exact design whose support nets at eps;
/// negative values are reported as 0 (a vacuous lower bound).
struct NetLowerBounds {
  double t_volume = 0.0;  // (d^2-1)/2 * log(c / 2 eps) - d, c = pi/10
  double t_design = 0.0;  // 2 / (5 eps) - 2
};
NetLowerBounds net_lower_bounds(double eps, int d);

/// Minimal-design cardinality binom(d+t-1, t)^2, exact.
std::uint64_t design_cardinality(int d, int t);

/// (1 - delta_diamond) binom(d+K-1, K)^2.
double support_lower_bound(double delta_diamond, int d, int k);

/// Haar-random circuit depths sufficient for a delta-approximate t-expander
/// (local and parallel layouts); log_d is base d, other logs natural.
struct BhhDepths {
  double l_loc_haar = 0.0;
  double l_par_haar = 0.0;
};
BhhDepths bhh_depths(int n, int t, int d, double eps);

/// Depth multiplier converting a Haar-circuit depth into a depth for a
/// universal gate set: n log^2(t) C(G) l (local) or 2 log^2(t) C(G) l
/// (parallel). Requires t >= 2.
double composite_depth(double l_haar, int n, double t, double c_gateset, bool parallel);

/// Gap floor gap_t0 / (D log^2 t) for t >= 2.
double varju_gap_floor(double gap_t0, double t, double d_varju);

/// Smallest l with (1-gap)^l <= delta_target: ceil(log(1/delta)/gap).
long design_depth_needed(double gap, double delta_target);

/// Upper bound t_design_degree must dominate both net lower bounds.
struct ConsistencyReport {
  double t_upper = 0.0;
  NetLowerBounds lower;
  double margin_volume = 0.0;
  double margin_design = 0.0;
  bool pass = false;
};
ConsistencyReport consistency_check(int d, double eps);

}  // namespace designet::bounds

#endif
