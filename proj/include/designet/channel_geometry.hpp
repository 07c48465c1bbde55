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

#ifndef DESIGNET_CHANNEL_GEOMETRY_HPP
#define DESIGNET_CHANNEL_GEOMETRY_HPP

#include "designet/linalg.hpp"

namespace designet {

class GateEnsemble;

/// Distances between the unitary channels of U and V. covering_arc is the
/// length L of the smallest circular arc containing all eigenphases of UV^dag;
/// d_op = 2 sin(L/4) (phase-minimized operator norm) and d_diamond = 2 sin(L/2)
/// capped at 2 once the arc reaches pi (the eigenvalue hull then contains the
/// origin and the diamond distance saturates).
struct ChannelDistanceReport {
  double d_op = 0.0;
  double d_diamond = 0.0;
  double covering_arc = 0.0;
};

ChannelDistanceReport channel_distance(const UnitaryMatrix& u, const UnitaryMatrix& v);

/// d_op between channels, d=2 closed form: sqrt(2 - |tr(U V^dag)|). Used by
/// sampling-heavy code paths; agrees with channel_distance.
double channel_distance_d2(const MatC& u, const MatC& v);

/// Haar fraction of the ball B(I, eps) in the metric d_op, with Wilson CI.
/// By unitary invariance the center does not matter.
McEstimate ball_volume_mc(int d, double eps, long n_samples, RngStream rng);

/// Volume bracket (eps/5pi)^(d^2-1) <= vol B(V, eps) <= (10 eps/pi)^(d^2-1).
std::pair<double, double> szarek_bounds(int d, double eps);

/// Certified lower bound on the diamond distance between the t-fold channel
/// of the ensemble and the Haar t-fold channel: trace norm of the Choi-matrix
/// difference divided by d^t.
double choi_design_defect_lower_bound(const GateEnsemble& ens, int t);

}  // namespace designet

#endif
