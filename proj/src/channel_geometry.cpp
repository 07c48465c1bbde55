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

#include "designet/channel_geometry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "designet/moment_operators.hpp"

namespace designet {

namespace {
constexpr double kPi = 3.14159265358979323846;

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}
}  // namespace

ChannelDistanceReport channel_distance(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.dim() != v.dim()) {
    throw Error(Error::Kind::invalid_argument, "channel distance needs equal dimensions");
  }
  UnitaryMatrix w(u.matrix() * v.matrix().adjoint(), 1e-8);
  std::vector<double> phases = unitary_eigenphases(w);
  const int d = w.dim();
  // Smallest covering arc = 2pi minus the largest circular gap between
  // consecutive eigenphases; its midpoint realizes the optimal global phase.
  double max_gap = phases[0] + 2.0 * kPi - phases[d - 1];
  for (int i = 0; i + 1 < d; ++i) max_gap = std::max(max_gap, phases[i + 1] - phases[i]);
  double arc = std::max(0.0, 2.0 * kPi - max_gap);
  ChannelDistanceReport r;
  r.covering_arc = arc;
  r.d_op = 2.0 * std::sin(arc / 4.0);
  r.d_diamond = (arc >= kPi) ? 2.0 : 2.0 * std::sin(arc / 2.0);
  return r;
}

double channel_distance_d2(const MatC& u, const MatC& v) {
  Complex tr = u(0, 0) * std::conj(v(0, 0)) + u(0, 1) * std::conj(v(0, 1)) +
               u(1, 0) * std::conj(v(1, 0)) + u(1, 1) * std::conj(v(1, 1));
  double q = std::min(2.0, std::abs(tr));
  return std::sqrt(std::max(0.0, 2.0 - q));
}

McEstimate ball_volume_mc(int d, double eps, long n_samples, RngStream rng) {
  if (eps < 0.0 || eps > 2.0) throw Error(Error::Kind::invalid_argument, "eps must be in [0, 2]");
  if (n_samples < 100) throw Error(Error::Kind::invalid_argument, "need at least 100 samples");
  const UnitaryMatrix id = UnitaryMatrix::identity(d);
  long hits = 0;
  const long blocks = 64;
  for (long b = 0; b < blocks; ++b) {
    long n_b = n_samples / blocks + (b < n_samples % blocks ? 1 : 0);
    Sampler sampler(rng.block(b));
    for (long i = 0; i < n_b; ++i) {
      UnitaryMatrix u = haar_sample(d, sampler);
      double dist = (d == 2) ? channel_distance_d2(u.matrix(), id.matrix())
                             : channel_distance(u, id).d_op;
      if (dist <= eps) ++hits;
    }
  }
  return wilson_interval(hits, n_samples);
}

std::pair<double, double> szarek_bounds(int d, double eps) {
  if (eps < 0.0 || eps > 2.0) throw Error(Error::Kind::invalid_argument, "eps must be in [0, 2]");
  double e = static_cast<double>(d) * static_cast<double>(d) - 1.0;
  double lower = std::pow(eps / (5.0 * kPi), e);
  double upper = std::pow(10.0 * eps / kPi, e);
  return {lower, upper};
}

double choi_design_defect_lower_bound(const GateEnsemble& ens, int t) {
  const int d = ens.dim();
  long big_d = ipow(d, t);
  long dim = big_d * big_d;
  if (dim > max_dense_dim()) {
    throw Error(Error::Kind::dimension_limit,
                "Choi bound needs dense d^(2t) = " + std::to_string(dim));
  }
  MomentOperator tn = moment_operator(ens, t);
  MomentOperator proj = haar_moment_projector(d, t);
  MatC diff = tn.op.dense_matrix() - proj.op.dense_matrix();
  // Reshuffle the moment-operator difference into the Choi matrix of the
  // t-fold channel difference: J[(m,i),(n,j)] = M[(m,n),(i,j)].
  MatC choi(dim, dim);
  for (long m = 0; m < big_d; ++m) {
    for (long i = 0; i < big_d; ++i) {
      for (long n = 0; n < big_d; ++n) {
        for (long j = 0; j < big_d; ++j) {
          choi(m * big_d + i, n * big_d + j) = diff(m * big_d + n, i * big_d + j);
        }
      }
    }
  }
  MatC herm = 0.5 * (choi + choi.adjoint());
  Eigen::SelfAdjointEigenSolver<MatC> es(herm);
  double trace_norm = es.eigenvalues().cwiseAbs().sum();
  return trace_norm / static_cast<double>(big_d);
}

}  // namespace designet
