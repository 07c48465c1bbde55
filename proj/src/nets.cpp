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

#include "designet/nets.hpp"

#include <algorithm>
#include <cmath>

#include "designet/bounds.hpp"
#include "designet/channel_geometry.hpp"

namespace designet {

namespace {

double distance_to(const MatC& u, const MatC& v, int d) {
  if (d == 2) return channel_distance_d2(u, v);
  return channel_distance(UnitaryMatrix(u, 1e-6), UnitaryMatrix(v, 1e-6)).d_op;
}

double min_distance(const MatC& u, const std::vector<UnitaryMatrix>& centers, int d) {
  double best = 4.0;
  for (const auto& c : centers) best = std::min(best, distance_to(u, c.matrix(), d));
  return best;
}

}  // namespace

int commutant_dimension(const std::vector<UnitaryMatrix>& gates) {
  if (gates.empty()) throw Error(Error::Kind::invalid_argument, "empty gate list");
  const int d = gates.front().dim();
  const long d2 = static_cast<long>(d) * d;
  const long d4 = d2 * d2;
  MatC stacked(static_cast<long>(gates.size()) * d4, d4);
  for (std::size_t g = 0; g < gates.size(); ++g) {
    if (gates[g].dim() != d) {
      throw Error(Error::Kind::invalid_argument, "gate dimension mismatch");
    }
    MatC w = dense_kron(gates[g].matrix(), gates[g].matrix().conjugate());
    // vec(W X - X W) = (I (x) W - W^T (x) I) vec(X), column-major vec.
    stacked.block(static_cast<long>(g) * d4, 0, d4, d4) =
        dense_kron(MatC::Identity(d2, d2), w) - dense_kron(w.transpose(), MatC::Identity(d2, d2));
  }
  return nullspace_dimension(stacked, 1e-9);
}

UniversalityReport universality_check(const std::vector<UnitaryMatrix>& gates, int t,
                                      bool certified) {
  if (t < 1) throw Error(Error::Kind::invalid_argument, "t must be >= 1");
  const int d = gates.front().dim();
  if (certified) {
    double eps_star = 1.0 / (2.0 * std::sqrt(2.0));
    double t_star = bounds::t_design_degree(eps_star, d);
    long dim_needed = 1;
    bool overflow = false;
    for (int i = 0; i < 2 * static_cast<int>(std::ceil(t_star)); ++i) {
      if (dim_needed > max_dense_dim() / d) {
        overflow = true;
        break;
      }
      dim_needed *= d;
    }
    if (overflow || dim_needed > max_dense_dim()) {
      throw Error(Error::Kind::dimension_limit,
                  "certified universality needs t* = " + std::to_string(std::ceil(t_star)) +
                      " (moment dimension d^(2 t*) far beyond the dense limit)");
    }
  }
  UniversalityReport r;
  r.t = t;
  r.commutant_dim = commutant_dimension(gates);
  auto ens = GateEnsemble::uniform(gates);
  long dim = 1;
  for (int i = 0; i < 2 * t; ++i) dim *= d;
  r.delta = expander_norm(ens, t, dim <= max_dense_dim() ? NormMode::dense : NormMode::iterative);
  if (r.commutant_dim != 2) {
    r.verdict = UniversalityVerdict::fail_necessary;
  } else if (r.delta < 1.0 - 1e-9) {
    r.verdict = UniversalityVerdict::candidate_universal;
  } else {
    r.verdict = UniversalityVerdict::finite_group_suspected;
  }
  return r;
}

NetReport build_net_from_words(const GateEnsemble& g, double eps, int max_len, long word_budget,
                               long test_samples, RngStream rng) {
  if (eps <= 0.0) throw Error(Error::Kind::invalid_argument, "eps must be positive");
  if (max_len < 1 || word_budget < 1) {
    throw Error(Error::Kind::invalid_argument, "need max_len >= 1 and a positive word budget");
  }
  const int d = g.dim();
  NetReport rep;
  rep.eps_target = eps;
  rep.words_tried = word_budget;

  // Cumulative letter distribution.
  std::vector<double> cum;
  double acc = 0.0;
  for (const auto& it : g.items()) {
    acc += it.weight;
    cum.push_back(acc);
  }

  Sampler words(rng.block(0));
  const double keep_threshold = eps / 2.0;
  for (long w = 0; w < word_budget; ++w) {
    int len = 1 + static_cast<int>(words.uniform_index(max_len));
    MatC prod = MatC::Identity(d, d);
    for (int l = 0; l < len; ++l) {
      double u = words.uniform();
      std::size_t pick = std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
      if (pick >= cum.size()) pick = cum.size() - 1;
      prod = g.items()[pick].gate.matrix() * prod;
    }
    bool keep = true;
    for (const auto& c : rep.centers) {
      if (distance_to(prod, c.matrix(), d) < keep_threshold) {
        keep = false;
        break;
      }
    }
    if (keep) rep.centers.emplace_back(std::move(prod), 1e-6);
  }

  auto coverage = covering_radius_mc(rep.centers, d, eps, test_samples, rng.block(1));
  rep.covering_radius = coverage.covering_radius;
  rep.covering_radius_hi = coverage.covering_radius_hi;
  rep.sample_count = test_samples;
  rep.failed = !coverage.pass;
  return rep;
}

CoverageReport covering_radius_mc(const std::vector<UnitaryMatrix>& centers, int d, double eps,
                                  long test_samples, RngStream rng) {
  if (centers.empty()) throw Error(Error::Kind::invalid_argument, "no centers");
  std::vector<double> dists(test_samples);
  const long blocks = 64;
  long idx = 0;
  for (long b = 0; b < blocks; ++b) {
    long n_b = test_samples / blocks + (b < test_samples % blocks ? 1 : 0);
    Sampler sampler(rng.block(b));
    for (long i = 0; i < n_b; ++i) {
      UnitaryMatrix u = haar_sample(d, sampler);
      dists[idx++] = min_distance(u.matrix(), centers, d);
    }
  }
  std::sort(dists.begin(), dists.end());
  CoverageReport rep;
  rep.sample_count = test_samples;
  rep.eps = eps;
  rep.covering_radius = dists.back();
  double q99 = dists[static_cast<std::size_t>(0.99 * (test_samples - 1))];
  rep.covering_radius_hi = dists.back() + (dists.back() - q99);
  rep.pass = rep.covering_radius <= eps;
  return rep;
}

NetDesignEnsemble net_to_design(const NetReport& net, int t, long mc_samples, RngStream rng) {
  if (net.failed) {
    throw Error(Error::Kind::precondition, "net failed to reach its target radius");
  }
  if (net.centers.empty()) throw Error(Error::Kind::invalid_argument, "net has no centers");
  const int d = net.centers.front().dim();
  const double eps = net.eps_target;
  std::vector<long> counts(net.centers.size(), 0);
  const long blocks = 64;
  for (long b = 0; b < blocks; ++b) {
    long n_b = mc_samples / blocks + (b < mc_samples % blocks ? 1 : 0);
    Sampler sampler(rng.block(b));
    for (long i = 0; i < n_b; ++i) {
      UnitaryMatrix u = haar_sample(d, sampler);
      bool covered = false;
      for (std::size_t c = 0; c < net.centers.size(); ++c) {
        if (distance_to(u.matrix(), net.centers[c].matrix(), d) <= eps) {
          ++counts[c];
          covered = true;
          break;
        }
      }
      if (!covered) {
        throw Error(Error::Kind::numeric, "a Haar draw is covered by no center: net invalid at eps");
      }
    }
  }
  std::vector<WeightedGate> items;
  double weight_err = 0.0;
  for (std::size_t c = 0; c < net.centers.size(); ++c) {
    if (counts[c] == 0) continue;
    double w = static_cast<double>(counts[c]) / static_cast<double>(mc_samples);
    weight_err += std::sqrt(w * (1.0 - w) / static_cast<double>(mc_samples));
    items.push_back(WeightedGate{w, net.centers[c]});
  }
  // Exact unit total despite rounding: scale the largest weight.
  double total = 0.0;
  for (const auto& it : items) total += it.weight;
  items.front().weight += 1.0 - total;

  NetDesignEnsemble out{GateEnsemble(d, std::move(items)), eps, t, 0.0, weight_err};
  long dim = 1;
  for (int i = 0; i < 2 * t; ++i) dim *= d;
  out.delta_measured = expander_norm(out.base, t,
                                     dim <= max_dense_dim() ? NormMode::dense : NormMode::iterative);
  return out;
}

CoverageReport design_to_net_check(const GateEnsemble& ens, double eps, long test_samples,
                                   RngStream rng) {
  std::vector<UnitaryMatrix> centers;
  centers.reserve(ens.items().size());
  for (const auto& it : ens.items()) centers.push_back(it.gate);
  return covering_radius_mc(centers, ens.dim(), eps, test_samples, rng);
}

}  // namespace designet
