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

#ifndef DESIGNET_MOMENT_OPERATORS_HPP
#define DESIGNET_MOMENT_OPERATORS_HPP

#include <vector>

#include "designet/linalg.hpp"

namespace designet {

struct WeightedGate {
  double weight;
  UnitaryMatrix gate;
};

/// Discrete measure on the unitary group: weights are positive and sum to 1
/// within 1e-12, all gates share the dimension d.
class GateEnsemble {
public:
  GateEnsemble(int d, std::vector<WeightedGate> items);

  static GateEnsemble uniform(std::vector<UnitaryMatrix> gates);
  static GateEnsemble singleton(UnitaryMatrix gate);

  int dim() const { return d_; }
  int size() const { return static_cast<int>(items_.size()); }
  const std::vector<WeightedGate>& items() const { return items_; }

private:
  int d_;
  std::vector<WeightedGate> items_;
};

/// t-th moment operator of a measure: the weighted average of
/// U^(t) (x) conj(U)^(t), a contraction on a d^(2t)-dimensional space.
struct MomentOperator {
  int d = 0;
  int t = 0;
  ComplexOperator op;
};

/// Moment operator of a discrete ensemble; dense when d^(2t) fits the dense
/// ceiling, matrix-free (sum of factored Kronecker actions) otherwise.
MomentOperator moment_operator(const GateEnsemble& ens, int t);

/// Haar moment operator: the orthogonal projector onto the span of vectorized
/// permutation operators on (C^d)^(t), assembled from the Gram matrix
/// G(pi, sigma) = d^(#cycles(pi^-1 sigma)) and its pseudo-inverse. Satisfies
/// P^2 = P = P^dag; exact for every t including the rank-deficient t > d case.
MomentOperator haar_moment_projector(int d, int t);

/// Maximum t accepted by haar_moment_projector (t! permutation budget).
int max_projector_order();

/// Expander norm delta(nu, t) = || T_{nu,t} - T_{mu,t} ||_inf.
double expander_norm(const GateEnsemble& ens, int t, NormMode mode = NormMode::dense,
                     double tol = 1e-8, RngStream rng = RngStream{0x5eed, 1});

/// Spectral gap g(nu, t) = 1 - delta(nu, t).
double gap(const GateEnsemble& ens, int t, NormMode mode = NormMode::dense, double tol = 1e-8,
           RngStream rng = RngStream{0x5eed, 1});

/// Convolution of measures: all products a_i * b_j with multiplied weights.
/// With dedup enabled, gates equal up to a global phase (|tr(U^dag V)| = d
/// within 1e-9) are merged; the induced measure on channels is unchanged.
GateEnsemble convolve(const GateEnsemble& a, const GateEnsemble& b, bool dedup = true);

/// Same measure pushed through U -> U^dag.
GateEnsemble inverse_ensemble(const GateEnsemble& ens);

/// l-fold self-convolution nu^(*l).
GateEnsemble convolution_power(const GateEnsemble& ens, int l, bool dedup = true);

namespace perm_detail {
/// Permutations of {0..t-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int t);
/// Number of cycles of the permutation pi^-1 sigma.
int cycles_of_relative(const std::vector<int>& pi, const std::vector<int>& sigma);
}  // namespace perm_detail

}  // namespace designet

#endif
