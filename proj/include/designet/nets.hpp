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

#ifndef DESIGNET_NETS_HPP
#define DESIGNET_NETS_HPP

#include <string>
#include <vector>

#include "designet/moment_operators.hpp"

namespace designet {

/// Dimension of { X on C^(d^2) : X (U (x) conj U) = (U (x) conj U) X for all
/// U in G }, computed from the nullspace of the stacked commutator map.
/// Dimension 2 is necessary for universality of G.
int commutant_dimension(const std::vector<UnitaryMatrix>& gates);

enum class UniversalityVerdict {
  fail_necessary,           // commutant dimension != 2
  candidate_universal,      // necessary condition + delta < 1 at the probed t
  finite_group_suspected,   // necessary condition but delta = 1 at the probed t
};

struct UniversalityReport {
  int commutant_dim = 0;
  double delta = 0.0;
  int t = 0;
  UniversalityVerdict verdict = UniversalityVerdict::fail_necessary;
};

/// Two-step universality test: commutant dimension, then the expander norm of
/// the uniform measure at the supplied t. Heuristic mode never claims
/// universality outright (the certified degree t* = t(1/(2 sqrt 2), d) is far
/// beyond dense reach); certified mode computes t* and errors out carrying it.
UniversalityReport universality_check(const std::vector<UnitaryMatrix>& gates, int t,
                                      bool certified = false);

struct NetReport {
  std::vector<UnitaryMatrix> centers;
  double eps_target = 0.0;
  double covering_radius = 0.0;     // max over test draws of min center distance
  double covering_radius_hi = 0.0;  // extreme-value margin: max + (max - q99)
  long sample_count = 0;
  long words_tried = 0;
  bool failed = false;              // radius still above eps after the budget
};

/// Greedy word net: sample up to word_budget random words of length <= max_len
/// over the gate set (letters by ensemble weight, length uniform), keep a word
/// whose channel is at least eps/2 from every kept center, then measure the
/// empirical covering radius on Haar test draws. A radius above eps sets the
/// failed flag rather than raising.
NetReport build_net_from_words(const GateEnsemble& g, double eps, int max_len, long word_budget,
                               long test_samples, RngStream rng);

struct NetDesignEnsemble {
  GateEnsemble base;
  double eps = 0.0;
  int t = 0;
  double delta_measured = 0.0;
  double weight_error_bound = 0.0;  // sum of per-weight binomial stderr
};

/// First-cover ensemble of a net: Haar draws are assigned to the first center
/// (construction order) within eps; the cell frequencies become the weights,
/// zero-weight centers are dropped, and delta(nu, t) is measured. An uncovered
/// draw means the net is invalid at this eps and raises an error.
NetDesignEnsemble net_to_design(const NetReport& net, int t, long mc_samples, RngStream rng);

struct CoverageReport {
  double covering_radius = 0.0;
  double covering_radius_hi = 0.0;
  double eps = 0.0;
  bool pass = false;
  long sample_count = 0;
};

/// Empirical covering radius of the support of an ensemble.
CoverageReport design_to_net_check(const GateEnsemble& ens, double eps, long test_samples,
                                   RngStream rng);

/// Covering radius of an explicit center list over Haar draws.
CoverageReport covering_radius_mc(const std::vector<UnitaryMatrix>& centers, int d, double eps,
                                  long test_samples, RngStream rng);

}  // namespace designet

#endif
