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

#ifndef DESIGNET_CIRCUITS_HPP
#define DESIGNET_CIRCUITS_HPP

#include <optional>

#include "designet/moment_operators.hpp"

namespace designet {

enum class Layout { local, parallel };

/// Two-qudit gate source for random circuits: either a discrete ensemble on
/// C^(d^2) or the symbolic Haar measure on two qudits.
struct TwoQuditSource {
  int d = 2;
  std::optional<GateEnsemble> ensemble;

  static TwoQuditSource haar(int d);
  static TwoQuditSource from_ensemble(int d, GateEnsemble e);
  bool is_haar() const { return !ensemble.has_value(); }
};

/// Moment-walk operator of a random circuit on a line of n qudits.
///
/// Index layout (the contract every embedding follows): the operator acts on
/// row-major tensors with 2tn slots of size d, grouped as 2t copies of the
/// n-site register; copy c occupies slots [c n, (c+1) n), sites ascending, and
/// copies 0..t-1 carry the circuit unitary while copies t..2t-1 carry its
/// conjugate. A gate on sites (i, i+1) therefore touches slots c n + i and
/// c n + i + 1 for every copy c.
struct CircuitWalk {
  int n = 0;
  int d = 0;
  int t = 0;
  Layout layout = Layout::local;
  TwoQuditSource source;
  ComplexOperator op;

  long dim() const { return op.rows(); }
};

/// Local random circuit: a uniformly chosen neighboring pair (open line)
/// conjugated by a source gate; the walk is the average of the n-1 pair
/// moment operators.
CircuitWalk local_walk(int n, int t, const TwoQuditSource& src);

/// Parallel random circuit: with probability 1/2 the even layer
/// (0,1)(2,3)... or the odd layer (1,2)(3,4)..., each pair drawn
/// independently, so a layer's moment operator is the product of its
/// (commuting) pair moment operators. Needs n >= 3.
CircuitWalk parallel_walk(int n, int t, const TwoQuditSource& src);

/// Spectral gap 1 - ||T - P|| with P the Haar moment projector of the full
/// n-qudit register.
double walk_gap(const CircuitWalk& w, NormMode mode = NormMode::dense, double tol = 1e-8,
                RngStream rng = RngStream{0x5eed, 2});

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
};

/// g(loc(G) * loc(Gdag)) >= g(loc(G Gdag)) / (n-1).
InequalityReport verify_local_inequality(int n, int t, const GateEnsemble& g,
                                         NormMode mode = NormMode::dense,
                                         RngStream rng = RngStream{0x5eed, 3});

/// g(par(G) * par(Gdag)) >= g(par(G Gdag)) / 2.
InequalityReport verify_parallel_inequality(int n, int t, const GateEnsemble& g,
                                            NormMode mode = NormMode::dense,
                                            RngStream rng = RngStream{0x5eed, 3});

/// For a symmetric two-qudit set: g(walk(G), t) >= g(nu_G, t) g(walk(Haar), t).
/// Errors when the set is not closed under inverses.
InequalityReport verify_g_versus_haar(int n, int t, const GateEnsemble& g_sym, Layout layout,
                                      NormMode mode = NormMode::dense,
                                      RngStream rng = RngStream{0x5eed, 3});

/// Smallest l with ||T^l - P|| <= delta_target (binary search on operator
/// powers; the norm sequence is nonincreasing). Always at most
/// ceil(log(1/delta)/gap); errors when the gap is below 1e-6.
long empirical_design_depth(const CircuitWalk& w, double delta_target,
                            NormMode mode = NormMode::dense,
                            RngStream rng = RngStream{0x5eed, 4});

/// Dense matrix of a (small) operator, built column by column.
MatC densify(const ComplexOperator& op);

}  // namespace designet

#endif
