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

#include <doctest.h>

#include <cmath>

#include "designet/circuits.hpp"
#include "designet/gatesets.hpp"

using namespace designet;

namespace {

GateEnsemble identity_pair() { return GateEnsemble::singleton(UnitaryMatrix::identity(4)); }

GateEnsemble cz_ht() { return builtin_ensemble("cz-ht-2q"); }

}  // namespace

TEST_CASE("n=2 walk reproduces the plain ensemble moment operator") {
  auto src = TwoQuditSource::from_ensemble(2, cz_ht());
  for (int t : {1, 2}) {
    CircuitWalk w = local_walk(2, t, src);
    auto mo = moment_operator(cz_ht(), t);
    CHECK((w.op.dense_matrix() - mo.op.dense_matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("identity source walks are the identity with zero gap") {
  auto src = TwoQuditSource::from_ensemble(2, identity_pair());
  CircuitWalk loc = local_walk(3, 1, src);
  CHECK((loc.op.dense_matrix() - MatC::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(walk_gap(loc) == doctest::Approx(0.0).epsilon(1e-9));
  CircuitWalk par = parallel_walk(3, 1, src);
  CHECK((par.op.dense_matrix() - MatC::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Haar local and parallel walks have positive gaps at n=3") {
  auto src = TwoQuditSource::haar(2);
  double g_loc = walk_gap(local_walk(3, 1, src));
  double g_par = walk_gap(parallel_walk(3, 1, src));
  CHECK(g_loc > 0.0);
  CHECK(g_par > 0.0);
  MESSAGE("gap(local) = ", g_loc, ", gap(parallel) = ", g_par);
}

TEST_CASE("walk of sampled two-qubit Clifford products has a gap in (0, 1]") {
  // CNOT (C1 (x) C1) with independent single-qubit Cliffords mixes both
  // qubits; a handful of seeded draws already opens the gap. (The cz-ht set
  // is block-diagonal in the second qubit basis, so its t=1 gap is exactly 0.)
  auto cliff = builtin_ensemble("clifford1");
  Sampler s(RngStream{61, 2});
  std::vector<UnitaryMatrix> gates;
  for (int i = 0; i < 6; ++i) {
    const MatC& a = cliff.items()[s.uniform_index(cliff.size())].gate.matrix();
    const MatC& b = cliff.items()[s.uniform_index(cliff.size())].gate.matrix();
    gates.emplace_back(named_gate("CNOT").matrix() * dense_kron(a, b), 1e-8);
  }
  auto src = TwoQuditSource::from_ensemble(2, GateEnsemble::uniform(std::move(gates)));
  double g = walk_gap(local_walk(2, 1, src));
  CHECK(g > 0.0);
  CHECK(g <= 1.0 + 1e-9);
  // The cz-ht pair set preserves the second qubit's basis: zero gap.
  CHECK(walk_gap(local_walk(2, 1, TwoQuditSource::from_ensemble(2, cz_ht()))) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("dense and matrix-free gaps agree") {
  auto src = TwoQuditSource::haar(2);
  CircuitWalk w = local_walk(3, 1, src);
  double dense = walk_gap(w, NormMode::dense);
  double iter = walk_gap(w, NormMode::iterative, 1e-9, RngStream{61, 1});
  CHECK(std::abs(dense - iter) < 1e-6);
}

TEST_CASE("walk is Hermitian for a symmetric source") {
  auto sym = convolve(cz_ht(), inverse_ensemble(cz_ht()));
  auto src = TwoQuditSource::from_ensemble(2, sym);
  CircuitWalk w = local_walk(3, 1, src);
  const MatC& m = w.op.dense_matrix();
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("global projector absorbs the walk") {
  auto src = TwoQuditSource::from_ensemble(2, cz_ht());
  CircuitWalk w = local_walk(3, 1, src);
  auto proj = haar_moment_projector(8, 1);
  const MatC& t = w.op.dense_matrix();
  const MatC& p = proj.op.dense_matrix();
  CHECK((p * t - p).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((t * p - p).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("power norms contract as products") {
  auto src = TwoQuditSource::from_ensemble(2, cz_ht());
  CircuitWalk w = local_walk(3, 1, src);
  auto proj = haar_moment_projector(8, 1);
  MatC m = w.op.dense_matrix() - proj.op.dense_matrix();
  double n1 = spectral_norm_dense(m);
  double n2 = spectral_norm_dense(m * m);
  double n3 = spectral_norm_dense(m * m * m);
  CHECK(n2 <= n1 * n1 + 1e-8);
  CHECK(n3 <= n1 * n2 + 1e-8);
  // Symmetric source: the norm of the power is the power of the norm.
  auto sym_src = TwoQuditSource::from_ensemble(2, convolve(cz_ht(), inverse_ensemble(cz_ht())));
  CircuitWalk ws = local_walk(3, 1, sym_src);
  MatC ms = ws.op.dense_matrix() - proj.op.dense_matrix();
  double s1 = spectral_norm_dense(ms);
  CHECK(spectral_norm_dense(ms * ms) == doctest::Approx(s1 * s1).epsilon(1e-8));
  CHECK(spectral_norm_dense(ms * ms * ms) <= s1 * s1 * s1 + 1e-8);
}

TEST_CASE("n=2 walk satisfies the product identity for the norm") {
  auto src = TwoQuditSource::from_ensemble(2, cz_ht());
  CircuitWalk w = local_walk(2, 1, src);
  auto proj = haar_moment_projector(4, 1);
  MatC t = w.op.dense_matrix();
  MatC p = proj.op.dense_matrix();
  double delta = spectral_norm_dense(t - p);
  double delta_sym = spectral_norm_dense(t * t.adjoint() - p);
  CHECK(std::abs(delta_sym - delta * delta) < 1e-8);
}

TEST_CASE("local gap inequality for a non-symmetric gate set") {
  for (int n : {3, 4}) {
    auto r = verify_local_inequality(n, 1, cz_ht());
    CHECK(r.pass);
    CHECK(r.slack >= -1e-8);
  }
  auto trivial = verify_local_inequality(3, 1, identity_pair());
  CHECK(trivial.lhs == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(trivial.rhs == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(trivial.pass);
}

TEST_CASE("parallel gap inequality for a non-symmetric gate set") {
  for (int n : {3, 4}) {
    auto r = verify_parallel_inequality(n, 1, cz_ht());
    CHECK(r.pass);
  }
  CHECK(verify_parallel_inequality(3, 1, identity_pair()).pass);
}

TEST_CASE("gap against the Haar walk for a symmetric set") {
  auto sym = convolve(cz_ht(), inverse_ensemble(cz_ht()));
  auto r = verify_g_versus_haar(3, 1, sym, Layout::local);
  CHECK(r.pass);
  auto rid = verify_g_versus_haar(3, 1, identity_pair(), Layout::local);
  CHECK(rid.pass);
  CHECK(rid.lhs == doctest::Approx(0.0).epsilon(1e-9));
  // A non-symmetric set is rejected.
  CHECK_THROWS_AS(verify_g_versus_haar(3, 1, cz_ht(), Layout::local), Error);
}

TEST_CASE("empirical design depth stays within the predicted length") {
  auto w = local_walk(3, 1, TwoQuditSource::haar(2));
  CHECK(empirical_design_depth(w, 1.5) == 0);
  double g = walk_gap(w);
  double delta = 1e-3;
  long depth = empirical_design_depth(w, delta);
  long predicted = static_cast<long>(std::ceil(std::log(1.0 / delta) / g));
  CHECK(depth >= 1);
  CHECK(depth <= predicted);
  CHECK(empirical_design_depth(w, 2.0 * delta) <= depth);
  // Zero-gap walk is rejected.
  auto flat = local_walk(3, 1, TwoQuditSource::from_ensemble(2, identity_pair()));
  CHECK_THROWS_AS(empirical_design_depth(flat, 0.5), Error);
}
