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

#include "designet/moment_operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <memory>
#include <numeric>

namespace designet {

namespace {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

GateEnsemble::GateEnsemble(int d, std::vector<WeightedGate> items) : d_(d), items_(std::move(items)) {
  if (items_.empty()) throw Error(Error::Kind::invalid_argument, "empty ensemble");
  double total = 0.0;
  for (const auto& it : items_) {
    if (it.weight <= 0.0) throw Error(Error::Kind::invalid_argument, "ensemble weights must be positive");
    if (it.gate.dim() != d_) throw Error(Error::Kind::invalid_argument, "ensemble gate dimension mismatch");
    total += it.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(Error::Kind::invalid_argument,
                "ensemble weights sum to " + std::to_string(total) + ", expected 1");
  }
}

GateEnsemble GateEnsemble::uniform(std::vector<UnitaryMatrix> gates) {
  if (gates.empty()) throw Error(Error::Kind::invalid_argument, "empty gate list");
  int d = gates.front().dim();
  // Weights must sum to 1 exactly within 1e-12; distribute the rounding rest.
  double w = 1.0 / static_cast<double>(gates.size());
  std::vector<WeightedGate> items;
  items.reserve(gates.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    double wi = (i + 1 == gates.size()) ? 1.0 - acc : w;
    acc += wi;
    items.push_back(WeightedGate{wi, std::move(gates[i])});
  }
  return GateEnsemble(d, std::move(items));
}

GateEnsemble GateEnsemble::singleton(UnitaryMatrix gate) {
  int d = gate.dim();
  std::vector<WeightedGate> items;
  items.push_back(WeightedGate{1.0, std::move(gate)});
  return GateEnsemble(d, std::move(items));
}

MomentOperator moment_operator(const GateEnsemble& ens, int t) {
  if (t < 1) throw Error(Error::Kind::invalid_argument, "moment order t must be >= 1");
  const int d = ens.dim();
  long dim = ipow(d, 2 * t);
  if (dim <= max_dense_dim()) {
    MatC m = MatC::Zero(dim, dim);
    for (const auto& it : ens.items()) {
      MatC b = kron_power(it.gate.matrix(), t);
      m += it.weight * dense_kron(b, b.conjugate());
    }
    return MomentOperator{d, t, ComplexOperator::dense(std::move(m))};
  }
  // Matrix-free: 2t factored Kronecker applications per gate, U on the first
  // t slots and conj(U) on the last t.
  struct GatePair {
    double w;
    MatC u;
    MatC uc;
  };
  auto gates = std::make_shared<std::vector<GatePair>>();
  for (const auto& it : ens.items()) {
    gates->push_back(GatePair{it.weight, it.gate.matrix(), it.gate.matrix().conjugate()});
  }
  auto make_apply = [gates, d, t, dim](bool adjoint) {
    return [gates, d, t, dim, adjoint](const VecC& x) {
      VecC acc = VecC::Zero(dim);
      VecC cur, next;
      for (const auto& g : *gates) {
        cur = x;
        for (int c = 0; c < 2 * t; ++c) {
          const MatC& base = (c < t) ? g.u : g.uc;
          MatC m = adjoint ? MatC(base.adjoint()) : base;
          apply_on_adjacent_slots(cur, next, 2 * t, d, c, 1, m);
          std::swap(cur, next);
        }
        acc += g.w * cur;
      }
      return acc;
    };
  };
  return MomentOperator{d, t,
                        ComplexOperator::matrix_free(dim, dim, make_apply(false), make_apply(true))};
}

namespace perm_detail {

std::vector<std::vector<int>> all_permutations(int t) {
  std::vector<int> p(t);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int cycles_of_relative(const std::vector<int>& pi, const std::vector<int>& sigma) {
  int t = static_cast<int>(pi.size());
  std::vector<int> pi_inv(t);
  for (int i = 0; i < t; ++i) pi_inv[pi[i]] = i;
  std::vector<int> rho(t);
  for (int i = 0; i < t; ++i) rho[i] = pi_inv[sigma[i]];
  std::vector<bool> seen(t, false);
  int cycles = 0;
  for (int i = 0; i < t; ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = rho[j];
    }
  }
  return cycles;
}

}  // namespace perm_detail

namespace {

// Flat indices (row-major vec) of the nonzero entries of the vectorized
// permutation operator P_pi on (C^d)^(t): for each column multi-index c the
// row multi-index r satisfies r[pi[k]] = c[k].
std::vector<long> perm_vector_indices(int d, int t, const std::vector<int>& pi, long big_d) {
  long sub = ipow(d, t);
  std::vector<long> strides(t);
  long s = 1;
  for (int i = t - 1; i >= 0; --i) {
    strides[i] = s;
    s *= d;
  }
  std::vector<long> out(sub);
  std::vector<int> digits(t);
  for (long c = 0; c < sub; ++c) {
    long rem = c;
    for (int i = t - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rem % d);
      rem /= d;
    }
    long row = 0;
    for (int k = 0; k < t; ++k) row += digits[k] * strides[pi[k]];
    out[c] = row * big_d + c;
  }
  return out;
}

MatR gram_pinv(int d, int t, const std::vector<std::vector<int>>& perms) {
  int n = static_cast<int>(perms.size());
  MatR gram(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      gram(a, b) = std::pow(static_cast<double>(d),
                            perm_detail::cycles_of_relative(perms[a], perms[b]));
    }
  }
  Eigen::SelfAdjointEigenSolver<MatR> es(gram);
  const VecR& ev = es.eigenvalues();
  double cut = 1e-10 * ev.cwiseAbs().maxCoeff();
  VecR inv = VecR::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (ev(i) > cut) inv(i) = 1.0 / ev(i);
  }
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

int max_projector_order() { return 6; }

MomentOperator haar_moment_projector(int d, int t) {
  if (t < 1) throw Error(Error::Kind::invalid_argument, "moment order t must be >= 1");
  if (t > max_projector_order()) {
    throw Error(Error::Kind::dimension_limit,
                "Haar projector order " + std::to_string(t) + " exceeds limit " +
                    std::to_string(max_projector_order()));
  }
  auto perms = perm_detail::all_permutations(t);
  long big_d = ipow(d, t);
  long dim = big_d * big_d;
  MatR ginv = gram_pinv(d, t, perms);
  std::vector<std::vector<long>> idx;
  idx.reserve(perms.size());
  for (const auto& p : perms) idx.push_back(perm_vector_indices(d, t, p, big_d));

  if (dim <= max_dense_dim()) {
    MatC m = MatC::Zero(dim, dim);
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = 0; b < perms.size(); ++b) {
        double w = ginv(a, b);
        if (std::abs(w) < 1e-18) continue;
        for (long i : idx[a]) {
          for (long j : idx[b]) m(i, j) += w;
        }
      }
    }
    return MomentOperator{d, t, ComplexOperator::dense(std::move(m))};
  }

  auto idx_ptr = std::make_shared<std::vector<std::vector<long>>>(std::move(idx));
  auto ginv_ptr = std::make_shared<MatR>(std::move(ginv));
  auto apply = [idx_ptr, ginv_ptr, dim](const VecC& x) {
    int n = static_cast<int>(idx_ptr->size());
    VecC overlaps(n);
    for (int a = 0; a < n; ++a) {
      Complex s = 0.0;
      for (long i : (*idx_ptr)[a]) s += x(i);
      overlaps(a) = s;
    }
    VecC coeff = (*ginv_ptr).cast<Complex>() * overlaps;
    VecC y = VecC::Zero(dim);
    for (int a = 0; a < n; ++a) {
      for (long i : (*idx_ptr)[a]) y(i) += coeff(a);
    }
    return y;
  };
  // Orthogonal projector, so adjoint application coincides with application.
  return MomentOperator{d, t, ComplexOperator::matrix_free(dim, dim, apply, apply)};
}

double expander_norm(const GateEnsemble& ens, int t, NormMode mode, double tol, RngStream rng) {
  MomentOperator tn = moment_operator(ens, t);
  MomentOperator proj = haar_moment_projector(ens.dim(), t);
  if (mode == NormMode::dense) {
    if (!tn.op.has_dense() || !proj.op.has_dense()) {
      throw Error(Error::Kind::dimension_limit,
                  "dense expander norm infeasible at dimension d^(2t); use iterative mode");
    }
    return spectral_norm_dense(tn.op.dense_matrix() - proj.op.dense_matrix());
  }
  long dim = tn.op.rows();
  auto apply = [tn, proj](const VecC& x) { return VecC(tn.op.apply(x) - proj.op.apply(x)); };
  auto apply_adj = [tn, proj](const VecC& x) {
    return VecC(tn.op.apply_adjoint(x) - proj.op.apply_adjoint(x));
  };
  ComplexOperator diff = ComplexOperator::matrix_free(dim, dim, apply, apply_adj);
  return spectral_norm(diff, NormMode::iterative, tol, rng);
}

double gap(const GateEnsemble& ens, int t, NormMode mode, double tol, RngStream rng) {
  return 1.0 - expander_norm(ens, t, mode, tol, rng);
}

GateEnsemble convolve(const GateEnsemble& a, const GateEnsemble& b, bool dedup) {
  if (a.dim() != b.dim()) throw Error(Error::Kind::invalid_argument, "ensemble dimension mismatch");
  const int d = a.dim();
  std::vector<WeightedGate> items;
  for (const auto& ga : a.items()) {
    for (const auto& gb : b.items()) {
      MatC prod = ga.gate.matrix() * gb.gate.matrix();
      double w = ga.weight * gb.weight;
      bool merged = false;
      if (dedup) {
        for (auto& kept : items) {
          Complex tr = (kept.gate.matrix().adjoint() * prod).trace();
          if (std::abs(std::abs(tr) - static_cast<double>(d)) < 1e-9) {
            kept.weight += w;
            merged = true;
            break;
          }
        }
      }
      if (!merged) items.push_back(WeightedGate{w, UnitaryMatrix(std::move(prod), 1e-8)});
    }
  }
  return GateEnsemble(d, std::move(items));
}

GateEnsemble inverse_ensemble(const GateEnsemble& ens) {
  std::vector<WeightedGate> items;
  items.reserve(ens.items().size());
  for (const auto& it : ens.items()) {
    items.push_back(WeightedGate{it.weight, it.gate.adjoint()});
  }
  return GateEnsemble(ens.dim(), std::move(items));
}

GateEnsemble convolution_power(const GateEnsemble& ens, int l, bool dedup) {
  if (l < 1) throw Error(Error::Kind::invalid_argument, "convolution power must be >= 1");
  GateEnsemble out = ens;
  for (int i = 1; i < l; ++i) out = convolve(out, ens, dedup);
  return out;
}

}  // namespace designet
