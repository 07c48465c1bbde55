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

#include "designet/circuits.hpp"

#include <cmath>
#include <memory>

namespace designet {

namespace {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (1L << 56) / base) {
      throw Error(Error::Kind::dimension_limit, "circuit dimension overflows the index space");
    }
    r *= base;
  }
  return r;
}

// Pair moment operator applied on sites (i, i+1): per source gate W, apply W
// (copies 0..t-1) and conj(W) (copies t..2t-1) on the adjacent slot pair; for
// the Haar source, apply the two-qudit Haar projector jointly on all 4t pair
// slots.
struct PairAction {
  int n, d, t;
  std::vector<std::pair<double, MatC>> gates;  // weight, d^2 x d^2; empty for Haar
  MatC haar_projector;                         // d^(4t) square when gates empty

  VecC apply(int site, const VecC& x, bool adjoint) const {
    long n_slots = 2L * t * n;
    if (!gates.empty()) {
      VecC acc = VecC::Zero(x.size());
      VecC cur, next;
      for (const auto& [w, g] : gates) {
        cur = x;
        for (int c = 0; c < 2 * t; ++c) {
          MatC m = (c < t) ? g : g.conjugate();
          if (adjoint) m.adjointInPlace();
          apply_on_adjacent_slots(cur, next, n_slots, d, static_cast<long>(c) * n + site, 2, m);
          std::swap(cur, next);
        }
        acc += w * cur;
      }
      return acc;
    }
    // Haar projector: self-adjoint, slot list runs copy-major over the pair.
    std::vector<long> positions;
    positions.reserve(4 * t);
    for (int c = 0; c < 2 * t; ++c) {
      positions.push_back(static_cast<long>(c) * n + site);
      positions.push_back(static_cast<long>(c) * n + site + 1);
    }
    VecC y;
    apply_on_slots(x, y, n_slots, d, positions, haar_projector);
    return y;
  }
};

std::shared_ptr<PairAction> make_pair_action(int n, int t, const TwoQuditSource& src) {
  auto pa = std::make_shared<PairAction>();
  pa->n = n;
  pa->d = src.d;
  pa->t = t;
  if (src.is_haar()) {
    auto proj = haar_moment_projector(src.d * src.d, t);
    if (!proj.op.has_dense()) {
      throw Error(Error::Kind::dimension_limit,
                  "two-qudit Haar projector needs a dense representation at this (d, t)");
    }
    pa->haar_projector = proj.op.dense_matrix();
  } else {
    for (const auto& it : src.ensemble->items()) {
      pa->gates.emplace_back(it.weight, it.gate.matrix());
    }
  }
  return pa;
}

CircuitWalk make_walk(int n, int t, const TwoQuditSource& src, Layout layout) {
  if (t < 1) throw Error(Error::Kind::invalid_argument, "moment order t must be >= 1");
  if (layout == Layout::local && n < 2) {
    throw Error(Error::Kind::invalid_argument, "local walk needs n >= 2");
  }
  if (layout == Layout::parallel && n < 3) {
    throw Error(Error::Kind::invalid_argument, "parallel walk needs n >= 3");
  }
  if (src.ensemble && src.ensemble->dim() != src.d * src.d) {
    throw Error(Error::Kind::invalid_argument, "two-qudit source must act on dimension d^2");
  }
  long dim = ipow(src.d, 2 * t * n);
  auto pa = make_pair_action(n, t, src);

  auto apply = [pa, n, layout, dim](const VecC& x, bool adjoint) {
    if (layout == Layout::local) {
      VecC acc = VecC::Zero(dim);
      for (int i = 0; i + 1 < n; ++i) acc += pa->apply(i, x, adjoint);
      return VecC(acc / static_cast<double>(n - 1));
    }
    VecC even = x;
    for (int i = 0; i + 1 < n; i += 2) even = pa->apply(i, even, adjoint);
    VecC odd = x;
    for (int i = 1; i + 1 < n; i += 2) odd = pa->apply(i, odd, adjoint);
    return VecC(0.5 * (even + odd));
  };

  CircuitWalk w;
  w.n = n;
  w.d = src.d;
  w.t = t;
  w.layout = layout;
  w.source = src;
  ComplexOperator mf = ComplexOperator::matrix_free(
      dim, dim, [apply](const VecC& x) { return apply(x, false); },
      [apply](const VecC& x) { return apply(x, true); });
  if (dim <= max_dense_dim()) {
    w.op = ComplexOperator::dense(densify(mf));
  } else {
    w.op = std::move(mf);
  }
  return w;
}

ComplexOperator global_projector(const CircuitWalk& w) {
  return haar_moment_projector(ipow(w.d, w.n), w.t).op;
}

double norm_against_projector(const ComplexOperator& op, const ComplexOperator& proj, NormMode mode,
                              double tol, RngStream rng) {
  if (mode == NormMode::dense) {
    if (!op.has_dense() || !proj.has_dense()) {
      throw Error(Error::Kind::dimension_limit, "dense mode infeasible at this dimension");
    }
    return spectral_norm_dense(op.dense_matrix() - proj.dense_matrix());
  }
  long dim = op.rows();
  auto diff = ComplexOperator::matrix_free(
      dim, dim, [op, proj](const VecC& x) { return VecC(op.apply(x) - proj.apply(x)); },
      [op, proj](const VecC& x) { return VecC(op.apply_adjoint(x) - proj.apply_adjoint(x)); });
  return spectral_norm(diff, NormMode::iterative, tol, rng);
}

}  // namespace

TwoQuditSource TwoQuditSource::haar(int d) {
  TwoQuditSource s;
  s.d = d;
  return s;
}

TwoQuditSource TwoQuditSource::from_ensemble(int d, GateEnsemble e) {
  if (e.dim() != d * d) {
    throw Error(Error::Kind::invalid_argument, "two-qudit source must act on dimension d^2");
  }
  TwoQuditSource s;
  s.d = d;
  s.ensemble = std::move(e);
  return s;
}

MatC densify(const ComplexOperator& op) {
  if (op.has_dense()) return op.dense_matrix();
  if (op.rows() > max_dense_dim()) {
    throw Error(Error::Kind::dimension_limit, "operator too large to densify");
  }
  MatC m(op.rows(), op.cols());
  VecC e = VecC::Zero(op.cols());
  for (long j = 0; j < op.cols(); ++j) {
    e(j) = 1.0;
    m.col(j) = op.apply(e);
    e(j) = 0.0;
  }
  return m;
}

CircuitWalk local_walk(int n, int t, const TwoQuditSource& src) {
  return make_walk(n, t, src, Layout::local);
}

CircuitWalk parallel_walk(int n, int t, const TwoQuditSource& src) {
  return make_walk(n, t, src, Layout::parallel);
}

double walk_gap(const CircuitWalk& w, NormMode mode, double tol, RngStream rng) {
  return 1.0 - norm_against_projector(w.op, global_projector(w), mode, tol, rng);
}

InequalityReport verify_local_inequality(int n, int t, const GateEnsemble& g, NormMode mode,
                                         RngStream rng) {
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(g.dim()))));
  auto src = TwoQuditSource::from_ensemble(d, g);
  CircuitWalk walk_g = local_walk(n, t, src);
  ComplexOperator proj = global_projector(walk_g);

  double lhs;
  if (mode == NormMode::dense && walk_g.op.has_dense()) {
    MatC tm = walk_g.op.dense_matrix();
    lhs = 1.0 - spectral_norm_dense(tm * tm.adjoint() - proj.dense_matrix());
  } else {
    long dim = walk_g.op.rows();
    ComplexOperator op = walk_g.op;
    auto prod = ComplexOperator::matrix_free(
        dim, dim,
        [op, proj](const VecC& x) { return VecC(op.apply(op.apply_adjoint(x)) - proj.apply(x)); },
        [op, proj](const VecC& x) {
          return VecC(op.apply(op.apply_adjoint(x)) - proj.apply_adjoint(x));
        });
    lhs = 1.0 - spectral_norm(prod, NormMode::iterative, 1e-8, rng);
  }

  auto src_sym = TwoQuditSource::from_ensemble(d, convolve(g, inverse_ensemble(g)));
  double rhs_gap = walk_gap(local_walk(n, t, src_sym), mode, 1e-8, rng);
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs_gap / static_cast<double>(n - 1);
  r.slack = r.lhs - r.rhs;
  r.pass = r.slack >= -1e-8;
  return r;
}

InequalityReport verify_parallel_inequality(int n, int t, const GateEnsemble& g, NormMode mode,
                                            RngStream rng) {
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(g.dim()))));
  auto src = TwoQuditSource::from_ensemble(d, g);
  CircuitWalk walk_g = parallel_walk(n, t, src);
  ComplexOperator proj = global_projector(walk_g);

  double lhs;
  if (mode == NormMode::dense && walk_g.op.has_dense()) {
    MatC tm = walk_g.op.dense_matrix();
    lhs = 1.0 - spectral_norm_dense(tm * tm.adjoint() - proj.dense_matrix());
  } else {
    long dim = walk_g.op.rows();
    ComplexOperator op = walk_g.op;
    auto prod = ComplexOperator::matrix_free(
        dim, dim,
        [op, proj](const VecC& x) { return VecC(op.apply(op.apply_adjoint(x)) - proj.apply(x)); },
        [op, proj](const VecC& x) {
          return VecC(op.apply(op.apply_adjoint(x)) - proj.apply_adjoint(x));
        });
    lhs = 1.0 - spectral_norm(prod, NormMode::iterative, 1e-8, rng);
  }

  auto src_sym = TwoQuditSource::from_ensemble(d, convolve(g, inverse_ensemble(g)));
  double rhs_gap = walk_gap(parallel_walk(n, t, src_sym), mode, 1e-8, rng);
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = 0.5 * rhs_gap;
  r.slack = r.lhs - r.rhs;
  r.pass = r.slack >= -1e-8;
  return r;
}

InequalityReport verify_g_versus_haar(int n, int t, const GateEnsemble& g_sym, Layout layout,
                                      NormMode mode, RngStream rng) {
  // Closure under inverses up to global phase, with matching weights.
  const auto& items = g_sym.items();
  for (const auto& a : items) {
    bool found = false;
    MatC adj = a.gate.matrix().adjoint();
    for (const auto& b : items) {
      Complex tr = (b.gate.matrix().adjoint() * adj).trace();
      if (std::abs(std::abs(tr) - static_cast<double>(g_sym.dim())) < 1e-9 &&
          std::abs(a.weight - b.weight) < 1e-12) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(Error::Kind::precondition, "gate set is not closed under inverses");
    }
  }
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(g_sym.dim()))));
  auto make = (layout == Layout::local) ? local_walk : parallel_walk;
  double lhs = walk_gap(make(n, t, TwoQuditSource::from_ensemble(d, g_sym)), mode, 1e-8, rng);
  double g_ens = gap(g_sym, t, NormMode::dense);
  double g_haar = walk_gap(make(n, t, TwoQuditSource::haar(d)), mode, 1e-8, rng);
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = g_ens * g_haar;
  r.slack = r.lhs - r.rhs;
  r.pass = r.slack >= -1e-8;
  return r;
}

long empirical_design_depth(const CircuitWalk& w, double delta_target, NormMode mode,
                            RngStream rng) {
  if (delta_target >= 1.0) return 0;
  if (delta_target <= 0.0) throw Error(Error::Kind::invalid_argument, "delta target must be > 0");
  double g = walk_gap(w, mode, 1e-9, rng);
  if (g < 1e-6) {
    throw Error(Error::Kind::precondition, "walk gap below 1e-6; depth search is unbounded");
  }
  long l_max = static_cast<long>(std::ceil(std::log(1.0 / delta_target) / g - 1e-12));

  ComplexOperator proj = global_projector(w);
  MatC m_dense;
  ComplexOperator op = w.op;
  bool dense = (mode == NormMode::dense && op.has_dense() && proj.has_dense());
  if (dense) m_dense = op.dense_matrix() - proj.dense_matrix();

  auto norm_power = [&](long l) {
    if (dense) {
      MatC acc = m_dense;
      for (long i = 1; i < l; ++i) acc = m_dense * acc;
      return spectral_norm_dense(acc);
    }
    long dim = op.rows();
    auto powered = ComplexOperator::matrix_free(
        dim, dim,
        [op, proj, l](const VecC& x) {
          VecC cur = x;
          for (long i = 0; i < l; ++i) cur = op.apply(cur) - proj.apply(cur);
          return cur;
        },
        [op, proj, l](const VecC& x) {
          VecC cur = x;
          for (long i = 0; i < l; ++i) cur = op.apply_adjoint(cur) - proj.apply_adjoint(cur);
          return cur;
        });
    return spectral_norm(powered, NormMode::iterative, 1e-8, rng);
  };

  // ||(T-P)^l|| is nonincreasing in l (||T-P|| <= 1), so bisection applies.
  long lo = 1, hi = l_max;
  if (norm_power(1) <= delta_target) return 1;
  while (lo + 1 < hi) {
    long mid = (lo + hi) / 2;
    if (norm_power(mid) <= delta_target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace designet
