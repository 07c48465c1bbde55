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

#ifndef DESIGNET_LINALG_HPP
#define DESIGNET_LINALG_HPP

#include <functional>
#include <optional>
#include <vector>

#include "designet/common.hpp"
#include "designet/rng.hpp"

namespace designet {

/// Unitary operator on C^d, validated on construction: max-entry norm of
/// U†U - I must stay below tol (default 1e-10) and d >= 2. Up to a global
/// phase, an instance represents a unitary channel.
class UnitaryMatrix {
public:
  explicit UnitaryMatrix(MatC m, double tol = 1e-10);

  int dim() const { return static_cast<int>(m_.rows()); }
  const MatC& matrix() const { return m_; }

  UnitaryMatrix adjoint() const;
  static UnitaryMatrix identity(int d);

private:
  MatC m_;
};

/// Linear operator on complex vectors, dense or matrix-free (or both). When
/// both representations exist they must agree; tests probe that with random
/// vectors. Matrix-free operators carry their adjoint action as well, which
/// the iterative spectral norm needs.
class ComplexOperator {
public:
  using Apply = std::function<VecC(const VecC&)>;

  static ComplexOperator dense(MatC m);
  static ComplexOperator matrix_free(long rows, long cols, Apply apply, Apply apply_adjoint);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  bool has_dense() const { return dense_.has_value(); }
  bool has_callback() const { return static_cast<bool>(apply_); }
  const MatC& dense_matrix() const;

  VecC apply(const VecC& x) const;
  VecC apply_adjoint(const VecC& x) const;

  ComplexOperator adjoint() const;

private:
  long rows_ = 0;
  long cols_ = 0;
  std::optional<MatC> dense_;
  Apply apply_;
  Apply apply_adjoint_;
};

enum class NormMode { dense, iterative };

/// Dense Kronecker product.
MatC dense_kron(const MatC& a, const MatC& b);

/// t-fold Kronecker power.
MatC kron_power(const MatC& a, int t);

/// Kronecker product of two operators. Dense inputs whose product dimension
/// stays within max_dense_dim() produce a dense result; otherwise the result
/// is matrix-free (requires callback-capable inputs).
ComplexOperator kron(const ComplexOperator& a, const ComplexOperator& b);

/// Largest singular value. Dense mode computes the full SVD. Iterative mode
/// runs power iteration on A†A from a random start drawn off rng, and accepts
/// only when the Rayleigh residual certifies relative error <= tol; otherwise
/// it throws ConvergenceError carrying the best estimate.
double spectral_norm(const ComplexOperator& a, NormMode mode, double tol = 1e-8,
                     RngStream rng = RngStream{0x5eed, 0}, int max_iters = 10000);

double spectral_norm_dense(const MatC& a);

/// Eigenphases of a unitary, principal branch (-pi, pi], sorted ascending.
/// The Schur form must reconstruct U to 1e-8 or an error is raised.
std::vector<double> unitary_eigenphases(const UnitaryMatrix& u);

/// Haar-distributed unitary: complex Ginibre, QR, then the phase of each
/// diagonal entry of R is absorbed into Q so the law is exactly Haar.
UnitaryMatrix haar_sample(int d, Sampler& sampler);
UnitaryMatrix haar_sample(int d, RngStream rng);

/// Number of singular values below tol times the largest one (all of them for
/// the zero matrix), plus any dimension deficit for wide matrices; equals
/// dim ker(M) for matrices with at least as many rows as columns.
int nullspace_dimension(const MatC& m, double tol);

// -- Tensor-slot machinery ---------------------------------------------------
//
// Vectors of length prod(dims) are treated as row-major tensors: the slot s
// digit of flat index i is (i / stride(s)) % dims[s] with
// stride(s) = prod(dims[s+1..]). Every embedding in the library goes through
// these two helpers, and tests round-trip the index maps.

/// y = (M on slot `slot`) x for a tensor of `n_slots` slots of size d each.
/// M must be m x m with m == d^(span) acting on `span` adjacent slots starting
/// at `slot` (adjacent slots have contiguous digits in row-major order).
void apply_on_adjacent_slots(const VecC& x, VecC& y, long n_slots, long d, long slot, long span,
                             const MatC& m);

/// y = (M on the listed slots, identity elsewhere) x; `positions` gives the
/// tensor slots that form M's factors, in M's own factor order. Slots have
/// uniform size d; M is d^k x d^k for k = positions.size().
void apply_on_slots(const VecC& x, VecC& y, long n_slots, long d, const std::vector<long>& positions,
                    const MatC& m);

/// Dense embedding of M (acting on the listed slots) into the full space of
/// n_slots slots of size d. Only valid when d^n_slots <= max_dense_dim().
MatC embed_on_slots(long n_slots, long d, const std::vector<long>& positions, const MatC& m);

}  // namespace designet

#endif
