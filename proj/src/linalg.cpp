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

#include "designet/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace designet {

namespace {

constexpr double kPi = 3.14159265358979323846;

long checked_product(long a, long b, const char* what) {
  if (a <= 0 || b <= 0 || a > (1L << 62) / b) {
    throw Error(Error::Kind::dimension_limit, std::string("index overflow in ") + what);
  }
  return a * b;
}

long pow_long(long base, long exp) {
  long r = 1;
  for (long i = 0; i < exp; ++i) r = checked_product(r, base, "power");
  return r;
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(MatC m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) {
    throw Error(Error::Kind::invalid_argument, "unitary matrix must be square with dim >= 2");
  }
  MatC err = m_.adjoint() * m_ - MatC::Identity(m_.rows(), m_.cols());
  double dev = err.cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw Error(Error::Kind::invalid_argument,
                "matrix is not unitary: max |U^dag U - I| = " + std::to_string(dev));
  }
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint()); }

UnitaryMatrix UnitaryMatrix::identity(int d) { return UnitaryMatrix(MatC::Identity(d, d)); }

ComplexOperator ComplexOperator::dense(MatC m) {
  ComplexOperator op;
  op.rows_ = m.rows();
  op.cols_ = m.cols();
  op.dense_ = std::move(m);
  return op;
}

ComplexOperator ComplexOperator::matrix_free(long rows, long cols, Apply apply, Apply apply_adjoint) {
  ComplexOperator op;
  op.rows_ = rows;
  op.cols_ = cols;
  op.apply_ = std::move(apply);
  op.apply_adjoint_ = std::move(apply_adjoint);
  return op;
}

const MatC& ComplexOperator::dense_matrix() const {
  if (!dense_) throw Error(Error::Kind::invalid_argument, "operator has no dense representation");
  return *dense_;
}

VecC ComplexOperator::apply(const VecC& x) const {
  if (x.size() != cols_) throw Error(Error::Kind::invalid_argument, "operator/vector size mismatch");
  if (apply_) return apply_(x);
  return *dense_ * x;
}

VecC ComplexOperator::apply_adjoint(const VecC& x) const {
  if (x.size() != rows_) throw Error(Error::Kind::invalid_argument, "operator/vector size mismatch");
  if (apply_adjoint_) return apply_adjoint_(x);
  return dense_->adjoint() * x;
}

ComplexOperator ComplexOperator::adjoint() const {
  if (dense_ && !apply_) return ComplexOperator::dense(dense_->adjoint());
  ComplexOperator op;
  op.rows_ = cols_;
  op.cols_ = rows_;
  op.apply_ = apply_adjoint_;
  op.apply_adjoint_ = apply_;
  if (dense_) op.dense_ = dense_->adjoint();
  return op;
}

MatC dense_kron(const MatC& a, const MatC& b) {
  long rows = checked_product(a.rows(), b.rows(), "kron rows");
  long cols = checked_product(a.cols(), b.cols(), "kron cols");
  if (rows > max_dense_dim() || cols > max_dense_dim()) {
    throw Error(Error::Kind::dimension_limit,
                "dense Kronecker product dimension " + std::to_string(std::max(rows, cols)) +
                    " exceeds limit " + std::to_string(max_dense_dim()));
  }
  MatC out(rows, cols);
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

MatC kron_power(const MatC& a, int t) {
  MatC out = MatC::Identity(1, 1);
  for (int i = 0; i < t; ++i) out = dense_kron(out, a);
  return out;
}

ComplexOperator kron(const ComplexOperator& a, const ComplexOperator& b) {
  long rows = checked_product(a.rows(), b.rows(), "kron rows");
  long cols = checked_product(a.cols(), b.cols(), "kron cols");
  if (a.has_dense() && b.has_dense() && rows <= max_dense_dim() && cols <= max_dense_dim()) {
    return ComplexOperator::dense(dense_kron(a.dense_matrix(), b.dense_matrix()));
  }
  // (A (x) B) x = vec(B X A^T) with X the column-major (cols_b x cols_a)
  // reshape of x; realized by applying A to rows and B to columns.
  auto make_apply = [](const ComplexOperator& a_, const ComplexOperator& b_, bool adj) {
    return [a_, b_, adj](const VecC& x) {
      long ca = adj ? a_.rows() : a_.cols();
      long cb = adj ? b_.rows() : b_.cols();
      long ra = adj ? a_.cols() : a_.rows();
      long rb = adj ? b_.cols() : b_.rows();
      Eigen::Map<const MatC> xmat(x.data(), cb, ca);
      MatC z(cb, ra);
      for (long r = 0; r < cb; ++r) {
        VecC row = xmat.row(r).transpose();
        z.row(r) = (adj ? a_.apply_adjoint(row) : a_.apply(row)).transpose();
      }
      VecC y(rb * ra);
      Eigen::Map<MatC> ymat(y.data(), rb, ra);
      for (long c = 0; c < ra; ++c) {
        ymat.col(c) = adj ? b_.apply_adjoint(z.col(c)) : b_.apply(z.col(c));
      }
      return y;
    };
  };
  return ComplexOperator::matrix_free(rows, cols, make_apply(a, b, false), make_apply(a, b, true));
}

double spectral_norm_dense(const MatC& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::BDCSVD<MatC> svd(a);
  return svd.singularValues()(0);
}

double spectral_norm(const ComplexOperator& a, NormMode mode, double tol, RngStream rng,
                     int max_iters) {
  if (mode == NormMode::dense) {
    return spectral_norm_dense(a.dense_matrix());
  }
  if (!a.has_callback() && !a.has_dense()) {
    throw Error(Error::Kind::invalid_argument, "iterative mode needs an application callback");
  }
  Sampler sampler(rng);
  VecC v(a.cols());
  for (long i = 0; i < v.size(); ++i) v(i) = sampler.complex_normal();
  v.normalize();

  double lambda = 0.0;
  double residual = 0.0;
  for (int iter = 0; iter < max_iters; ++iter) {
    VecC w = a.apply(v);
    VecC z = a.apply_adjoint(w);
    lambda = w.squaredNorm();
    residual = (z - lambda * v).norm();
    // Absolute slack keeps the certificate decidable for (near-)zero operators.
    if (residual <= tol * lambda + 1e-14) {
      return std::sqrt(lambda);
    }
    double nz = z.norm();
    if (nz == 0.0) return 0.0;
    v = z / nz;
  }
  throw ConvergenceError("spectral norm power iteration did not certify tolerance " +
                             std::to_string(tol) + " (best " + std::to_string(std::sqrt(lambda)) +
                             ", residual " + std::to_string(residual) + ")",
                         std::sqrt(lambda), residual);
}

std::vector<double> unitary_eigenphases(const UnitaryMatrix& u) {
  const MatC& m = u.matrix();
  Eigen::ComplexSchur<MatC> schur(m);
  if (schur.info() != Eigen::Success) {
    throw Error(Error::Kind::numeric, "Schur decomposition failed");
  }
  const MatC& t = schur.matrixT();
  const MatC& q = schur.matrixU();
  int d = u.dim();
  std::vector<double> phases(d);
  MatC diag = MatC::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    Complex lam = t(i, i);
    double p = std::atan2(lam.imag(), lam.real());
    if (p <= -kPi) p += 2.0 * kPi;
    phases[i] = p;
    diag(i, i) = std::polar(1.0, p);
  }
  double recon = (m - q * diag * q.adjoint()).norm();
  if (recon > 1e-8) {
    throw Error(Error::Kind::numeric,
                "eigenphase reconstruction error " + std::to_string(recon) + " exceeds 1e-8");
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

UnitaryMatrix haar_sample(int d, Sampler& sampler) {
  MatC g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = sampler.complex_normal();
  }
  Eigen::HouseholderQR<MatC> qr(g);
  MatC q = qr.householderQ();
  const MatC& qrmat = qr.matrixQR();
  for (int i = 0; i < d; ++i) {
    Complex r = qrmat(i, i);
    double a = std::abs(r);
    q.col(i) *= (a > 0.0) ? r / a : Complex(1.0, 0.0);
  }
  return UnitaryMatrix(std::move(q), 1e-8);
}

UnitaryMatrix haar_sample(int d, RngStream rng) {
  Sampler sampler(rng);
  return haar_sample(d, sampler);
}

int nullspace_dimension(const MatC& m, double tol) {
  Eigen::BDCSVD<MatC> svd(m);
  const auto& sv = svd.singularValues();
  long mn = std::min(m.rows(), m.cols());
  int deficit = static_cast<int>(m.cols() - mn);
  if (sv.size() == 0 || sv(0) == 0.0) return static_cast<int>(m.cols());
  int count = 0;
  for (long i = 0; i < sv.size(); ++i) {
    if (sv(i) < tol * sv(0)) ++count;
  }
  return count + deficit;
}

void apply_on_adjacent_slots(const VecC& x, VecC& y, long n_slots, long d, long slot, long span,
                             const MatC& m) {
  long mid = pow_long(d, span);
  if (m.rows() != mid || m.cols() != mid) {
    throw Error(Error::Kind::invalid_argument, "slot operator has wrong dimension");
  }
  long left = pow_long(d, slot);
  long right = pow_long(d, n_slots - slot - span);
  if (x.size() != left * mid * right) {
    throw Error(Error::Kind::invalid_argument, "vector/slot layout mismatch");
  }
  y.resize(x.size());
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  for (long l = 0; l < left; ++l) {
    Eigen::Map<const RowMat> xb(x.data() + l * mid * right, mid, right);
    Eigen::Map<RowMat> yb(y.data() + l * mid * right, mid, right);
    yb.noalias() = m * xb;
  }
}

namespace {

// Flat offsets of the sub-tensor spanned by `positions` (row-major digits,
// positions listed in the operator's own factor order).
std::vector<long> slot_offsets(long n_slots, long d, const std::vector<long>& positions) {
  std::vector<long> strides(n_slots);
  long s = 1;
  for (long i = n_slots - 1; i >= 0; --i) {
    strides[i] = s;
    s = checked_product(s, d, "slot strides");
  }
  long sub = pow_long(d, static_cast<long>(positions.size()));
  std::vector<long> offsets(sub, 0);
  for (long j = 0; j < sub; ++j) {
    long rem = j;
    for (long c = static_cast<long>(positions.size()) - 1; c >= 0; --c) {
      long digit = rem % d;
      rem /= d;
      offsets[j] += digit * strides[positions[c]];
    }
  }
  return offsets;
}

std::vector<long> rest_bases(long n_slots, long d, const std::vector<long>& positions) {
  std::vector<bool> in(n_slots, false);
  for (long p : positions) {
    if (p < 0 || p >= n_slots || in[p]) {
      throw Error(Error::Kind::invalid_argument, "invalid slot positions");
    }
    in[p] = true;
  }
  std::vector<long> strides(n_slots);
  long s = 1;
  for (long i = n_slots - 1; i >= 0; --i) {
    strides[i] = s;
    s *= d;
  }
  std::vector<long> rest_slots;
  for (long i = 0; i < n_slots; ++i) {
    if (!in[i]) rest_slots.push_back(i);
  }
  long n_rest = pow_long(d, static_cast<long>(rest_slots.size()));
  std::vector<long> bases(n_rest, 0);
  for (long r = 0; r < n_rest; ++r) {
    long rem = r;
    for (long c = static_cast<long>(rest_slots.size()) - 1; c >= 0; --c) {
      long digit = rem % d;
      rem /= d;
      bases[r] += digit * strides[rest_slots[c]];
    }
  }
  return bases;
}

}  // namespace

void apply_on_slots(const VecC& x, VecC& y, long n_slots, long d, const std::vector<long>& positions,
                    const MatC& m) {
  long sub = pow_long(d, static_cast<long>(positions.size()));
  if (m.rows() != sub || m.cols() != sub) {
    throw Error(Error::Kind::invalid_argument, "slot operator has wrong dimension");
  }
  std::vector<long> offsets = slot_offsets(n_slots, d, positions);
  std::vector<long> bases = rest_bases(n_slots, d, positions);
  y.resize(x.size());
  VecC xs(sub), ys(sub);
  for (long base : bases) {
    for (long j = 0; j < sub; ++j) xs(j) = x(base + offsets[j]);
    ys.noalias() = m * xs;
    for (long i = 0; i < sub; ++i) y(base + offsets[i]) = ys(i);
  }
}

MatC embed_on_slots(long n_slots, long d, const std::vector<long>& positions, const MatC& m) {
  long total = pow_long(d, n_slots);
  if (total > max_dense_dim()) {
    throw Error(Error::Kind::dimension_limit,
                "embedded operator dimension " + std::to_string(total) + " exceeds limit " +
                    std::to_string(max_dense_dim()));
  }
  long sub = pow_long(d, static_cast<long>(positions.size()));
  if (m.rows() != sub || m.cols() != sub) {
    throw Error(Error::Kind::invalid_argument, "slot operator has wrong dimension");
  }
  std::vector<long> offsets = slot_offsets(n_slots, d, positions);
  std::vector<long> bases = rest_bases(n_slots, d, positions);
  MatC out = MatC::Zero(total, total);
  for (long base : bases) {
    for (long i = 0; i < sub; ++i) {
      for (long j = 0; j < sub; ++j) {
        out(base + offsets[i], base + offsets[j]) = m(i, j);
      }
    }
  }
  return out;
}

}  // namespace designet
