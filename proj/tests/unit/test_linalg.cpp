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

#include <algorithm>
#include <cmath>

#include "designet/linalg.hpp"
#include "test_helpers.hpp"

using namespace designet;
using designet::testing::random_complex_matrix;
using designet::testing::random_complex_vector;

namespace {
constexpr double kPi = 3.14159265358979323846;

MatC diag2(Complex a, Complex b) {
  MatC m = MatC::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// Independent oracle: Kronecker product by direct per-entry expansion.
MatC kron_oracle(const MatC& a, const MatC& b) {
  MatC out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < out.rows(); ++i) {
    for (long j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}
}  // namespace

TEST_CASE("kron identity and diagonal cases") {
  CHECK((dense_kron(MatC::Identity(2, 2), MatC::Identity(2, 2)) - MatC::Identity(4, 4)).norm() ==
        doctest::Approx(0.0));
  MatC k = dense_kron(diag2(1.0, 2.0), diag2(3.0, 4.0));
  MatC expect = MatC::Zero(4, 4);
  expect(0, 0) = 3.0;
  expect(1, 1) = 4.0;
  expect(2, 2) = 6.0;
  expect(3, 3) = 8.0;
  CHECK((k - expect).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron factors through tensor products of vectors") {
  Sampler s(RngStream{11, 1});
  MatC a = random_complex_matrix(2, 2, s);
  MatC b = random_complex_matrix(2, 2, s);
  VecC x = random_complex_vector(2, s);
  VecC y = random_complex_vector(2, s);
  VecC xy(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) xy(i * 2 + j) = x(i) * y(j);
  }
  VecC lhs = dense_kron(a, b) * xy;
  VecC ax = a * x;
  VecC by = b * y;
  VecC rhs(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) rhs(i * 2 + j) = ax(i) * by(j);
  }
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((dense_kron(a, b) - kron_oracle(a, b)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("kron associativity on random small operators") {
  Sampler s(RngStream{11, 2});
  for (int rep = 0; rep < 5; ++rep) {
    MatC a = random_complex_matrix(2, 2, s);
    MatC b = random_complex_matrix(3, 3, s);
    MatC c = random_complex_matrix(2, 2, s);
    MatC lhs = dense_kron(dense_kron(a, b), c);
    MatC rhs = dense_kron(a, dense_kron(b, c));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("matrix-free kron agrees with dense action") {
  Sampler s(RngStream{11, 3});
  MatC a = random_complex_matrix(3, 3, s);
  MatC b = random_complex_matrix(4, 4, s);
  auto opa = ComplexOperator::dense(a);
  auto opb = ComplexOperator::dense(b);
  ComplexOperator mf = ComplexOperator::matrix_free(
      12, 12,
      [&](const VecC& x) { return kron(opa, opb).apply(x); },
      [&](const VecC& x) { return kron(opa, opb).apply_adjoint(x); });
  MatC full = dense_kron(a, b);
  for (int rep = 0; rep < 3; ++rep) {
    VecC x = random_complex_vector(12, s);
    CHECK((mf.apply(x) - full * x).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((mf.apply_adjoint(x) - full.adjoint() * x).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("dense kron enforces the configured dimension ceiling") {
  MatC big = MatC::Identity(100, 100);
  CHECK_THROWS_AS(dense_kron(big, big), Error);
}

TEST_CASE("spectral norm: diagonal, unitary, iterative vs dense") {
  CHECK(spectral_norm_dense(diag2(1.0, -3.0)) == doctest::Approx(3.0));
  Sampler s(RngStream{12, 1});
  UnitaryMatrix u = haar_sample(5, s);
  CHECK(spectral_norm_dense(u.matrix()) == doctest::Approx(1.0).epsilon(1e-10));

  MatC a = random_complex_matrix(8, 8, s);
  double dense = spectral_norm_dense(a);
  double iter =
      spectral_norm(ComplexOperator::dense(a), NormMode::iterative, 1e-10, RngStream{12, 2});
  CHECK(std::abs(dense - iter) < 1e-8 * dense);
}

TEST_CASE("spectral norm submultiplicativity") {
  Sampler s(RngStream{12, 3});
  for (int rep = 0; rep < 5; ++rep) {
    MatC a = random_complex_matrix(6, 6, s);
    MatC b = random_complex_matrix(6, 6, s);
    CHECK(spectral_norm_dense(a * b) <= spectral_norm_dense(a) * spectral_norm_dense(b) + 1e-10);
  }
}

TEST_CASE("unitary eigenphases on fixed inputs") {
  auto phases_i = unitary_eigenphases(UnitaryMatrix::identity(2));
  CHECK(phases_i[0] == doctest::Approx(0.0));
  CHECK(phases_i[1] == doctest::Approx(0.0));

  auto phases_d = unitary_eigenphases(UnitaryMatrix(diag2(1.0, Complex(0.0, 1.0))));
  CHECK(phases_d[0] == doctest::Approx(0.0));
  CHECK(phases_d[1] == doctest::Approx(kPi / 2.0));

  MatC h(2, 2);
  double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  // Characteristic polynomial of H is x^2 - 1: eigenvalues exactly +1, -1.
  auto phases_h = unitary_eigenphases(UnitaryMatrix(h));
  CHECK(phases_h[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(phases_h[1] == doctest::Approx(kPi).epsilon(1e-10));
}

TEST_CASE("eigenphases invariant under conjugation") {
  Sampler s(RngStream{13, 1});
  for (int rep = 0; rep < 5; ++rep) {
    UnitaryMatrix u = haar_sample(4, s);
    UnitaryMatrix v = haar_sample(4, s);
    UnitaryMatrix con(v.matrix() * u.matrix() * v.matrix().adjoint(), 1e-8);
    auto p1 = unitary_eigenphases(u);
    auto p2 = unitary_eigenphases(con);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(p1[i] - p2[i]) < 1e-8);
  }
}

TEST_CASE("eigenphases reject non-unitary input") {
  MatC bad(2, 2);
  bad << 1.0, 0.2, 0.0, 1.0;
  CHECK_THROWS_AS(UnitaryMatrix{bad}, Error);
}

TEST_CASE("haar sampler first and second moments at d=2") {
  Sampler s(RngStream{42, 7});
  const long n = 100000;
  double sum_abs2 = 0.0;
  Complex sum = 0.0;
  for (long i = 0; i < n; ++i) {
    UnitaryMatrix u = haar_sample(2, s);
    sum_abs2 += std::norm(u.matrix()(0, 0));
    sum += u.matrix()(0, 0);
  }
  CHECK(std::abs(sum_abs2 / n - 0.5) < 0.01);
  CHECK(std::abs(sum / static_cast<double>(n)) < 0.01);
}

TEST_CASE("haar eigenphase gap follows the squared-Vandermonde density at d=2") {
  // The circular distance u between the two eigenphases has density
  // proportional to |e^{i a} - e^{i b}|^2, i.e. CDF(u) = (u - sin u) / pi.
  Sampler s(RngStream{42, 8});
  const long n = 10000;
  std::vector<double> gaps(n);
  for (long i = 0; i < n; ++i) {
    auto p = unitary_eigenphases(haar_sample(2, s));
    double diff = std::abs(p[1] - p[0]);
    gaps[i] = std::min(diff, 2.0 * kPi - diff);
  }
  std::sort(gaps.begin(), gaps.end());
  double ks = 0.0;
  for (long i = 0; i < n; ++i) {
    double cdf = (gaps[i] - std::sin(gaps[i])) / kPi;
    ks = std::max(ks, std::abs(cdf - static_cast<double>(i + 1) / n));
    ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
  }
  CHECK(ks < 0.02);
}

TEST_CASE("haar left invariance in first and second moments") {
  Sampler s(RngStream{42, 9});
  UnitaryMatrix v = haar_sample(3, s);
  const long n = 20000;
  MatC mean1 = MatC::Zero(3, 3), mean2 = MatC::Zero(3, 3);
  double sec1 = 0.0, sec2 = 0.0;
  for (long i = 0; i < n; ++i) {
    MatC u = haar_sample(3, s).matrix();
    MatC vu = v.matrix() * u;
    mean1 += u;
    mean2 += vu;
    sec1 += std::norm(u(0, 0));
    sec2 += std::norm(vu(0, 0));
  }
  CHECK((mean1 / n).cwiseAbs().maxCoeff() < 0.03);
  CHECK((mean2 / n).cwiseAbs().maxCoeff() < 0.03);
  CHECK(std::abs(sec1 / n - sec2 / n) < 0.01);
}

TEST_CASE("nullspace dimension") {
  CHECK(nullspace_dimension(MatC::Zero(3, 3), 1e-10) == 3);
  CHECK(nullspace_dimension(MatC::Identity(3, 3), 1e-10) == 0);
  Sampler s(RngStream{14, 1});
  VecC a = random_complex_vector(4, s);
  VecC b = random_complex_vector(4, s);
  MatC outer = a * b.adjoint();
  CHECK(nullspace_dimension(outer, 1e-10) == 3);
}

TEST_CASE("rng streams are reproducible and block-disjoint") {
  Sampler a(RngStream{123, 5});
  Sampler b(RngStream{123, 5});
  for (int i = 0; i < 100; ++i) CHECK(a.bits() == b.bits());
  Sampler c(RngStream{123, 5}.block(0));
  Sampler d(RngStream{123, 5}.block(1));
  CHECK(c.bits() != d.bits());
}

TEST_CASE("slot application round-trips against dense embeddings") {
  Sampler s(RngStream{15, 1});
  const long n_slots = 4, d = 2;
  MatC m = random_complex_matrix(4, 4, s);
  // Adjacent pair (1,2): both code paths and the dense embedding must agree.
  MatC dense = embed_on_slots(n_slots, d, {1, 2}, m);
  MatC ref = dense_kron(dense_kron(MatC::Identity(2, 2), m), MatC::Identity(2, 2));
  CHECK((dense - ref).cwiseAbs().maxCoeff() < 1e-12);
  VecC x = random_complex_vector(16, s);
  VecC y1, y2;
  apply_on_adjacent_slots(x, y1, n_slots, d, 1, 2, m);
  apply_on_slots(x, y2, n_slots, d, {1, 2}, m);
  CHECK((y1 - dense * x).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((y2 - dense * x).cwiseAbs().maxCoeff() < 1e-12);

  // Non-adjacent positions (3, 0) exercise the permuted factor order.
  MatC dense30 = embed_on_slots(n_slots, d, {3, 0}, m);
  VecC y3;
  apply_on_slots(x, y3, n_slots, d, {3, 0}, m);
  CHECK((y3 - dense30 * x).cwiseAbs().maxCoeff() < 1e-12);
  // Swapping the factor order of M itself must match listing slots in order.
  MatC swap(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) swap(i * 2 + j, k * 2 + l) = m(j * 2 + i, l * 2 + k);
  MatC dense03 = embed_on_slots(n_slots, d, {0, 3}, swap);
  CHECK((dense30 - dense03).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("operator with both representations stays consistent") {
  Sampler s(RngStream{15, 2});
  MatC a = random_complex_matrix(5, 5, s);
  auto dense = ComplexOperator::dense(a);
  auto mf = ComplexOperator::matrix_free(
      5, 5, [a](const VecC& x) { return VecC(a * x); },
      [a](const VecC& x) { return VecC(a.adjoint() * x); });
  for (int rep = 0; rep < 4; ++rep) {
    VecC x = random_complex_vector(5, s);
    CHECK((dense.apply(x) - mf.apply(x)).cwiseAbs().maxCoeff() < 1e-10);
  }
}
