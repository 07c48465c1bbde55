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

#include "designet/random_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace designet {

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrtHalf = std::sqrt(0.5);

double vandermonde_sq(const VecR& x) {
  double prod = 1.0;
  for (long i = 0; i < x.size(); ++i) {
    for (long j = i + 1; j < x.size(); ++j) {
      double diff = x(i) - x(j);
      prod *= diff * diff;
    }
  }
  return prod;
}

double superfactorial(int d) {
  double sf = 1.0;
  double fact = 1.0;
  for (int k = 1; k <= d; ++k) {
    fact *= k;
    sf *= fact;
  }
  return sf;
}

double factorial(int d) {
  double f = 1.0;
  for (int k = 2; k <= d; ++k) f *= k;
  return f;
}
}  // namespace

MatC gue_sample(int d, Sampler& sampler) {
  MatC a(d, d);
  for (int i = 0; i < d; ++i) {
    a(i, i) = sampler.normal();
    for (int j = i + 1; j < d; ++j) {
      Complex z = kSqrtHalf * sampler.complex_normal();
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  return a;
}

MatC gue_sample(int d, RngStream rng) {
  Sampler sampler(rng);
  return gue_sample(d, sampler);
}

GueTailReport gue_tail_mc(int d, double a, long n_samples, RngStream rng) {
  if (a < 0.0) throw Error(Error::Kind::invalid_argument, "tail offset a must be >= 0");
  long hits = 0;
  const long blocks = 64;
  double scale = std::sqrt(static_cast<double>(d));
  for (long b = 0; b < blocks; ++b) {
    long n_b = n_samples / blocks + (b < n_samples % blocks ? 1 : 0);
    Sampler sampler(rng.block(b));
    for (long i = 0; i < n_b; ++i) {
      MatC m = gue_sample(d, sampler);
      Eigen::SelfAdjointEigenSolver<MatC> es(m, Eigen::EigenvaluesOnly);
      double norm = es.eigenvalues().cwiseAbs().maxCoeff();
      if (norm / scale >= 2.0 + a) ++hits;
    }
  }
  GueTailReport r;
  r.probability = wilson_interval(hits, n_samples);
  r.bound = 0.5 * std::exp(-0.5 * d * a * a);
  return r;
}

McEstimate mehta_mc(int d, long n_samples, RngStream rng) {
  if (d < 1 || d > 4) {
    throw Error(Error::Kind::precondition,
                "Mehta Monte Carlo supported for d in 1..4 (variance explodes beyond)");
  }
  double sum = 0.0, sum_sq = 0.0;
  const long blocks = 64;
  for (long b = 0; b < blocks; ++b) {
    long n_b = n_samples / blocks + (b < n_samples % blocks ? 1 : 0);
    Sampler sampler(rng.block(b));
    double bs = 0.0, bss = 0.0;
    for (long i = 0; i < n_b; ++i) {
      VecR x(d);
      for (int k = 0; k < d; ++k) x(k) = sampler.normal();
      double v = vandermonde_sq(x);
      bs += v;
      bss += v * v;
    }
    sum += bs;
    sum_sq += bss;
  }
  return mean_interval(sum, sum_sq, n_samples);
}

double mehta_exact(int d) {
  double prod = 1.0;
  double fact = 1.0;
  for (int k = 1; k <= d; ++k) {
    fact *= k;
    prod *= fact;
  }
  return prod;
}

GaussianVandermondeReport gaussian_vandermonde_tail_mc(int d, double sigma, double r,
                                                       long n_samples, RngStream rng) {
  if (sigma <= 0.0) throw Error(Error::Kind::invalid_argument, "sigma must be positive");
  if (sigma > r / (4.0 * std::sqrt(static_cast<double>(d)))) {
    throw Error(Error::Kind::precondition, "tail bound requires sigma <= r / (4 sqrt(d))");
  }
  GaussianVandermondeReport rep;
  double exponent = static_cast<double>(d) * (d - 1);
  double c_d = dimension_constants(d).c_d;
  double prefac = std::pow(sigma, exponent) / (std::pow(2.0 * kPi, d) * factorial(d));

  // Full integral: x = sigma z with z standard normal, so the integral is
  // sigma^(d(d-1)) E[prod (z_i - z_j)^2] / ((2pi)^d d!).
  {
    double sum = 0.0, sum_sq = 0.0;
    const long blocks = 64;
    for (long b = 0; b < blocks; ++b) {
      long n_b = n_samples / blocks + (b < n_samples % blocks ? 1 : 0);
      Sampler sampler(rng.block(b));
      for (long i = 0; i < n_b; ++i) {
        VecR z(d);
        for (int k = 0; k < d; ++k) z(k) = sampler.normal();
        double v = prefac * vandermonde_sq(z);
        sum += v;
        sum_sq += v * v;
      }
    }
    rep.full_integral = mean_interval(sum, sum_sq, n_samples);
  }
  rep.full_exact = c_d * std::pow(sigma, exponent);

  // Tail outside [-r, r]^d reduces exactly to the GUE norm probability:
  // C_d sigma^(d(d-1)) Pr(||A||_inf >= r / sigma).
  {
    long hits = 0;
    const long blocks = 64;
    for (long b = 0; b < blocks; ++b) {
      long n_b = n_samples / blocks + (b < n_samples % blocks ? 1 : 0);
      Sampler sampler(rng.block(b + blocks));
      for (long i = 0; i < n_b; ++i) {
        MatC m = gue_sample(d, sampler);
        Eigen::SelfAdjointEigenSolver<MatC> es(m, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().cwiseAbs().maxCoeff() >= r / sigma) ++hits;
      }
    }
    McEstimate p = wilson_interval(hits, n_samples);
    double scale = c_d * std::pow(sigma, exponent);
    rep.tail = p;
    rep.tail.estimate *= scale;
    rep.tail.ci_lo *= scale;
    rep.tail.ci_hi *= scale;
    rep.tail.stderr_ *= scale;
  }
  rep.tail_bound = 0.5 * c_d * std::pow(sigma, exponent) * std::exp(-0.25 * r * r / (sigma * sigma));
  return rep;
}

DimensionConstants dimension_constants(int d) {
  if (d < 2) throw Error(Error::Kind::invalid_argument, "dimension constants need d >= 2");
  if (d > 12) {
    throw Error(Error::Kind::dimension_limit,
                "dimension constants overflow double precision beyond d = 12");
  }
  DimensionConstants c;
  double sf = superfactorial(d);
  double dfact = factorial(d);
  c.c_d = sf / (std::pow(2.0 * kPi, d) * dfact);
  c.a_d = (1.0 / sf) * std::sqrt(std::pow(2.0, static_cast<double>(d) * (d - 1)) *
                                 std::pow(kPi, d / 2.0) * 2.0 * std::sqrt(2.0 * kPi) * dfact /
                                 std::tgamma(d / 2.0));
  c.b_d = std::sqrt(dfact) * std::pow(2.0, d * (d + 1) / 2.0) /
          (std::pow(2.0, static_cast<double>(d) * d) * sf *
           std::pow(2.0 / kPi, static_cast<double>(d) * (d - 1)));
  return c;
}

double max_gauss_poly(int k, double p) {
  if (p <= 0.0) throw Error(Error::Kind::invalid_argument, "p must be positive");
  if (k < 0) throw Error(Error::Kind::invalid_argument, "k must be >= 0");
  if (k == 0) return 1.0;
  return std::pow(static_cast<double>(k) / (2.0 * p * std::exp(1.0)), k / 2.0);
}

double hoeffding_tail(double r, double b) {
  if (r <= 0.0 || b <= 0.0) throw Error(Error::Kind::invalid_argument, "r and b must be positive");
  return std::sqrt(kPi) / b * std::exp(-b * b * r * r);
}

}  // namespace designet
