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

#ifndef DESIGNET_RANDOM_MATRIX_HPP
#define DESIGNET_RANDOM_MATRIX_HPP

#include "designet/linalg.hpp"

namespace designet {

/// GUE draw with unit entry variance: real standard-normal diagonal,
/// off-diagonal complex with independent real/imaginary parts of variance 1/2.
/// This normalization makes the tail bound Pr(||A||/sqrt(d) >= 2+a) apply
/// directly.
MatC gue_sample(int d, Sampler& sampler);
MatC gue_sample(int d, RngStream rng);

/// Empirical Pr(||A/sqrt(d)||_inf >= 2 + a) with the closed-form tail bound
/// (1/2) exp(-d a^2 / 2) attached.
struct GueTailReport {
  McEstimate probability;
  double bound = 0.0;
};
GueTailReport gue_tail_mc(int d, double a, long n_samples, RngStream rng);

/// Importance-sampled Mehta integral: mean of prod_{i<j} (x_i - x_j)^2 under
/// the standard normal, which equals prod_{k=1..d} k!.
McEstimate mehta_mc(int d, long n_samples, RngStream rng);
double mehta_exact(int d);

/// Gaussian-Vandermonde integrals against the measure
/// dmu_G = prod (x_i-x_j)^2 dx / ((2pi)^d d!). The full integral is estimated
/// by sampling the Gaussian directly; the tail outside [-r, r]^d is reduced to
/// the GUE spectral-norm probability and carries its closed-form bound.
struct GaussianVandermondeReport {
  McEstimate full_integral;
  double full_exact = 0.0;
  McEstimate tail;
  double tail_bound = 0.0;
};
GaussianVandermondeReport gaussian_vandermonde_tail_mc(int d, double sigma, double r,
                                                       long n_samples, RngStream rng);

/// Dimension constants: C_d = prod k! / ((2pi)^d d!), the series constant
/// A_d (<= 10) and the norm-ratio constant B_d (<= 1).
struct DimensionConstants {
  double c_d = 0.0;
  double a_d = 0.0;
  double b_d = 0.0;
};
DimensionConstants dimension_constants(int d);

/// max_{x>=0} x^k e^{-p x^2} = (k / (2 p e))^(k/2).
double max_gauss_poly(int k, double p);

/// Gaussian tail bound: integral_r^inf e^{-b^2 x^2} dx <= (sqrt(pi)/b) e^{-b^2 r^2}.
double hoeffding_tail(double r, double b);

}  // namespace designet

#endif
