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

#ifndef DESIGNET_DIRAC_DELTA_HPP
#define DESIGNET_DIRAC_DELTA_HPP

#include <functional>
#include <optional>
#include <vector>

#include "designet/linalg.hpp"

namespace designet {

/// Symmetric trigonometric sum on the d-torus with Gaussian Fourier weights:
///   f(phi) = (2pi)^-d  sum_n  exp(-sigma^2 n^2 / 2) exp(i n.phi),
/// over integer vectors n kept by the selection rules below. Its class
/// extension f(Eig(U)) is the building block of the polynomial delta
/// approximation on unitary channels.
///
/// Mode selection: |n|_1 <= truncation when set (the degree bound), always
/// sigma^2 n^2 / 2 <= 40 (coefficients below e^-40 are dropped), optionally a
/// caller-supplied weight floor, and sum_i n_i = 0 when phase_averaged (which
/// makes the class extension insensitive to global phases). The mode set is
/// closed under coordinate permutations and n -> -n, so values are real.
class TorusFourier {
public:
  int d = 0;
  double sigma = 0.0;
  std::optional<int> truncation;
  bool phase_averaged = false;
  std::vector<int> modes;        // flattened, d entries per mode
  std::vector<double> coeffs;    // parallel to modes

  long mode_count() const { return static_cast<long>(coeffs.size()); }

  /// Stored coefficient of the n = 0 mode (1 unless scaled).
  double zero_mode_coefficient() const;

  /// Structural certificate that the class extension is a balanced polynomial
  /// of degree <= truncation: every mode obeys the selection rules.
  bool certify_fourier_support() const;

  TorusFourier scaled(double factor) const;
};

/// Standard Gaussian density on R^d with scale sigma.
double gaussian_density(const VecR& x, double sigma);

/// Enumerate the mode set described above. weight_floor = 0 keeps the default
/// e^-40 cutoff only. Raises an error beyond 2e6 modes.
TorusFourier build_torus_fourier(int d, double sigma, std::optional<int> k, bool phase_averaged,
                                 double weight_floor = 0.0);

/// Modes of `full` with |n|_1 > k: the Fourier tail f - f_k as one function.
TorusFourier mode_tail(const TorusFourier& full, int k);

/// Evaluate at a phase vector; the imaginary residue must stay below 1e-6
/// (a larger one signals a non-symmetric mode set) and is discarded.
double eval_at_phases(const TorusFourier& f, const std::vector<double>& phases);

/// Class-function evaluation f(Eig(U)).
double eval_class_function(const TorusFourier& f, const UnitaryMatrix& u);

/// Exact flat-torus integral: only the n = 0 mode survives, so the value is
/// its stored coefficient.
double flat_torus_normalization_check(const TorusFourier& f);

/// Haar average of an arbitrary channel functional, with standard-error CI.
/// Class functions make this a Weyl-measure integral over eigenphases.
McEstimate weyl_mc_integral(const std::function<double(const UnitaryMatrix&)>& f, int d,
                            long n_samples, RngStream rng);

/// Monte Carlo estimate of the normalization N = int F dmu for the
/// phase-averaged truncated function. Requires sigma <= pi / (4 sqrt(d)).
McEstimate normalization_constant(int d, double sigma, int k, long n_samples, RngStream rng);

/// Normalized polynomial delta approximation: phase-averaged degree-k
/// truncation together with its Monte Carlo normalization.
struct DiracDeltaFn {
  TorusFourier base;
  McEstimate normalization;
};

/// Build the delta approximation; fails if the normalization CI touches 0.
DiracDeltaFn build_dirac_delta(int d, double sigma, int k, long n_samples, RngStream rng);

/// Degree sufficient for the tail bound:
/// 5 d^(3/2)/sigma sqrt(c eps^2/(d^2 sigma^2) + log(1/sigma)) with c = 1/8
/// (theorem form, default) or c = 1/32 (the proof's setting).
double degree_for_tail(int d, double eps, double sigma, bool proof_variant = false);

/// Closed-form comparison bounds.
double tail_bound(int d, double eps, double sigma);          // 9 e^{-eps^2/4s^2} (pi/2)^{d(d-1)}
double l2_bound_theorem(int d, double sigma);                // 8 * 2^{d^2} s^{-d(d-1/2)}
double l2_bound_lemma(int d, double sigma);                  // periodized-Gaussian L2 bound
double truncation_bound(int d, double sigma, int k);         // 10 C_d e^{-(k/sqrt d - sqrt d)^2 s^2/4}/s
double normalization_floor(int d, double sigma);             // (1/2) C_d s^{d(d-1)} (2/pi)^{d(d-1)}

struct TailReport {
  McEstimate integral;
  double bound = 0.0;
};

/// MC estimate of int_{D(U,I) > eps} |F| dmu for the normalized function.
/// Preconditions (errors name the violated inequality): sigma <= eps/(6 sqrt d)
/// and base degree k >= degree_for_tail.
TailReport tail_integral_mc(const DiracDeltaFn& delta, double eps, long n_samples, RngStream rng);

struct L2Report {
  McEstimate norm;  // sqrt of the mean-square, CI transformed accordingly
  double bound = 0.0;
};

/// L2 norm under the Weyl (Haar push-forward) measure.
L2Report l2_norm_mc(const TorusFourier& f, long n_samples, RngStream rng);

/// L2 norm of the normalized delta approximation, with the theorem bound
/// attached (requires k >= d/sigma).
L2Report l2_norm_mc(const DiracDeltaFn& delta, long n_samples, RngStream rng);

/// || f_p - f_{p,k} ||_2 under the Weyl measure, with the truncation-error
/// bound attached. Requires k >= d/sigma and sigma <= 1/2.
L2Report l2_truncation_error_mc(int d, double sigma, int k, long n_samples, RngStream rng);

}  // namespace designet

#endif
