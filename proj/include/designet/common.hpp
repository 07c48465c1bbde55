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

#ifndef DESIGNET_COMMON_HPP
#define DESIGNET_COMMON_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace designet {

using Complex = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using MatR = Eigen::MatrixXd;
using VecR = Eigen::VectorXd;

/// Error taxonomy shared by the whole library; the C API maps kinds to codes.
class Error : public std::runtime_error {
public:
  enum class Kind {
    invalid_argument,
    dimension_limit,
    precondition,
    not_converged,
    parse,
    numeric,
  };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Raised by iterative norm estimation when the residual certificate fails;
/// carries the best estimate so callers can still inspect it.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& msg, double best_estimate, double residual)
      : Error(Kind::not_converged, msg), best_estimate_(best_estimate), residual_(residual) {}

  double best_estimate() const { return best_estimate_; }
  double residual() const { return residual_; }

private:
  double best_estimate_;
  double residual_;
};

/// Dense-representation ceiling (operator dimension). Overridable through the
/// DESIGNET_MAX_DIM environment variable; read once per process.
long max_dense_dim();

/// Monte Carlo point estimate with a 95% confidence interval.
struct McEstimate {
  double estimate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double stderr_ = 0.0;
  long n_samples = 0;
};

/// Wilson score interval at 95% for k successes out of n trials.
McEstimate wilson_interval(long k, long n);

/// Mean with normal-approximation CI from accumulated sum / sum of squares.
McEstimate mean_interval(double sum, double sum_sq, long n);

}  // namespace designet

#endif
