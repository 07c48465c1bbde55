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

#include "designet/dirac_delta.hpp"

#include <cmath>

#include "designet/channel_geometry.hpp"
#include "designet/random_matrix.hpp"

namespace designet {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCoeffExponentCap = 40.0;
constexpr long kModeLimit = 2000000;

struct ModeEnumerator {
  int d;
  double sigma;
  std::optional<int> k;
  bool phase_averaged;
  double exponent_cap;
  std::vector<int> current;
  TorusFourier* out;

  void recurse(int coord, int l1_used, double sq_used, int sum) {
    if (coord == d) {
      if (phase_averaged && sum != 0) return;
      if (out->mode_count() >= kModeLimit) {
        throw Error(Error::Kind::dimension_limit, "torus mode count exceeds 2e6");
      }
      out->modes.insert(out->modes.end(), current.begin(), current.end());
      out->coeffs.push_back(std::exp(-0.5 * sigma * sigma * sq_used));
      return;
    }
    int budget_l1 = k ? *k - l1_used : INT32_MAX;
    int budget_sq = static_cast<int>(std::floor(std::sqrt(
        std::max(0.0, 2.0 * exponent_cap / (sigma * sigma) - sq_used))));
    int m = std::min(budget_l1, budget_sq);
    for (int v = -m; v <= m; ++v) {
      current[coord] = v;
      recurse(coord + 1, l1_used + std::abs(v), sq_used + static_cast<double>(v) * v, sum + v);
    }
  }
};

}  // namespace

double TorusFourier::zero_mode_coefficient() const {
  for (long i = 0; i < mode_count(); ++i) {
    bool zero = true;
    for (int c = 0; c < d; ++c) {
      if (modes[i * d + c] != 0) {
        zero = false;
        break;
      }
    }
    if (zero) return coeffs[i];
  }
  return 0.0;
}

bool TorusFourier::certify_fourier_support() const {
  for (long i = 0; i < mode_count(); ++i) {
    int l1 = 0, sum = 0;
    for (int c = 0; c < d; ++c) {
      l1 += std::abs(modes[i * d + c]);
      sum += modes[i * d + c];
    }
    if (truncation && l1 > *truncation) return false;
    if (phase_averaged && sum != 0) return false;
  }
  return true;
}

TorusFourier TorusFourier::scaled(double factor) const {
  TorusFourier out = *this;
  for (double& c : out.coeffs) c *= factor;
  return out;
}

double gaussian_density(const VecR& x, double sigma) {
  if (sigma <= 0.0) throw Error(Error::Kind::invalid_argument, "sigma must be positive");
  double d = static_cast<double>(x.size());
  return std::exp(-x.squaredNorm() / (2.0 * sigma * sigma)) /
         std::pow(std::sqrt(2.0 * kPi) * sigma, d);
}

TorusFourier build_torus_fourier(int d, double sigma, std::optional<int> k, bool phase_averaged,
                                 double weight_floor) {
  if (d < 1) throw Error(Error::Kind::invalid_argument, "dimension must be >= 1");
  if (sigma <= 0.0) throw Error(Error::Kind::invalid_argument, "sigma must be positive");
  if (k && *k < 0) throw Error(Error::Kind::invalid_argument, "truncation k must be >= 0");
  TorusFourier out;
  out.d = d;
  out.sigma = sigma;
  out.truncation = k;
  out.phase_averaged = phase_averaged;
  double cap = kCoeffExponentCap;
  if (weight_floor > 0.0) cap = std::min(cap, -std::log(weight_floor));
  ModeEnumerator en{d, sigma, k, phase_averaged, cap, std::vector<int>(d, 0), &out};
  en.recurse(0, 0, 0.0, 0);
  return out;
}

TorusFourier mode_tail(const TorusFourier& full, int k) {
  TorusFourier out;
  out.d = full.d;
  out.sigma = full.sigma;
  out.truncation = full.truncation;
  out.phase_averaged = full.phase_averaged;
  for (long i = 0; i < full.mode_count(); ++i) {
    int l1 = 0;
    for (int c = 0; c < full.d; ++c) l1 += std::abs(full.modes[i * full.d + c]);
    if (l1 > k) {
      out.modes.insert(out.modes.end(), full.modes.begin() + i * full.d,
                       full.modes.begin() + (i + 1) * full.d);
      out.coeffs.push_back(full.coeffs[i]);
    }
  }
  return out;
}

double eval_at_phases(const TorusFourier& f, const std::vector<double>& phases) {
  if (static_cast<int>(phases.size()) != f.d) {
    throw Error(Error::Kind::invalid_argument, "phase vector dimension mismatch");
  }
  double re = 0.0, im = 0.0;
  const int d = f.d;
  for (long i = 0; i < f.mode_count(); ++i) {
    double dot = 0.0;
    for (int c = 0; c < d; ++c) dot += f.modes[i * d + c] * phases[c];
    re += f.coeffs[i] * std::cos(dot);
    im += f.coeffs[i] * std::sin(dot);
  }
  double scale = std::pow(2.0 * kPi, -d);
  if (std::abs(im * scale) > 1e-6) {
    throw Error(Error::Kind::numeric,
                "imaginary residue " + std::to_string(im * scale) + " signals a non-symmetric mode set");
  }
  return re * scale;
}

double eval_class_function(const TorusFourier& f, const UnitaryMatrix& u) {
  if (u.dim() != f.d) throw Error(Error::Kind::invalid_argument, "class function dimension mismatch");
  return eval_at_phases(f, unitary_eigenphases(u));
}

double flat_torus_normalization_check(const TorusFourier& f) { return f.zero_mode_coefficient(); }

McEstimate weyl_mc_integral(const std::function<double(const UnitaryMatrix&)>& f, int d,
                            long n_samples, RngStream rng) {
  if (n_samples < 100) throw Error(Error::Kind::invalid_argument, "need at least 100 samples");
  double sum = 0.0, sum_sq = 0.0;
  const long blocks = 64;
  for (long b = 0; b < blocks; ++b) {
    long n_b = n_samples / blocks + (b < n_samples % blocks ? 1 : 0);
    Sampler sampler(rng.block(b));
    for (long i = 0; i < n_b; ++i) {
      double v = f(haar_sample(d, sampler));
      sum += v;
      sum_sq += v * v;
    }
  }
  return mean_interval(sum, sum_sq, n_samples);
}

McEstimate normalization_constant(int d, double sigma, int k, long n_samples, RngStream rng) {
  if (sigma > kPi / (4.0 * std::sqrt(static_cast<double>(d)))) {
    throw Error(Error::Kind::precondition, "normalization bound requires sigma <= pi/(4 sqrt(d))");
  }
  TorusFourier f = build_torus_fourier(d, sigma, k, /*phase_averaged=*/true);
  return weyl_mc_integral([&f](const UnitaryMatrix& u) { return eval_class_function(f, u); }, d,
                          n_samples, rng);
}

DiracDeltaFn build_dirac_delta(int d, double sigma, int k, long n_samples, RngStream rng) {
  DiracDeltaFn delta;
  delta.base = build_torus_fourier(d, sigma, k, /*phase_averaged=*/true);
  delta.normalization = normalization_constant(d, sigma, k, n_samples, rng);
  if (delta.normalization.ci_lo <= 0.0) {
    throw Error(Error::Kind::numeric, "delta normalization CI touches zero");
  }
  return delta;
}

double degree_for_tail(int d, double eps, double sigma, bool proof_variant) {
  if (sigma <= 0.0 || eps <= 0.0) {
    throw Error(Error::Kind::invalid_argument, "eps and sigma must be positive");
  }
  double c = proof_variant ? 1.0 / 32.0 : 1.0 / 8.0;
  double dd = static_cast<double>(d);
  return 5.0 * std::pow(dd, 1.5) / sigma *
         std::sqrt(c * eps * eps / (dd * dd * sigma * sigma) + std::log(1.0 / sigma));
}

double tail_bound(int d, double eps, double sigma) {
  return 9.0 * std::exp(-eps * eps / (4.0 * sigma * sigma)) *
         std::pow(kPi / 2.0, static_cast<double>(d) * (d - 1));
}

double l2_bound_theorem(int d, double sigma) {
  return 8.0 * std::pow(2.0, static_cast<double>(d) * d) *
         std::pow(sigma, -static_cast<double>(d) * (d - 0.5));
}

double l2_bound_lemma(int d, double sigma) {
  double dfact = 1.0;
  for (int i = 2; i <= d; ++i) dfact *= i;
  return std::pow(2.0, d * (d + 1) / 2.0) * std::sqrt(dfact) * std::pow(sigma, -d / 2.0) /
         (dfact * std::pow(2.0 * kPi, d));
}

double truncation_bound(int d, double sigma, int k) {
  double sd = std::sqrt(static_cast<double>(d));
  double c_d = dimension_constants(d).c_d;
  double x = (static_cast<double>(k) / sd - sd) * sigma;
  return 10.0 * c_d * std::exp(-0.25 * x * x) / sigma;
}

double normalization_floor(int d, double sigma) {
  double c_d = dimension_constants(d).c_d;
  double e = static_cast<double>(d) * (d - 1);
  return 0.5 * c_d * std::pow(sigma, e) * std::pow(2.0 / kPi, e);
}

TailReport tail_integral_mc(const DiracDeltaFn& delta, double eps, long n_samples, RngStream rng) {
  const int d = delta.base.d;
  const double sigma = delta.base.sigma;
  // eps = 0 integrates |F| over the whole group; the localization
  // preconditions only constrain eps > 0.
  if (eps > 0.0) {
    if (sigma > eps / (6.0 * std::sqrt(static_cast<double>(d))) + 1e-12) {
      throw Error(Error::Kind::precondition, "violated: sigma <= eps / (6 sqrt(d))");
    }
    if (!delta.base.truncation ||
        static_cast<double>(*delta.base.truncation) < degree_for_tail(d, eps, sigma) - 1e-9) {
      throw Error(Error::Kind::precondition,
                  "violated: k >= 5 d^(3/2)/sigma sqrt(eps^2/(8 d^2 sigma^2) + log(1/sigma))");
    }
  }
  const UnitaryMatrix id = UnitaryMatrix::identity(d);
  McEstimate raw = weyl_mc_integral(
      [&](const UnitaryMatrix& u) {
        double dist = (d == 2) ? channel_distance_d2(u.matrix(), id.matrix())
                               : channel_distance(u, id).d_op;
        if (dist <= eps) return 0.0;
        return std::abs(eval_class_function(delta.base, u));
      },
      d, n_samples, rng);
  TailReport rep;
  double n = delta.normalization.estimate;
  rep.integral = raw;
  rep.integral.estimate = raw.estimate / n;
  // Relative errors of numerator and normalization combine in quadrature.
  double rel_num = raw.estimate > 0.0 ? raw.stderr_ / raw.estimate : 0.0;
  double rel_norm = delta.normalization.stderr_ / n;
  double se = raw.estimate > 0.0
                  ? rep.integral.estimate * std::sqrt(rel_num * rel_num + rel_norm * rel_norm)
                  : raw.stderr_ / n;
  rep.integral.stderr_ = se;
  rep.integral.ci_lo = rep.integral.estimate - 1.959963984540054 * se;
  rep.integral.ci_hi = rep.integral.estimate + 1.959963984540054 * se;
  rep.bound = tail_bound(d, eps, sigma);
  return rep;
}

namespace {

// sqrt-transform a mean-square estimate into an L2-norm estimate.
McEstimate sqrt_transform(const McEstimate& mean_sq) {
  McEstimate out;
  out.n_samples = mean_sq.n_samples;
  out.estimate = std::sqrt(std::max(0.0, mean_sq.estimate));
  out.ci_lo = std::sqrt(std::max(0.0, mean_sq.ci_lo));
  out.ci_hi = std::sqrt(std::max(0.0, mean_sq.ci_hi));
  out.stderr_ = (out.estimate > 0.0) ? mean_sq.stderr_ / (2.0 * out.estimate) : std::sqrt(mean_sq.stderr_);
  return out;
}

}  // namespace

L2Report l2_norm_mc(const TorusFourier& f, long n_samples, RngStream rng) {
  McEstimate mean_sq = weyl_mc_integral(
      [&f](const UnitaryMatrix& u) {
        double v = eval_class_function(f, u);
        return v * v;
      },
      f.d, n_samples, rng);
  L2Report rep;
  rep.norm = sqrt_transform(mean_sq);
  rep.bound = l2_bound_lemma(f.d, f.sigma);
  return rep;
}

L2Report l2_norm_mc(const DiracDeltaFn& delta, long n_samples, RngStream rng) {
  const double sigma = delta.base.sigma;
  const int d = delta.base.d;
  if (!delta.base.truncation ||
      static_cast<double>(*delta.base.truncation) < static_cast<double>(d) / sigma - 1e-12) {
    throw Error(Error::Kind::precondition, "violated: k >= d / sigma");
  }
  L2Report rep = l2_norm_mc(delta.base, n_samples, rng);
  double n = delta.normalization.estimate;
  rep.norm.estimate /= n;
  rep.norm.ci_lo /= n;
  rep.norm.ci_hi /= n;
  rep.norm.stderr_ /= n;
  rep.bound = l2_bound_theorem(d, sigma);
  return rep;
}

L2Report l2_truncation_error_mc(int d, double sigma, int k, long n_samples, RngStream rng) {
  if (sigma > 0.5) throw Error(Error::Kind::precondition, "violated: sigma <= 1/2");
  if (static_cast<double>(k) < static_cast<double>(d) / sigma - 1e-12) {
    throw Error(Error::Kind::precondition, "violated: k >= d / sigma");
  }
  TorusFourier full = build_torus_fourier(d, sigma, std::nullopt, /*phase_averaged=*/false);
  TorusFourier tail = mode_tail(full, k);
  McEstimate mean_sq = weyl_mc_integral(
      [&tail](const UnitaryMatrix& u) {
        double v = eval_class_function(tail, u);
        return v * v;
      },
      d, n_samples, rng);
  L2Report rep;
  rep.norm = sqrt_transform(mean_sq);
  rep.bound = truncation_bound(d, sigma, k);
  return rep;
}

}  // namespace designet
