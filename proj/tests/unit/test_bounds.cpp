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

#include <cmath>

#include "designet/bounds.hpp"

using namespace designet;
using namespace designet::bounds;

TEST_CASE("tau is positive and grows as eps shrinks") {
  double prev = 0.0;
  for (double eps : {1.0, 0.5, 0.1, 0.01, 0.001}) {
    double t = tau(eps, 2);
    CHECK(t > 0.0);
    CHECK(t >= prev);
    prev = t;
  }
  CHECK_THROWS_AS(tau(0.0, 2), Error);
  CHECK_THROWS_AS(tau(1.5, 2), Error);
}

TEST_CASE("tau at the reference point matches a direct evaluation") {
  double l = std::log(6.0 * 5.0 * M_PI / 0.1);
  double expect = std::sqrt(l) * std::sqrt(std::sqrt(l) / 32.0 + std::log(2.0 / 0.1 * std::sqrt(l)));
  CHECK(tau(0.1, 2) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("design degree scales like 1/eps up to logarithmic factors") {
  double t1 = t_design_degree(0.1, 2);
  double t2 = t_design_degree(0.01, 2);
  CHECK(t1 == doctest::Approx(5.0 * std::pow(2.0, 2.5) / 0.1 * tau(0.1, 2)).epsilon(1e-14));
  // Ratio of t*eps across a decade is purely the tau ratio: modest polylog.
  double ratio = (t2 * 0.01) / (t1 * 0.1);
  CHECK(ratio > 1.0);
  CHECK(ratio < 2.0);
}

TEST_CASE("delta_required is positive and decreasing in d") {
  for (double eps : {0.05, 0.1, 0.5}) {
    double d2 = delta_required(eps, 2);
    double d3 = delta_required(eps, 3);
    CHECK(d2 > 0.0);
    CHECK(d3 > 0.0);
    CHECK(d3 < d2);
  }
}

TEST_CASE("sigma_star closed form") {
  double l = std::log(6.0 * 5.0 * M_PI / 0.1);
  CHECK(sigma_star(0.1, 2) == doctest::Approx(0.05 / std::sqrt(l)).epsilon(1e-14));
  CHECK(sigma_star(0.1, 4) < sigma_star(0.1, 2));
  CHECK(sigma_star(0.2, 2) > 0.0);
}

TEST_CASE("word length reference value and pole at delta = 1") {
  // log 32 + 3 (2 log 10 + log(4 (5 pi)^{3/2} 2)), halved gap doubles it.
  double expect = (std::log(32.0) +
                   3.0 * (2.0 * std::log(10.0) + std::log(8.0 * std::pow(5.0 * M_PI, 1.5)))) /
                  0.5;
  CHECK(word_length(0.1, 2, 0.5) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(word_length(0.1, 2, 0.5) == doctest::Approx(71.83).epsilon(1e-3));
  CHECK(word_length(0.1, 2, 1.0 - 1e-6) > 1e6);
  CHECK_THROWS_AS(word_length(0.1, 2, 1.0), Error);
  // Linear growth in log(1/eps): slope equals 2 (d^2 - 1) / (1 - delta).
  double slope = (word_length(0.01, 2, 0.5) - word_length(0.1, 2, 0.5)) /
                 (std::log(100.0) - std::log(10.0));
  CHECK(slope == doctest::Approx(2.0 * 3.0 / 0.5).epsilon(1e-10));
}

TEST_CASE("inverse-free compilation length") {
  CHECK(sk_length(std::exp(-2.0), 1.0, 1.0, 1.0) == doctest::Approx(9.0));
  CHECK(sk_length(0.1, 2.0, 0.0, 0.5) ==
        doctest::Approx(2.0 * std::pow(std::log(10.0), 3.0) / 0.5).epsilon(1e-14));
  CHECK_THROWS_AS(sk_length(0.1, 1.0, 1.0, 0.0), Error);
  // Cubic fit in log(1/eps) when B = 0: exact cubic by construction.
  double l2 = sk_length(std::exp(-2.0), 1.0, 0.0, 1.0);
  double l4 = sk_length(std::exp(-4.0), 1.0, 0.0, 1.0);
  CHECK(l4 / l2 == doctest::Approx(8.0));
}

TEST_CASE("net lower bounds at the reference point") {
  auto lb = net_lower_bounds(0.01, 2);
  CHECK(lb.t_volume == doctest::Approx(1.5 * std::log(M_PI / 0.2) - 2.0).epsilon(1e-12));
  CHECK(lb.t_design == doctest::Approx(38.0));
  // Large eps drives the volume bound negative; it is clamped to zero.
  CHECK(net_lower_bounds(1.5, 2).t_volume == 0.0);
}

TEST_CASE("design cardinality") {
  CHECK(design_cardinality(2, 1) == 4);
  CHECK(design_cardinality(2, 3) == 16);
  std::uint64_t prev = 0;
  for (int t = 0; t <= 12; ++t) {
    std::uint64_t c = design_cardinality(3, t);
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("support lower bound") {
  CHECK(support_lower_bound(0.0, 2, 3) == doctest::Approx(16.0));
  CHECK(support_lower_bound(1.0, 2, 3) == doctest::Approx(0.0));
  CHECK(support_lower_bound(0.5, 2, 2) == doctest::Approx(4.5));
}

TEST_CASE("Haar circuit depths") {
  auto d1 = bhh_depths(4, 2, 2, 0.01);
  CHECK(d1.l_loc_haar > 0.0);
  CHECK(d1.l_par_haar > 0.0);
  CHECK(d1.l_par_haar / d1.l_loc_haar == doctest::Approx(523000.0 / (42500.0 * 4.0)));
  // Direct arithmetic at n=4, t=2, d=2, eps=0.01: ceil(log2 8) = 3.
  double shared = 9.0 * 4.0 * std::pow(2.0, 5.0 + 3.1 * std::log(2.0)) *
                  (2.0 * 4.0 * 2.0 * std::log(2.0) + std::log(100.0));
  CHECK(d1.l_loc_haar == doctest::Approx(42500.0 * 4.0 * shared).epsilon(1e-12));
}

TEST_CASE("composite depths") {
  double e = std::exp(1.0);
  CHECK(composite_depth(10.0, 3, e, 1.0, false) == doctest::Approx(30.0));
  CHECK(composite_depth(10.0, 3, e, 1.0, true) == doctest::Approx(20.0));
  CHECK(composite_depth(10.0, 3, 4.0, 1.0, false) > composite_depth(10.0, 3, 3.0, 1.0, false));
  CHECK_THROWS_AS(composite_depth(10.0, 3, 1.5, 1.0, false), Error);
}

TEST_CASE("Varju gap floor") {
  CHECK(varju_gap_floor(0.0, 10.0, 1.0) == doctest::Approx(0.0));
  CHECK(varju_gap_floor(1.0, std::exp(2.0), 1.0) == doctest::Approx(0.25));
  CHECK(varju_gap_floor(0.5, 100.0, 2.0) < varju_gap_floor(0.5, 10.0, 2.0));
}

TEST_CASE("design depth needed") {
  CHECK(design_depth_needed(1.0, std::exp(-3.0)) == 3);
  CHECK(design_depth_needed(0.5, 0.01) == 10);
  CHECK_THROWS_AS(design_depth_needed(0.0, 0.1), Error);
  // Returned depth really contracts below the target on a grid.
  for (double g : {0.1, 0.3, 0.7}) {
    for (double delta : {0.05, 0.01, 1e-4}) {
      long l = design_depth_needed(g, delta);
      CHECK(std::pow(1.0 - g, static_cast<double>(l)) <= delta + 1e-15);
      CHECK(design_depth_needed(g, std::min(0.999, 2.0 * delta)) <= l);
    }
  }
}

TEST_CASE("upper bound dominates both lower bounds") {
  for (int d : {2, 3}) {
    for (double eps : {0.01, 0.1, 0.5, 1.0}) {
      auto r = consistency_check(d, eps);
      CHECK(r.pass);
      CHECK(r.margin_volume > 0.0);
      CHECK(r.margin_design > 0.0);
    }
  }
}
