// Copyright 2026 The kkmds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kkmds/eps_net.hpp"
#include "kkmds/graph.hpp"
#include "kkmds/greedy_csp.hpp"
#include "kkmds/stress.hpp"

namespace kkmds {

struct SchemeParams {
  std::size_t dim = 2;
  double radius = 2.5;  // ball radius R
  double eps1 = 0.25;   // net resolution
  // Target CSP accuracy. Only reported through scheme_error_bound(); the
  // brute-forced prefix length is chosen directly through t0.
  double eps2 = 0.0;
  std::size_t t0 = 3;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  // Pin the first brute-forced vertex to the net point nearest the origin
  // and, in two dimensions, restrict the second to the half-plane y >= 0.
  bool symmetry_reduction = true;
  std::size_t threads = 0;  // 0 = default_thread_count()
};

// Largest absolute pair payoff when every point lies in the radius-R ball and
// all distances are at least one: (2R + 1)^2.
inline double scheme_payoff_bound(double radius) { return (2.0 * radius + 1.0) * (2.0 * radius + 1.0); }

// Additive error 4 eps1 R n^2 + eps2 R^2 n^2 of the scheme against the best
// layout inside the ball.
double scheme_error_bound(const SchemeParams& p, std::size_t n);

// Pair payoff -(|a - b| / d(i,j) - 1)^2 over net points a, b. Never
// materialised as dense tables: the net distance matrix is shared by all pairs.
class NetStressPayoff {
public:
  NetStressPayoff(const DistanceMatrix& d, const EpsNet& net);

  std::size_t variables() const noexcept { return d_.size(); }
  std::size_t alphabet() const noexcept { return sigma_; }
  double operator()(std::size_t i, std::size_t j, Symbol a, Symbol b) const noexcept {
    const double r = net_dist_[a * sigma_ + b] / d_(i, j) - 1.0;
    return -r * r;
  }
  void accumulate(std::size_t u, std::size_t v, Symbol s, std::span<double> acc) const noexcept;

private:
  const DistanceMatrix& d_;
  std::size_t sigma_;
  std::vector<double> net_dist_;
};

struct SchemeResult {
  Layout layout;
  double stress = 0.0;
  std::size_t net_size = 0;
  Assignment assignment;  // net index per vertex
};

// Builds the eps1-net of the ball, then approximately minimises stress over
// net-valued layouts with the greedy dense-CSP solver. Metrics whose smallest
// distance is not 1 are rescaled first and the layout is scaled back.
SchemeResult kk_scheme(const DistanceMatrix& d, const SchemeParams& p);

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double stress = 0.0;
  double normalized_stress = 0.0;
  double seconds = 0.0;
};

struct RestartResult {
  Layout layout;
  double best_stress = 0.0;
  std::size_t best_trial = 0;
  std::vector<TrialRecord> trials;
};

// Runs kk_scheme with seeds seed, seed + 1, ... and keeps the lowest stress
// (earliest trial on ties).
RestartResult run_with_restarts(const DistanceMatrix& d, const SchemeParams& p);

// trial,seed,stress,normalized_stress,seconds
std::string trials_to_csv(const std::vector<TrialRecord>& trials);

}  // namespace kkmds
