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

#include "kkmds/kk_scheme.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "kkmds/error.hpp"
#include "kkmds/hooks.hpp"

namespace kkmds {

namespace {

void validate(const SchemeParams& p) {
  if (p.dim == 0) throw_parameter("scheme dimension must be positive");
  if (!(p.radius > 0.0) || !std::isfinite(p.radius)) throw_parameter("scheme radius must be positive");
  if (!(p.eps1 > 0.0) || !(p.eps1 < p.radius)) throw_parameter("scheme eps1 must satisfy 0 < eps1 < R");
  if (!(p.eps2 >= 0.0)) throw_parameter("scheme eps2 must be nonnegative");
  if (p.trials < 1) throw_parameter("scheme trials must be at least 1");
}

SchemeResult run_scheme(const DistanceMatrix& d, const SchemeParams& p) {
  const std::size_t n = d.size();
  if (n < 2) throw_parameter("the scheme needs at least two points");
  const double unit = d.min_distance();
  const bool rescale = unit != 1.0;
  const DistanceMatrix scaled = rescale ? d.scaled(1.0 / unit) : DistanceMatrix();
  const DistanceMatrix& metric = rescale ? scaled : d;

  const EpsNet net = build_net(p.radius, p.eps1, p.dim);
  const NetStressPayoff payoff(metric, net);

  GreedyOptions opt;
  opt.t0 = p.t0;
  opt.seed = p.seed;
  opt.threads = p.threads == 0 ? default_thread_count() : p.threads;
  if (p.symmetry_reduction && p.t0 >= 1) {
    opt.prefix_domains.push_back({static_cast<Symbol>(net.origin_index())});
    if (p.dim == 2 && p.t0 >= 2) {
      std::vector<Symbol> upper;
      for (std::size_t s = 0; s < net.size(); ++s)
        if (net.point(s)[1] >= 0.0) upper.push_back(static_cast<Symbol>(s));
      opt.prefix_domains.push_back(std::move(upper));
    }
  }
  const CspSolution sol = greedy_csp(payoff, opt);

  SchemeResult out{Layout(n, p.dim), 0.0, net.size(), sol.assignment};
  for (std::size_t i = 0; i < n; ++i) {
    const auto q = net.point(sol.assignment[i]);
    auto dst = out.layout.point(i);
    for (std::size_t k = 0; k < p.dim; ++k) dst[k] = q[k] * unit;
  }
  out.stress = stress(out.layout, d);
  return out;
}

}  // namespace

double scheme_error_bound(const SchemeParams& p, std::size_t n) {
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  return 4.0 * p.eps1 * p.radius * n2 + p.eps2 * p.radius * p.radius * n2;
}

NetStressPayoff::NetStressPayoff(const DistanceMatrix& d, const EpsNet& net)
    : d_(d), sigma_(net.size()), net_dist_(sigma_ * sigma_) {
  for (std::size_t a = 0; a < sigma_; ++a)
    for (std::size_t b = 0; b < sigma_; ++b) net_dist_[a * sigma_ + b] = distance(net.point(a), net.point(b));
}

void NetStressPayoff::accumulate(std::size_t u, std::size_t v, Symbol s, std::span<double> acc) const noexcept {
  const double inv = 1.0 / d_(u, v);
  const double* row = net_dist_.data() + static_cast<std::size_t>(s) * sigma_;
  for (std::size_t b = 0; b < sigma_; ++b) {
    const double r = row[b] * inv - 1.0;
    acc[b] -= r * r;
  }
}

SchemeResult kk_scheme(const DistanceMatrix& d, const SchemeParams& p) {
  validate(p);
  SchemeResult out = run_scheme(d, p);
  notify_layout("greedy", out.layout, d);
  return out;
}

RestartResult run_with_restarts(const DistanceMatrix& d, const SchemeParams& p) {
  validate(p);
  RestartResult out;
  for (std::size_t t = 0; t < p.trials; ++t) {
    SchemeParams trial = p;
    trial.seed = p.seed + t;
    const auto start = std::chrono::steady_clock::now();
    SchemeResult r = kk_scheme(d, trial);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.trials.push_back({t, trial.seed, r.stress, normalized_stress(r.stress, d.size()), secs});
    if (t == 0 || r.stress < out.best_stress) {
      out.best_stress = r.stress;
      out.best_trial = t;
      out.layout = std::move(r.layout);
    }
  }
  return out;
}

std::string trials_to_csv(const std::vector<TrialRecord>& trials) {
  std::ostringstream out;
  out.precision(17);
  out << "trial,seed,stress,normalized_stress,seconds\n";
  for (const auto& t : trials)
    out << t.trial << ',' << t.seed << ',' << t.stress << ',' << t.normalized_stress << ',' << t.seconds << '\n';
  return out.str();
}

}  // namespace kkmds
