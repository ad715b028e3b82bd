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

#include "kkmds/greedy_csp.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace kkmds {

CspInstance::CspInstance(std::size_t n, std::size_t sigma, double bound)
    : n_(n), sigma_(sigma), bound_(bound) {
  if (n == 0) throw_parameter("CSP needs at least one variable");
  if (sigma == 0) throw_parameter("CSP alphabet must be nonempty");
  if (!(bound >= 0.0) || !std::isfinite(bound)) throw_parameter("CSP payoff bound must be finite and >= 0");
  const double cells = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * static_cast<double>(sigma) *
                       static_cast<double>(sigma);
  if (cells > 2e8) throw_resource("dense CSP tables would need " + std::to_string(cells) + " entries");
  tables_.assign(n * (n - 1) / 2 * sigma * sigma, 0.0);
}

void CspInstance::set(std::size_t i, std::size_t j, Symbol a, Symbol b, double value) {
  if (i >= n_ || j >= n_ || i == j) throw_parameter("CSP pair index out of range");
  if (a >= sigma_ || b >= sigma_) throw_parameter("CSP symbol out of range");
  if (!(std::abs(value) <= bound_)) {
    throw_invariant("payoff " + std::to_string(value) + " outside [-M, M] with M = " + std::to_string(bound_));
  }
  if (i < j) {
    tables_[offset(i, j) + a * sigma_ + b] = value;
  } else {
    tables_[offset(j, i) + b * sigma_ + a] = value;
  }
}

void CspInstance::accumulate(std::size_t u, std::size_t v, Symbol s, std::span<double> acc) const noexcept {
  if (u < v) {
    const double* row = tables_.data() + offset(u, v) + s * sigma_;
    for (std::size_t b = 0; b < sigma_; ++b) acc[b] += row[b];
  } else {
    const double* base = tables_.data() + offset(v, u) + s;
    for (std::size_t b = 0; b < sigma_; ++b) acc[b] += base[b * sigma_];
  }
}

CspInstance CspInstance::negated() const {
  CspInstance out(*this);
  for (double& v : out.tables_) v = -v;
  return out;
}

namespace detail {

PrefixPlan plan_prefixes(std::size_t t0, std::size_t sigma, const std::vector<std::vector<Symbol>>& restrict) {
  PrefixPlan plan;
  double total = 1.0;
  for (std::size_t k = 0; k < t0; ++k) {
    std::vector<Symbol> dom;
    if (k < restrict.size() && !restrict[k].empty()) {
      dom = restrict[k];
      for (Symbol s : dom)
        if (s >= sigma) throw_parameter("prefix domain symbol out of range");
    } else {
      dom.resize(sigma);
      std::iota(dom.begin(), dom.end(), Symbol{0});
    }
    total *= static_cast<double>(dom.size());
    plan.domains.push_back(std::move(dom));
  }
  if (total > kPrefixLimit) {
    throw_resource("greedy prefix enumeration of " + std::to_string(total) + " assignments exceeds the 1e9 guard");
  }
  plan.total = static_cast<std::uint64_t>(total);
  return plan;
}

}  // namespace detail

std::size_t default_thread_count() {
  if (const char* env = std::getenv("MDS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace kkmds
