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

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "kkmds/error.hpp"
#include "kkmds/random.hpp"

namespace kkmds {

using Symbol = std::uint32_t;
using Assignment = std::vector<Symbol>;

// Dense pairwise CSP: for every unordered pair i < j a sigma x sigma payoff
// table f_ij with entries in [-M, M]. f_ji(b, a) is read as f_ij(a, b).
class CspInstance {
public:
  CspInstance(std::size_t n, std::size_t sigma, double bound);

  std::size_t variables() const noexcept { return n_; }
  std::size_t alphabet() const noexcept { return sigma_; }
  double bound() const noexcept { return bound_; }

  double operator()(std::size_t i, std::size_t j, Symbol a, Symbol b) const noexcept {
    if (i < j) return tables_[offset(i, j) + a * sigma_ + b];
    return tables_[offset(j, i) + b * sigma_ + a];
  }

  void set(std::size_t i, std::size_t j, Symbol a, Symbol b, double value);

  // acc[b] += f_{u v}(s, b) for every symbol b.
  void accumulate(std::size_t u, std::size_t v, Symbol s, std::span<double> acc) const noexcept;

  CspInstance negated() const;

private:
  std::size_t offset(std::size_t i, std::size_t j) const noexcept {
    const std::size_t pair = i * n_ - i * (i + 1) / 2 + (j - i - 1);
    return pair * sigma_ * sigma_;
  }

  std::size_t n_;
  std::size_t sigma_;
  double bound_;
  std::vector<double> tables_;
};

template <typename P>
concept PairPayoff = requires(const P& p, std::size_t i, Symbol a, std::span<double> acc) {
  { p.variables() } -> std::convertible_to<std::size_t>;
  { p.alphabet() } -> std::convertible_to<std::size_t>;
  { p(i, i, a, a) } -> std::convertible_to<double>;
  p.accumulate(i, i, a, acc);
};

struct CspSolution {
  Assignment assignment;
  double value = 0.0;
};

struct GreedyOptions {
  std::size_t t0 = 3;
  std::uint64_t seed = 0;
  // Allowed symbols for each brute-forced slot (in shuffled order). Missing or
  // empty entries allow the whole alphabet.
  std::vector<std::vector<Symbol>> prefix_domains;
  std::size_t threads = 1;
};

inline constexpr double kBruteForceLimit = 1e7;
inline constexpr double kPrefixLimit = 1e9;

// Objective over unordered pairs, summed in ascending (i, j) order. The
// i != j sum used in the dense-CSP literature is exactly twice this value.
template <PairPayoff P>
double payoff_value(const P& p, std::span<const Symbol> a) {
  const std::size_t n = p.variables();
  if (a.size() != n) throw_parameter("assignment length does not match the instance");
  for (Symbol s : a)
    if (s >= p.alphabet()) throw_parameter("assignment symbol " + std::to_string(s) + " out of range");
  double v = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v += p(i, j, a[i], a[j]);
  return v;
}

inline double csp_value(const CspInstance& inst, std::span<const Symbol> a) { return payoff_value(inst, a); }

// Exhaustive maximiser; ties go to the lexicographically smallest assignment.
template <PairPayoff P>
CspSolution brute_force(const P& p) {
  const std::size_t n = p.variables();
  const std::size_t sigma = p.alphabet();
  if (sigma == 0) throw_parameter("alphabet must be nonempty");
  if (std::pow(static_cast<double>(sigma), static_cast<double>(n)) > kBruteForceLimit) {
    throw_resource("brute force over " + std::to_string(sigma) + "^" + std::to_string(n) +
                   " assignments exceeds the 1e7 guard");
  }
  Assignment a(n, 0);
  CspSolution best{a, payoff_value(p, a)};
  while (true) {
    std::size_t k = n;
    while (k > 0 && a[k - 1] + 1 == sigma) a[--k] = 0;
    if (k == 0) break;
    ++a[k - 1];
    const double v = payoff_value(p, a);
    if (v > best.value) best = {a, v};
  }
  return best;
}

inline CspSolution brute_force_csp(const CspInstance& inst) { return brute_force(inst); }

// Payoff adaptor that flips maximisation into minimisation.
template <PairPayoff P>
class Negated {
public:
  explicit Negated(const P& inner) : inner_(inner) {}
  std::size_t variables() const { return inner_.variables(); }
  std::size_t alphabet() const { return inner_.alphabet(); }
  double operator()(std::size_t i, std::size_t j, Symbol a, Symbol b) const { return -inner_(i, j, a, b); }
  void accumulate(std::size_t u, std::size_t v, Symbol s, std::span<double> acc) const {
    for (std::size_t b = 0; b < acc.size(); ++b) acc[b] -= inner_(u, v, s, static_cast<Symbol>(b));
  }

private:
  const P& inner_;
};

namespace detail {

struct PrefixPlan {
  std::vector<std::vector<Symbol>> domains;
  std::uint64_t total = 1;
};

PrefixPlan plan_prefixes(std::size_t t0, std::size_t sigma, const std::vector<std::vector<Symbol>>& restrict);

template <PairPayoff P>
void greedy_complete(const P& p, std::span<const std::size_t> order, std::size_t t0, Assignment& x,
                     std::vector<double>& acc) {
  const std::size_t sigma = p.alphabet();
  for (std::size_t pos = t0; pos < order.size(); ++pos) {
    const std::size_t v = order[pos];
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t q = 0; q < pos; ++q) {
      const std::size_t u = order[q];
      p.accumulate(u, v, x[u], acc);
    }
    Symbol best = 0;
    for (std::size_t b = 1; b < sigma; ++b)
      if (acc[b] > acc[best]) best = static_cast<Symbol>(b);
    x[v] = best;
  }
}

}  // namespace detail

// Greedy dense-CSP solver: shuffle the variables, brute-force the first t0 in
// shuffled order, extend each prefix greedily by maximising the payoff against
// already placed variables, and keep the best completed assignment (scored
// over all pairs). Ties: smallest symbol while extending, earliest prefix in
// lexicographic order when selecting.
template <PairPayoff P>
CspSolution greedy_csp(const P& p, const GreedyOptions& opt) {
  const std::size_t n = p.variables();
  const std::size_t sigma = p.alphabet();
  if (sigma == 0) throw_parameter("alphabet must be nonempty");
  if (opt.t0 > n) {
    throw_parameter("t0 = " + std::to_string(opt.t0) + " exceeds the variable count " + std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(opt.seed);
  rng.shuffle(std::span<std::size_t>(order));

  const auto plan = detail::plan_prefixes(opt.t0, sigma, opt.prefix_domains);

  struct Best {
    double value = -std::numeric_limits<double>::infinity();
    std::uint64_t prefix = std::numeric_limits<std::uint64_t>::max();
    Assignment assignment;
  };

  auto run_range = [&](std::uint64_t begin, std::uint64_t end, Best& best) {
    Assignment x(n, 0);
    std::vector<double> acc(sigma);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t k = opt.t0; k > 0; --k) {
        const auto& dom = plan.domains[k - 1];
        x[order[k - 1]] = dom[rest % dom.size()];
        rest /= dom.size();
      }
      detail::greedy_complete(p, order, opt.t0, x, acc);
      const double v = payoff_value(p, x);
      if (v > best.value) {
        best.value = v;
        best.prefix = idx;
        best.assignment = x;
      }
    }
  };

  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::uint64_t>(opt.threads, plan.total));
  std::vector<Best> partial(threads);
  if (threads == 1) {
    run_range(0, plan.total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (plan.total + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::uint64_t b = std::min<std::uint64_t>(plan.total, t * chunk);
      const std::uint64_t e = std::min<std::uint64_t>(plan.total, b + chunk);
      pool.emplace_back([&, b, e, t] { run_range(b, e, partial[t]); });
    }
    for (auto& th : pool) th.join();
  }
  const Best* winner = &partial[0];
  for (const auto& b : partial) {
    if (b.assignment.empty()) continue;
    if (winner->assignment.empty() || b.value > winner->value ||
        (b.value == winner->value && b.prefix < winner->prefix))
      winner = &b;
  }
  return {winner->assignment, winner->value};
}

// Thread count from MDS_THREADS, else the hardware concurrency.
std::size_t default_thread_count();

}  // namespace kkmds
