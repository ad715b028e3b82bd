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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kkmds/baselines.hpp"
#include "kkmds/graph.hpp"
#include "kkmds/kk_scheme.hpp"
#include "kkmds/stress.hpp"

namespace kkmds {

struct BenchSuite {
  std::string name;
  Graph graph;
  std::uint64_t graph_seed = 0;  // generator seed actually used
  SchemeParams scheme;
  GdParams gd;
  bool normalized_spectral = false;
  bool draw_edges = true;
};

// davis, ws, sbm or clique-path.
BenchSuite bench_suite(const std::string& name, std::uint64_t seed = 0);
std::vector<std::string> bench_suite_names();

struct BenchMethod {
  std::string method;
  std::size_t trials = 0;
  double mean_norm_stress = 0.0;
  double best_norm_stress = 0.0;
  double seconds = 0.0;  // total over trials
  Layout best_layout;
};

struct BenchOptions {
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::optional<double> eps1;  // override the suite's net resolution
  std::optional<std::size_t> t0;
};

struct BenchReport {
  BenchSuite suite;
  std::vector<BenchMethod> methods;  // greedy, greedy+grad, grad, spectral

  const BenchMethod& method(const std::string& name) const;
  // method,trials,mean_norm_stress,best_norm_stress,seconds
  std::string to_csv() const;
};

BenchReport run_bench(const std::string& suite, const BenchOptions& opt = {});

// results.csv plus <method>.svg per method. Refuses a directory that already
// holds results.csv unless force is set.
void write_bench(const BenchReport& report, const std::filesystem::path& dir, bool force);

}  // namespace kkmds
