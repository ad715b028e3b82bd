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

#include "kkmds/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "kkmds/error.hpp"
#include "kkmds/hooks.hpp"
#include "kkmds/svg.hpp"

namespace kkmds {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

BenchSuite make_suite(std::string name, Graph g, double radius, double eps1) {
  BenchSuite s;
  s.name = std::move(name);
  s.graph = std::move(g);
  s.scheme.dim = 2;
  s.scheme.radius = radius;
  s.scheme.eps1 = eps1;
  s.scheme.t0 = 3;
  s.gd.init_radius = radius;
  return s;
}

void summarise(BenchMethod& m, const std::vector<double>& norm) {
  m.trials = norm.size();
  m.best_norm_stress = *std::min_element(norm.begin(), norm.end());
  double sum = 0.0;
  for (double v : norm) sum += v;
  m.mean_norm_stress = sum / static_cast<double>(norm.size());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_io("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw_io("failed writing " + path.string());
}

}  // namespace

std::vector<std::string> bench_suite_names() { return {"davis", "ws", "sbm", "clique-path"}; }

BenchSuite bench_suite(const std::string& name, std::uint64_t seed) {
  if (name == "davis") return make_suite(name, davis_southern_women(), 2.5, 0.35);
  if (name == "ws") {
    BenchSuite s = make_suite(name, gen_watts_strogatz(50, 4, 0.3, seed), 4.0, 0.57);
    s.graph_seed = seed;
    return s;
  }
  if (name == "sbm") {
    const std::vector<std::size_t> sizes = {35, 35, 50};
    const auto probs = sbm_reference_probs();
    for (std::uint64_t s = seed; s < seed + 1000; ++s) {
      Graph g = gen_sbm(sizes, probs, s);
      if (!is_connected(g)) continue;
      BenchSuite suite = make_suite(name, std::move(g), 4.0, 0.57);
      suite.graph_seed = s;
      suite.normalized_spectral = true;
      suite.draw_edges = false;
      return suite;
    }
    throw_resource("no connected block-model sample in 1000 seeds");
  }
  if (name == "clique-path") return make_suite(name, gen_clique_path(4, 5), 2.5, 0.35);
  throw_parameter("unknown bench suite '" + name + "' (expected davis, ws, sbm or clique-path)");
}

const BenchMethod& BenchReport::method(const std::string& name) const {
  for (const auto& m : methods)
    if (m.method == name) return m;
  throw_parameter("bench report has no method '" + name + "'");
}

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  out.precision(10);
  out << "method,trials,mean_norm_stress,best_norm_stress,seconds\n";
  for (const auto& m : methods)
    out << m.method << ',' << m.trials << ',' << m.mean_norm_stress << ',' << m.best_norm_stress << ',' << m.seconds
        << '\n';
  return out.str();
}

BenchReport run_bench(const std::string& suite_name, const BenchOptions& opt) {
  if (opt.trials < 1) throw_parameter("bench needs at least one trial");
  BenchReport report{bench_suite(suite_name, opt.seed), {}};
  BenchSuite& suite = report.suite;
  if (opt.eps1) suite.scheme.eps1 = *opt.eps1;
  if (opt.t0) suite.scheme.t0 = *opt.t0;
  suite.scheme.threads = opt.threads;
  const DistanceMatrix d = apsp(suite.graph);
  const std::size_t n = d.size();

  BenchMethod greedy, combined, grad, spectral;
  greedy.method = "greedy";
  combined.method = "greedy+grad";
  grad.method = "grad";
  spectral.method = "spectral";
  std::vector<double> greedy_norm, combined_norm, grad_norm;
  double greedy_best = 0.0, combined_best = 0.0, grad_best = 0.0;

  for (std::size_t t = 0; t < opt.trials; ++t) {
    SchemeParams sp = suite.scheme;
    sp.seed = opt.seed + t;
    auto start = Clock::now();
    SchemeResult s = kk_scheme(d, sp);
    const double greedy_secs = since(start);
    greedy.seconds += greedy_secs;
    greedy_norm.push_back(normalized_stress(s.stress, n));
    if (t == 0 || s.stress < greedy_best) {
      greedy_best = s.stress;
      greedy.best_layout = s.layout;
    }

    GdParams gp = suite.gd;
    gp.seed = opt.seed + t;
    gp.init = s.layout;
    start = Clock::now();
    GdResult refined = gradient_descent(d, sp.dim, gp);
    combined.seconds += greedy_secs + since(start);
    notify_layout("greedy+grad", refined.layout, d);
    combined_norm.push_back(normalized_stress(refined.stress, n));
    if (t == 0 || refined.stress < combined_best) {
      combined_best = refined.stress;
      combined.best_layout = refined.layout;
    }

    GdParams rp = suite.gd;
    rp.seed = opt.seed + t;
    start = Clock::now();
    GdResult plain = gradient_descent(d, sp.dim, rp);
    grad.seconds += since(start);
    grad_norm.push_back(normalized_stress(plain.stress, n));
    if (t == 0 || plain.stress < grad_best) {
      grad_best = plain.stress;
      grad.best_layout = plain.layout;
    }
  }
  summarise(greedy, greedy_norm);
  summarise(combined, combined_norm);
  summarise(grad, grad_norm);

  auto start = Clock::now();
  Layout raw = spectral_embed(suite.graph, suite.scheme.dim, suite.normalized_spectral);
  spectral.best_layout = scaled_layout(raw, stress_optimal_scale(raw, d));
  spectral.seconds = since(start);
  notify_layout("spectral", spectral.best_layout, d);
  summarise(spectral, {normalized_stress(stress(spectral.best_layout, d), n)});

  report.methods = {std::move(greedy), std::move(combined), std::move(grad), std::move(spectral)};
  return report;
}

void write_bench(const BenchReport& report, const std::filesystem::path& dir, bool force) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw_io("cannot create " + dir.string() + ": " + ec.message());
  if (std::filesystem::exists(dir / "results.csv") && !force)
    throw_io(dir.string() + " already holds results.csv; pass --force to overwrite");
  write_file(dir / "results.csv", report.to_csv());
  const Graph& g = report.suite.graph;
  for (const auto& m : report.methods) {
    SvgOptions so;
    so.edges = report.suite.draw_edges ? &g : nullptr;
    so.labels = g.labels();
    so.title = report.suite.name + " / " + m.method;
    so.normalized_stress = m.best_norm_stress;
    std::string file = m.method;
    std::replace(file.begin(), file.end(), '+', '_');
    write_file(dir / (file + ".svg"), render_svg(m.best_layout, so));
  }
}

}  // namespace kkmds
