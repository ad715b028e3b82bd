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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "kkmds/bench.hpp"
#include "kkmds/error.hpp"
#include "kkmds/svg.hpp"

using namespace kkmds;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("svg") {
  TEST_CASE("document structure") {
    const Graph g = gen_cycle(5);
    const Layout x(5, 2, {0, 0, 1, 0, 1, 1, 0, 1, 0.5, 2});
    const std::vector<int> labels{0, 1, 2, 1, 11};
    SvgOptions opt;
    opt.edges = &g;
    opt.labels = labels;
    opt.title = "a <b> & c";
    opt.normalized_stress = 0.0421;
    const std::string svg = render_svg(x, opt);
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\"", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_of(svg, "<circle") == 5);
    CHECK(count_of(svg, "<line") == 5);
    CHECK(svg.find("a &lt;b&gt; &amp; c") != std::string::npos);
    CHECK(svg.find("normalized stress 0.0421") != std::string::npos);
    CHECK(count_of(svg, "fill=\"#ff7f0e\"") == 3);  // labels 1, 1 and 11
    CHECK(svg.find("cy=\"-2\"") != std::string::npos);  // y axis points up
  }

  TEST_CASE("plain and degenerate layouts") {
    const std::string plain = render_svg(Layout(3, 1, {0, 1, 2}));
    CHECK(count_of(plain, "<line") == 0);
    CHECK(count_of(plain, "<text") == 0);
    CHECK(count_of(plain, "<circle") == 3);
    CHECK(render_svg(Layout(1, 2)).find("nan") == std::string::npos);
    const std::vector<int> short_labels{0};
    SvgOptions bad;
    bad.labels = short_labels;
    CHECK_THROWS_AS(render_svg(Layout(2, 2), bad), Error);
  }
}

TEST_SUITE("bench") {
  TEST_CASE("suites") {
    CHECK(bench_suite("davis").graph.vertex_count() == 32);
    CHECK(bench_suite("ws").graph.vertex_count() == 50);
    CHECK(is_connected(bench_suite("sbm").graph));
    CHECK(bench_suite("sbm").normalized_spectral);
    CHECK(bench_suite("clique-path").graph.vertex_count() == 20);
    CHECK_THROWS_AS(bench_suite("nope"), Error);
  }

  TEST_CASE("small run and output files") {
    BenchOptions opt;
    opt.trials = 2;
    opt.threads = 1;
    const BenchReport r = run_bench("clique-path", opt);
    REQUIRE(r.methods.size() == 4);
    CHECK(r.method("greedy").trials == 2);
    CHECK(r.method("spectral").trials == 1);
    CHECK(r.method("greedy+grad").best_norm_stress <= r.method("greedy").best_norm_stress);
    for (const auto& m : r.methods) CHECK(m.best_norm_stress <= m.mean_norm_stress + 1e-15);
    CHECK_THROWS_AS(r.method("other"), Error);
    const std::string csv = r.to_csv();
    CHECK(csv.rfind("method,trials,mean_norm_stress,best_norm_stress,seconds\n", 0) == 0);
    CHECK(count_of(csv, "\n") == 5);

    const auto dir = std::filesystem::temp_directory_path() / "kkmds_bench_unit";
    std::filesystem::remove_all(dir);
    write_bench(r, dir, false);
    for (const char* f : {"results.csv", "greedy.svg", "greedy_grad.svg", "grad.svg", "spectral.svg"})
      CHECK(std::filesystem::exists(dir / f));
    CHECK(slurp(dir / "results.csv") == csv);
    CHECK_THROWS_AS(write_bench(r, dir, false), Error);
    CHECK_NOTHROW(write_bench(r, dir, true));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("option validation") {
    BenchOptions opt;
    opt.trials = 0;
    CHECK_THROWS_AS(run_bench("davis", opt), Error);
  }
}
