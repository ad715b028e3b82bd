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

// Command-line front end. Talks to the library only through kkmds.h.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kkmds/kkmds.h"

namespace {

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

void check(kkmds_status s) {
  if (s != KKMDS_OK) fail(static_cast<int>(s), kkmds_last_error());
}

struct Deleter {
  void operator()(kkmds_graph* p) const { kkmds_graph_free(p); }
  void operator()(kkmds_metric* p) const { kkmds_metric_free(p); }
  void operator()(kkmds_layout* p) const { kkmds_layout_free(p); }
  void operator()(kkmds_sat* p) const { kkmds_sat_free(p); }
  void operator()(kkmds_run* p) const { kkmds_run_free(p); }
  void operator()(char* p) const { kkmds_string_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Deleter>;

std::string take(char* s) {
  Owned<char> holder(s);
  return s ? std::string(s) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(KKMDS_E_IO, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(KKMDS_E_IO, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(KKMDS_E_IO, "failed writing " + path);
}

Owned<kkmds_graph> load_graph(const std::string& path, const std::string& labels = "") {
  kkmds_graph* g = nullptr;
  check(kkmds_graph_parse(read_file(path).c_str(), &g));
  Owned<kkmds_graph> out(g);
  if (!labels.empty()) check(kkmds_graph_set_labels(g, read_file(labels).c_str()));
  return out;
}

Owned<kkmds_metric> metric_of(const kkmds_graph* g) {
  kkmds_metric* d = nullptr;
  check(kkmds_metric_from_graph(g, &d));
  return Owned<kkmds_metric>(d);
}

Owned<kkmds_layout> load_layout(const std::string& path) {
  kkmds_layout* x = nullptr;
  check(kkmds_layout_parse_json(read_file(path).c_str(), &x));
  return Owned<kkmds_layout>(x);
}

Owned<kkmds_sat> load_sat(const std::string& path) {
  kkmds_sat* s = nullptr;
  check(kkmds_sat_parse(read_file(path).c_str(), &s));
  return Owned<kkmds_sat>(s);
}

void write_graph(const kkmds_graph* g, const std::string& out, const std::string& labels_out) {
  char* text = nullptr;
  check(kkmds_graph_format(g, &text));
  write_output(out, take(text));
  char* labels = nullptr;
  check(kkmds_graph_format_labels(g, &labels));
  std::string l = take(labels);
  if (!l.empty() && !labels_out.empty()) write_output(labels_out, l);
}

std::string default_labels_path(const std::string& out, const std::string& given) {
  if (!given.empty()) return given;
  if (out.empty() || out == "-") return "";
  return out + ".labels";
}

// "a,b,c;d,e,f;g,h,i" -> row-major values.
std::vector<double> parse_matrix(const std::string& text, std::size_t& rows) {
  std::vector<double> values;
  rows = 0;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    ++rows;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        fail(KKMDS_E_PARAMETER, "malformed probability '" + cell + "'");
      }
    }
  }
  if (rows * rows != values.size()) fail(KKMDS_E_PARAMETER, "probability matrix must be square");
  return values;
}

void add_gadget_options(CLI::App* cmd, kkmds_gadget_params& p) {
  cmd->add_option("--nv", p.nv, "anchor clique size")->capture_default_str();
  cmd->add_option("--nt", p.nt, "literal clique size")->capture_default_str();
  cmd->add_option("--nc", p.nc, "clause clique size")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stress-minimising graph layouts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kkmds_version());

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->require_subcommand(1);
  std::string gen_out, gen_labels;
  std::uint64_t gen_seed = 0;
  auto common_gen = [&](CLI::App* c) {
    c->add_option("--out", gen_out, "edge-list output (default stdout)");
    c->add_option("--labels", gen_labels, "labels sidecar (default <out>.labels)");
  };
  std::size_t ws_n = 50, ws_k = 4;
  double ws_beta = 0.3;
  auto* ws = gen->add_subcommand("watts-strogatz", "Watts-Strogatz small world");
  ws->add_option("--n", ws_n)->capture_default_str();
  ws->add_option("--k", ws_k)->capture_default_str();
  ws->add_option("--beta", ws_beta)->capture_default_str();
  ws->add_option("--seed", gen_seed)->capture_default_str();
  common_gen(ws);
  std::vector<std::size_t> sbm_sizes = {35, 35, 50};
  std::string sbm_probs = "0.09,0.03,0.02;0.03,0.15,0.04;0.02,0.04,0.10";
  auto* sbm = gen->add_subcommand("sbm", "stochastic block model");
  sbm->add_option("--sizes", sbm_sizes, "community sizes")->delimiter(',')->capture_default_str();
  sbm->add_option("--probs", sbm_probs, "rows separated by ';', entries by ','")->capture_default_str();
  sbm->add_option("--seed", gen_seed)->capture_default_str();
  common_gen(sbm);
  std::size_t cp_d = 2, cp_c = 4;
  auto* cp = gen->add_subcommand("clique-path", "path of cliques, consecutive cliques fully joined");
  cp->add_option("--d", cp_d, "number of cliques")->capture_default_str();
  cp->add_option("--c", cp_c, "clique size")->capture_default_str();
  common_gen(cp);
  auto* davis = gen->add_subcommand("davis", "Davis Southern Women graph");
  common_gen(davis);
  std::size_t simple_n = 3;
  auto* complete = gen->add_subcommand("complete", "complete graph");
  auto* cycle = gen->add_subcommand("cycle", "cycle");
  auto* path = gen->add_subcommand("path", "path");
  for (auto* c : {complete, cycle, path}) {
    c->add_option("--n", simple_n)->required();
    common_gen(c);
  }

  // embed
  auto* embed = app.add_subcommand("embed", "compute a layout");
  kkmds_embed_options eo;
  kkmds_embed_options_default(&eo);
  std::string e_input, e_labels, e_algo = "greedy", e_out, e_svg, e_trials_csv;
  bool e_no_edges = false, e_no_symmetry = false, e_normalized = false, e_raw = false;
  embed->add_option("--input", e_input, "edge list")->required();
  embed->add_option("--labels", e_labels, "vertex labels for SVG colours");
  embed->add_option("--dim", eo.dim)->capture_default_str();
  embed->add_option("--algo", e_algo, "greedy | grad | greedy+grad | spectral")->capture_default_str();
  auto* o_radius = embed->add_option("--radius", eo.radius, "ball radius R")->capture_default_str();
  auto* o_eps1 = embed->add_option("--eps1", eo.eps1, "net resolution")->capture_default_str();
  auto* o_t0 = embed->add_option("--t0", eo.t0, "brute-forced prefix length")->capture_default_str();
  auto* o_lr = embed->add_option("--lr", eo.lr)->capture_default_str();
  auto* o_steps = embed->add_option("--steps", eo.steps)->capture_default_str();
  auto* o_trials = embed->add_option("--trials", eo.trials)->capture_default_str();
  embed->add_option("--seed", eo.seed)->capture_default_str();
  embed->add_option("--threads", eo.threads, "0 = MDS_THREADS or 1");
  embed->add_option("--out", e_out, "layout JSON (default stdout)");
  embed->add_option("--svg", e_svg, "also write an SVG plot");
  embed->add_option("--trials-csv", e_trials_csv, "per-trial record");
  embed->add_flag("--no-edges", e_no_edges, "omit edges from the SVG");
  auto* o_nosym = embed->add_flag("--no-symmetry", e_no_symmetry, "disable prefix pinning (greedy)");
  auto* o_norm = embed->add_flag("--normalized", e_normalized, "degree-normalised Laplacian (spectral)");
  auto* o_raw = embed->add_flag("--raw-spectral", e_raw, "skip stress-optimal rescaling (spectral)");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "stress of a layout");
  std::string v_input, v_layout, v_out;
  evaluate->add_option("--input", v_input, "edge list")->required();
  evaluate->add_option("--layout", v_layout, "layout JSON")->required();
  evaluate->add_option("--out", v_out);

  // check
  auto* checkc = app.add_subcommand("check", "structural bounds report");
  std::string c_input, c_layout, c_out;
  std::vector<double> c_conc;
  checkc->add_option("--input", c_input, "edge list")->required();
  checkc->add_option("--layout", c_layout, "layout JSON")->required();
  checkc->add_option("--concentration", c_conc, "C,kmax")->delimiter(',')->expected(2);
  checkc->add_option("--out", c_out);

  // gadget
  auto* gadget = app.add_subcommand("gadget", "hardness gadgets");
  gadget->require_subcommand(1);
  kkmds_gadget_params gp;
  kkmds_gadget_params_default(&gp);
  std::string g_sat, g_out, g_graph;
  std::size_t g_trials = 1024;
  std::uint64_t g_seed = 0;
  auto* g_reg = gadget->add_subcommand("regularize", "regularize and balance a SAT instance");
  g_reg->add_option("--sat", g_sat)->required();
  g_reg->add_option("--out", g_out);
  auto* g_build = gadget->add_subcommand("build", "build the reduction graph");
  g_build->add_option("--sat", g_sat)->required();
  g_build->add_option("--out", g_out);
  add_gadget_options(g_build, gp);
  auto* g_verify = gadget->add_subcommand("verify", "check a reduction graph against its instance");
  g_verify->add_option("--sat", g_sat)->required();
  g_verify->add_option("--graph", g_graph, "edge list to verify")->required();
  g_verify->add_option("--out", g_out);
  add_gadget_options(g_verify, gp);
  auto* g_probe = gadget->add_subcommand("probe", "stress of good layouts per assignment");
  g_probe->add_option("--sat", g_sat)->required();
  g_probe->add_option("--trials", g_trials, "enumerate all when 2^vars <= trials")->capture_default_str();
  g_probe->add_option("--seed", g_seed)->capture_default_str();
  g_probe->add_option("--out", g_out);
  add_gadget_options(g_probe, gp);

  // bench
  auto* bench = app.add_subcommand("bench", "method comparison on a fixed suite");
  std::string b_suite, b_out;
  std::size_t b_trials = 10, b_threads = 0;
  std::uint64_t b_seed = 0;
  bool b_force = false;
  bench->add_option("--suite", b_suite, "davis | ws | sbm | clique-path")->required();
  bench->add_option("--out", b_out, "output directory")->required();
  bench->add_option("--trials", b_trials)->capture_default_str();
  bench->add_option("--seed", b_seed)->capture_default_str();
  bench->add_option("--threads", b_threads);
  bench->add_flag("--force", b_force, "overwrite existing results");

  // plot
  auto* plot = app.add_subcommand("plot", "SVG of a layout");
  std::string p_input, p_layout, p_labels, p_out, p_title;
  bool p_no_edges = false;
  plot->add_option("--input", p_input, "edge list")->required();
  plot->add_option("--layout", p_layout, "layout JSON")->required();
  plot->add_option("--labels", p_labels);
  plot->add_option("--title", p_title);
  plot->add_option("--out", p_out);
  plot->add_flag("--no-edges", p_no_edges);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(KKMDS_E_PARAMETER);
  }

  try {
    if (gen->parsed()) {
      kkmds_graph* g = nullptr;
      if (ws->parsed()) {
        check(kkmds_gen_watts_strogatz(ws_n, ws_k, ws_beta, gen_seed, &g));
      } else if (sbm->parsed()) {
        std::size_t rows = 0;
        const auto probs = parse_matrix(sbm_probs, rows);
        if (rows != sbm_sizes.size()) fail(KKMDS_E_PARAMETER, "probability matrix size differs from --sizes");
        check(kkmds_gen_sbm(sbm_sizes.data(), sbm_sizes.size(), probs.data(), gen_seed, &g));
      } else if (cp->parsed()) {
        check(kkmds_gen_clique_path(cp_d, cp_c, &g));
      } else if (davis->parsed()) {
        check(kkmds_gen_davis(&g));
      } else if (complete->parsed()) {
        check(kkmds_gen_complete(simple_n, &g));
      } else if (cycle->parsed()) {
        check(kkmds_gen_cycle(simple_n, &g));
      } else {
        check(kkmds_gen_path(simple_n, &g));
      }
      Owned<kkmds_graph> owned(g);
      write_graph(g, gen_out, default_labels_path(gen_out, gen_labels));
    } else if (embed->parsed()) {
      check(kkmds_algo_parse(e_algo.c_str(), &eo.algo));
      const bool greedy = eo.algo == KKMDS_ALGO_GREEDY || eo.algo == KKMDS_ALGO_GREEDY_GRAD;
      const bool descent = eo.algo == KKMDS_ALGO_GRAD || eo.algo == KKMDS_ALGO_GREEDY_GRAD;
      const bool spectral = eo.algo == KKMDS_ALGO_SPECTRAL;
      auto reject = [&](CLI::Option* o, bool allowed) {
        if (o->count() > 0 && !allowed) fail(KKMDS_E_PARAMETER, o->get_name() + " is not valid with --algo " + e_algo);
      };
      reject(o_eps1, greedy);
      reject(o_t0, greedy);
      reject(o_nosym, greedy);
      reject(o_lr, descent);
      reject(o_steps, descent);
      reject(o_radius, !spectral);
      reject(o_trials, !spectral);
      reject(o_norm, spectral);
      reject(o_raw, spectral);
      eo.symmetry_reduction = e_no_symmetry ? 0 : 1;
      eo.normalized = e_normalized ? 1 : 0;
      eo.spectral_rescale = e_raw ? 0 : 1;

      auto g = load_graph(e_input, e_labels);
      auto d = metric_of(g.get());
      kkmds_run* r = nullptr;
      check(kkmds_embed(g.get(), &eo, &r));
      Owned<kkmds_run> run(r);
      const kkmds_layout* x = kkmds_run_layout(r);
      char* json = nullptr;
      check(kkmds_layout_to_json(x, d.get(), &json));
      write_output(e_out, take(json));
      if (!e_trials_csv.empty()) {
        char* csv = nullptr;
        check(kkmds_run_trials_csv(r, &csv));
        write_output(e_trials_csv, take(csv));
      }
      if (!e_svg.empty()) {
        const double n = static_cast<double>(kkmds_layout_size(x));
        char* svg = nullptr;
        check(kkmds_render_svg(x, g.get(), e_no_edges ? 0 : 1, e_algo.c_str(), kkmds_run_stress(r) / (n * n), &svg));
        write_output(e_svg, take(svg));
      }
    } else if (evaluate->parsed()) {
      auto g = load_graph(v_input);
      auto d = metric_of(g.get());
      auto x = load_layout(v_layout);
      double e = 0.0;
      check(kkmds_layout_stress(x.get(), d.get(), &e));
      const double n = static_cast<double>(kkmds_layout_size(x.get()));
      char buf[256];
      std::snprintf(buf, sizeof buf, "{\n  \"format\": 1,\n  \"n\": %zu,\n  \"stress\": %.17g,\n  \"normalized_stress\": %.17g\n}\n",
                    kkmds_layout_size(x.get()), e, e / (n * n));
      write_output(v_out, buf);
    } else if (checkc->parsed()) {
      auto g = load_graph(c_input);
      auto d = metric_of(g.get());
      auto x = load_layout(c_layout);
      double c = 0.0;
      std::size_t kmax = 0;
      if (!c_conc.empty()) {
        c = c_conc[0];
        if (c_conc[1] < 1 || c_conc[1] != std::floor(c_conc[1]))
          fail(KKMDS_E_PARAMETER, "--concentration kmax must be a positive integer");
        kmax = static_cast<std::size_t>(c_conc[1]);
      }
      char* json = nullptr;
      check(kkmds_check(x.get(), d.get(), c, kmax, &json));
      write_output(c_out, take(json));
    } else if (gadget->parsed()) {
      auto sat = load_sat(g_sat);
      if (g_reg->parsed()) {
        kkmds_sat* reg = nullptr;
        check(kkmds_sat_regularize(sat.get(), &reg));
        Owned<kkmds_sat> owned(reg);
        char* text = nullptr;
        check(kkmds_sat_format(reg, &text));
        write_output(g_out, take(text));
      } else if (g_build->parsed()) {
        kkmds_graph* g = nullptr;
        check(kkmds_gadget_build(sat.get(), &gp, &g));
        Owned<kkmds_graph> owned(g);
        write_graph(g, g_out, "");
      } else if (g_verify->parsed()) {
        auto g = load_graph(g_graph);
        int ok = 0;
        char* json = nullptr;
        check(kkmds_gadget_verify(g.get(), sat.get(), &gp, &ok, &json));
        write_output(g_out, take(json));
        if (!ok) fail(KKMDS_E_INVARIANT, "gadget invariants violated");
      } else {
        char* json = nullptr;
        check(kkmds_gadget_probe(sat.get(), &gp, g_trials, g_seed, &json));
        write_output(g_out, take(json));
      }
    } else if (bench->parsed()) {
      char* csv = nullptr;
      check(kkmds_bench(b_suite.c_str(), b_trials, b_seed, b_threads, b_out.c_str(), b_force ? 1 : 0, &csv));
      std::cout << take(csv);
    } else if (plot->parsed()) {
      auto g = load_graph(p_input, p_labels);
      auto d = metric_of(g.get());
      auto x = load_layout(p_layout);
      double e = 0.0;
      check(kkmds_layout_stress(x.get(), d.get(), &e));
      const double n = static_cast<double>(kkmds_layout_size(x.get()));
      char* svg = nullptr;
      check(kkmds_render_svg(x.get(), g.get(), p_no_edges ? 0 : 1, p_title.c_str(), e / (n * n), &svg));
      write_output(p_out, take(svg));
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return 0;
}
