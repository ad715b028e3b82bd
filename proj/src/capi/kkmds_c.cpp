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

#include "kkmds/kkmds.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <string>

#include "kkmds/baselines.hpp"
#include "kkmds/bench.hpp"
#include "kkmds/error.hpp"
#include "kkmds/graph.hpp"
#include "kkmds/hardness.hpp"
#include "kkmds/kk_scheme.hpp"
#include "kkmds/stress.hpp"
#include "kkmds/structural.hpp"
#include "kkmds/svg.hpp"

struct kkmds_graph {
  kkmds::Graph g;
};
struct kkmds_metric {
  kkmds::DistanceMatrix d;
};
struct kkmds_layout {
  kkmds::Layout x;
};
struct kkmds_sat {
  kkmds::SatInstance s;
};
struct kkmds_run {
  kkmds_layout layout;
  double stress = 0.0;
  std::vector<kkmds::TrialRecord> trials;
};

namespace {

thread_local std::string last_error;

template <class F>
kkmds_status guard(F&& f) noexcept {
  try {
    f();
    last_error.clear();
    return KKMDS_OK;
  } catch (const kkmds::Error& e) {
    last_error = e.what();
    return static_cast<kkmds_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KKMDS_E_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KKMDS_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return KKMDS_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) kkmds::throw_parameter(std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Make>
kkmds_status make_graph(kkmds_graph** out, Make&& make) {
  return guard([&] {
    require(out, "out");
    *out = new kkmds_graph{make()};
  });
}

kkmds::SchemeParams scheme_params(const kkmds_embed_options& o) {
  kkmds::SchemeParams p;
  p.dim = o.dim;
  p.radius = o.radius;
  p.eps1 = o.eps1;
  p.t0 = o.t0;
  p.seed = o.seed;
  p.trials = o.trials;
  p.symmetry_reduction = o.symmetry_reduction != 0;
  p.threads = o.threads;
  return p;
}

kkmds::GdParams gd_params(const kkmds_embed_options& o) {
  kkmds::GdParams p;
  p.lr = o.lr;
  p.steps = o.steps;
  p.seed = o.seed;
  p.init_radius = o.radius;
  return p;
}

void embed_on_metric(const kkmds::DistanceMatrix& d, const kkmds_embed_options& o, kkmds_run& run) {
  if (o.dim == 0) kkmds::throw_parameter("dimension must be positive");
  if (o.trials == 0) kkmds::throw_parameter("trials must be at least 1");
  kkmds::RestartResult r;
  switch (o.algo) {
    case KKMDS_ALGO_GREEDY: r = kkmds::run_with_restarts(d, scheme_params(o)); break;
    case KKMDS_ALGO_GRAD: r = kkmds::gradient_restarts(d, o.dim, gd_params(o), o.trials); break;
    case KKMDS_ALGO_GREEDY_GRAD: r = kkmds::greedy_grad_restarts(d, scheme_params(o), gd_params(o)); break;
    default: kkmds::throw_parameter("spectral embedding needs a graph, not a metric");
  }
  run.layout.x = std::move(r.layout);
  run.stress = r.best_stress;
  run.trials = std::move(r.trials);
}

kkmds::GadgetParams gadget_params(const kkmds_gadget_params* p) {
  kkmds::GadgetParams out;
  if (p != nullptr) out = {p->nv, p->nt, p->nc};
  return out;
}

}  // namespace

extern "C" {

const char* kkmds_version(void) { return "0.1.0"; }

const char* kkmds_status_name(kkmds_status status) {
  switch (status) {
    case KKMDS_OK: return "ok";
    case KKMDS_E_PARAMETER: return "parameter";
    case KKMDS_E_PARSE: return "parse";
    case KKMDS_E_INVARIANT: return "invariant";
    case KKMDS_E_RESOURCE: return "resource";
    case KKMDS_E_IO: return "io";
    case KKMDS_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* kkmds_last_error(void) { return last_error.c_str(); }

void kkmds_string_free(char* s) { std::free(s); }

kkmds_status kkmds_graph_parse(const char* text, kkmds_graph** out) {
  return make_graph(out, [&] {
    require(text, "text");
    return kkmds::parse_edge_list(text);
  });
}

kkmds_status kkmds_graph_format(const kkmds_graph* g, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup(kkmds::format_edge_list(g->g));
  });
}

kkmds_status kkmds_graph_set_labels(kkmds_graph* g, const char* text) {
  return guard([&] {
    require(g, "graph");
    require(text, "text");
    g->g.set_labels(kkmds::parse_labels(text));
  });
}

kkmds_status kkmds_graph_format_labels(const kkmds_graph* g, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup(kkmds::format_labels(g->g.labels()));
  });
}

size_t kkmds_graph_vertex_count(const kkmds_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t kkmds_graph_edge_count(const kkmds_graph* g) { return g ? g->g.edge_count() : 0; }
int kkmds_graph_is_connected(const kkmds_graph* g) { return g && kkmds::is_connected(g->g) ? 1 : 0; }
void kkmds_graph_free(kkmds_graph* g) { delete g; }

kkmds_status kkmds_gen_watts_strogatz(size_t n, size_t k, double beta, uint64_t seed, kkmds_graph** out) {
  return make_graph(out, [&] { return kkmds::gen_watts_strogatz(n, k, beta, seed); });
}

kkmds_status kkmds_gen_sbm(const size_t* sizes, size_t blocks, const double* probs, uint64_t seed,
                           kkmds_graph** out) {
  return make_graph(out, [&] {
    require(sizes, "sizes");
    require(probs, "probs");
    std::vector<std::size_t> sz(sizes, sizes + blocks);
    std::vector<std::vector<double>> p(blocks, std::vector<double>(blocks));
    for (size_t i = 0; i < blocks; ++i)
      for (size_t j = 0; j < blocks; ++j) p[i][j] = probs[i * blocks + j];
    return kkmds::gen_sbm(sz, p, seed);
  });
}

kkmds_status kkmds_gen_clique_path(size_t cliques, size_t clique_size, kkmds_graph** out) {
  return make_graph(out, [&] { return kkmds::gen_clique_path(cliques, clique_size); });
}
kkmds_status kkmds_gen_complete(size_t n, kkmds_graph** out) {
  return make_graph(out, [&] { return kkmds::gen_complete(n); });
}
kkmds_status kkmds_gen_cycle(size_t n, kkmds_graph** out) {
  return make_graph(out, [&] { return kkmds::gen_cycle(n); });
}
kkmds_status kkmds_gen_path(size_t n, kkmds_graph** out) {
  return make_graph(out, [&] { return kkmds::gen_path(n); });
}
kkmds_status kkmds_gen_davis(kkmds_graph** out) {
  return make_graph(out, [] { return kkmds::davis_southern_women(); });
}

kkmds_status kkmds_metric_from_graph(const kkmds_graph* g, kkmds_metric** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = new kkmds_metric{kkmds::apsp(g->g)};
  });
}

kkmds_status kkmds_metric_parse_csv(const char* text, kkmds_metric** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new kkmds_metric{kkmds::parse_distance_csv(text)};
  });
}

size_t kkmds_metric_size(const kkmds_metric* d) { return d ? d->d.size() : 0; }
double kkmds_metric_diameter(const kkmds_metric* d) { return d ? d->d.diameter() : 0.0; }
double kkmds_metric_at(const kkmds_metric* d, size_t i, size_t j) {
  if (!d || i >= d->d.size() || j >= d->d.size()) return std::nan("");
  return d->d(i, j);
}
void kkmds_metric_free(kkmds_metric* d) { delete d; }

kkmds_status kkmds_layout_create(size_t n, size_t dim, const double* coords, kkmds_layout** out) {
  return guard([&] {
    require(out, "out");
    if (coords == nullptr && n * dim > 0) kkmds::throw_parameter("coords must not be NULL");
    *out = new kkmds_layout{kkmds::Layout(n, dim, std::vector<double>(coords, coords + n * dim))};
  });
}

kkmds_status kkmds_layout_parse_json(const char* text, kkmds_layout** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new kkmds_layout{kkmds::layout_from_json(text)};
  });
}

kkmds_status kkmds_layout_to_json(const kkmds_layout* x, const kkmds_metric* d, char** out) {
  return guard([&] {
    require(x, "layout");
    require(d, "metric");
    require(out, "out");
    *out = dup(kkmds::layout_to_json(x->x, d->d));
  });
}

size_t kkmds_layout_size(const kkmds_layout* x) { return x ? x->x.size() : 0; }
size_t kkmds_layout_dim(const kkmds_layout* x) { return x ? x->x.dim() : 0; }
const double* kkmds_layout_coords(const kkmds_layout* x) { return x ? x->x.coords().data() : nullptr; }

kkmds_status kkmds_layout_stress(const kkmds_layout* x, const kkmds_metric* d, double* out) {
  return guard([&] {
    require(x, "layout");
    require(d, "metric");
    require(out, "out");
    *out = kkmds::stress(x->x, d->d);
  });
}

kkmds_status kkmds_clique_optimal(size_t n, kkmds_layout** out) {
  return guard([&] {
    require(out, "out");
    *out = new kkmds_layout{kkmds::clique_optimal(n).layout};
  });
}

void kkmds_layout_free(kkmds_layout* x) { delete x; }

void kkmds_embed_options_default(kkmds_embed_options* opt) {
  if (opt == nullptr) return;
  const kkmds::SchemeParams s;
  const kkmds::GdParams g;
  opt->algo = KKMDS_ALGO_GREEDY;
  opt->dim = s.dim;
  opt->radius = s.radius;
  opt->eps1 = s.eps1;
  opt->t0 = s.t0;
  opt->lr = g.lr;
  opt->steps = g.steps;
  opt->trials = 1;
  opt->seed = 0;
  opt->threads = 0;
  opt->symmetry_reduction = 1;
  opt->normalized = 0;
  opt->spectral_rescale = 1;
}

kkmds_status kkmds_algo_parse(const char* name, kkmds_algo* out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    const std::string n = name;
    if (n == "greedy") *out = KKMDS_ALGO_GREEDY;
    else if (n == "grad") *out = KKMDS_ALGO_GRAD;
    else if (n == "greedy+grad") *out = KKMDS_ALGO_GREEDY_GRAD;
    else if (n == "spectral") *out = KKMDS_ALGO_SPECTRAL;
    else kkmds::throw_parameter("unknown algorithm '" + n + "' (expected greedy, grad, greedy+grad or spectral)");
  });
}

kkmds_status kkmds_embed(const kkmds_graph* g, const kkmds_embed_options* opt, kkmds_run** out) {
  return guard([&] {
    require(g, "graph");
    require(opt, "options");
    require(out, "out");
    auto run = std::make_unique<kkmds_run>();
    const kkmds::DistanceMatrix d = kkmds::apsp(g->g);
    if (opt->algo == KKMDS_ALGO_SPECTRAL) {
      const auto start = std::chrono::steady_clock::now();
      kkmds::Layout x = kkmds::spectral_embed(g->g, opt->dim, opt->normalized != 0);
      if (opt->spectral_rescale) x = kkmds::scaled_layout(x, kkmds::stress_optimal_scale(x, d));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      run->stress = kkmds::stress(x, d);
      run->trials.push_back({0, opt->seed, run->stress, kkmds::normalized_stress(run->stress, d.size()), secs});
      run->layout.x = std::move(x);
    } else {
      embed_on_metric(d, *opt, *run);
    }
    *out = run.release();
  });
}

kkmds_status kkmds_embed_metric(const kkmds_metric* d, const kkmds_embed_options* opt, kkmds_run** out) {
  return guard([&] {
    require(d, "metric");
    require(opt, "options");
    require(out, "out");
    auto run = std::make_unique<kkmds_run>();
    embed_on_metric(d->d, *opt, *run);
    *out = run.release();
  });
}

const kkmds_layout* kkmds_run_layout(const kkmds_run* r) { return r ? &r->layout : nullptr; }
double kkmds_run_stress(const kkmds_run* r) { return r ? r->stress : std::nan(""); }

kkmds_status kkmds_run_trials_csv(const kkmds_run* r, char** out) {
  return guard([&] {
    require(r, "run");
    require(out, "out");
    *out = dup(kkmds::trials_to_csv(r->trials));
  });
}

void kkmds_run_free(kkmds_run* r) { delete r; }

void kkmds_energy_lower_bound(size_t n, double diameter, size_t dim, double* out, int* applicable) {
  const auto b = kkmds::energy_lower_bound(n, diameter, dim);
  if (applicable) *applicable = b ? 1 : 0;
  if (out) *out = b ? *b : kkmds::energy_lower_bound_formula(n, diameter, dim);
}

kkmds_status kkmds_diameter_upper_bound(double diameter, double* out) {
  return guard([&] {
    require(out, "out");
    *out = kkmds::diameter_upper_bound(diameter);
  });
}

kkmds_status kkmds_check(const kkmds_layout* x, const kkmds_metric* d, double c, size_t kmax, char** out) {
  return guard([&] {
    require(x, "layout");
    require(d, "metric");
    require(out, "out");
    std::optional<kkmds::ConcentrationSpec> conc;
    if (kmax > 0) conc = kkmds::ConcentrationSpec{c, kmax};
    *out = dup(kkmds::structural_report(x->x, d->d, conc).to_json());
  });
}

kkmds_status kkmds_render_svg(const kkmds_layout* x, const kkmds_graph* g, int draw_edges, const char* title,
                              double normalized_stress, char** out) {
  return guard([&] {
    require(x, "layout");
    require(out, "out");
    kkmds::SvgOptions so;
    if (g != nullptr) {
      if (draw_edges) so.edges = &g->g;
      so.labels = g->g.labels();
    }
    if (title != nullptr) so.title = title;
    if (!std::isnan(normalized_stress)) so.normalized_stress = normalized_stress;
    *out = dup(kkmds::render_svg(x->x, so));
  });
}

void kkmds_gadget_params_default(kkmds_gadget_params* p) {
  if (p == nullptr) return;
  const kkmds::GadgetParams d;
  *p = {d.nv, d.nt, d.nc};
}

kkmds_status kkmds_sat_parse(const char* text, kkmds_sat** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new kkmds_sat{kkmds::parse_sat(text)};
  });
}

kkmds_status kkmds_sat_format(const kkmds_sat* s, char** out) {
  return guard([&] {
    require(s, "sat");
    require(out, "out");
    *out = dup(kkmds::format_sat(s->s));
  });
}

kkmds_status kkmds_sat_regularize(const kkmds_sat* s, kkmds_sat** out) {
  return guard([&] {
    require(s, "sat");
    require(out, "out");
    *out = new kkmds_sat{kkmds::regularize(s->s)};
  });
}

kkmds_status kkmds_sat_check_regular(const kkmds_sat* s, int* ok, char** failure) {
  return guard([&] {
    require(s, "sat");
    require(ok, "ok");
    const auto r = kkmds::check_regular(s->s);
    *ok = r.ok() ? 1 : 0;
    if (failure != nullptr) *failure = dup(r.failure);
  });
}

size_t kkmds_sat_num_vars(const kkmds_sat* s) { return s ? s->s.num_vars : 0; }
size_t kkmds_sat_num_clauses(const kkmds_sat* s) { return s ? s->s.clauses.size() : 0; }

kkmds_status kkmds_sat_all_equal_count(const kkmds_sat* s, const unsigned char* assignment, size_t* out) {
  return guard([&] {
    require(s, "sat");
    require(out, "out");
    if (assignment == nullptr && s->s.num_vars > 0) kkmds::throw_parameter("assignment must not be NULL");
    std::vector<bool> a(s->s.num_vars);
    for (size_t i = 0; i < a.size(); ++i) a[i] = assignment[i] != 0;
    *out = kkmds::all_equal_count(s->s, a);
  });
}

void kkmds_sat_free(kkmds_sat* s) { delete s; }

kkmds_status kkmds_gadget_build(const kkmds_sat* s, const kkmds_gadget_params* p, kkmds_graph** out) {
  return guard([&] {
    require(s, "sat");
    require(out, "out");
    *out = new kkmds_graph{kkmds::build_reduction_graph(s->s, gadget_params(p)).graph};
  });
}

kkmds_status kkmds_gadget_verify(const kkmds_graph* g, const kkmds_sat* s, const kkmds_gadget_params* p, int* ok,
                                 char** out) {
  return guard([&] {
    require(g, "graph");
    require(s, "sat");
    const auto r = kkmds::verify_gadget(g->g, s->s, gadget_params(p));
    if (ok != nullptr) *ok = r.ok() ? 1 : 0;
    if (out != nullptr) *out = dup(r.to_json());
  });
}

kkmds_status kkmds_gadget_probe(const kkmds_sat* s, const kkmds_gadget_params* p, size_t trials, uint64_t seed,
                                char** out) {
  return guard([&] {
    require(s, "sat");
    require(out, "out");
    kkmds::ProbeOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    *out = dup(kkmds::gap_probe(s->s, gadget_params(p), opt).to_json());
  });
}

kkmds_status kkmds_bench(const char* suite, size_t trials, uint64_t seed, size_t threads, const char* dir, int force,
                         char** csv) {
  return guard([&] {
    require(suite, "suite");
    require(dir, "dir");
    kkmds::BenchOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    opt.threads = threads;
    const std::filesystem::path path(dir);
    if (std::filesystem::exists(path / "results.csv") && !force)
      kkmds::throw_io(path.string() + " already holds results.csv; pass --force to overwrite");
    const auto report = kkmds::run_bench(suite, opt);
    kkmds::write_bench(report, path, force != 0);
    if (csv != nullptr) *csv = dup(report.to_csv());
  });
}

}  // extern "C"
