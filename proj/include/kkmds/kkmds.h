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

#ifndef KKMDS_KKMDS_H
#define KKMDS_KKMDS_H

#include <stddef.h>
#include <stdint.h>

#if defined(KKMDS_BUILDING_LIBRARY)
#define KKMDS_API __attribute__((visibility("default")))
#else
#define KKMDS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum kkmds_status {
  KKMDS_OK = 0,
  KKMDS_E_PARAMETER = 1,
  KKMDS_E_PARSE = 2,
  KKMDS_E_INVARIANT = 3,
  KKMDS_E_RESOURCE = 4,
  KKMDS_E_IO = 5,
  KKMDS_E_INTERNAL = 6
} kkmds_status;

typedef struct kkmds_graph kkmds_graph;
typedef struct kkmds_metric kkmds_metric;
typedef struct kkmds_layout kkmds_layout;
typedef struct kkmds_sat kkmds_sat;
typedef struct kkmds_run kkmds_run;

KKMDS_API const char* kkmds_version(void);
KKMDS_API const char* kkmds_status_name(kkmds_status status);

/* Message of the last failed call on this thread; "" after a success. */
KKMDS_API const char* kkmds_last_error(void);

/* Frees strings returned through char** out-parameters. */
KKMDS_API void kkmds_string_free(char* s);

/* Graphs */
KKMDS_API kkmds_status kkmds_graph_parse(const char* text, kkmds_graph** out);
KKMDS_API kkmds_status kkmds_graph_format(const kkmds_graph* g, char** out);
KKMDS_API kkmds_status kkmds_graph_set_labels(kkmds_graph* g, const char* text);
/* Empty string when the graph carries no labels. */
KKMDS_API kkmds_status kkmds_graph_format_labels(const kkmds_graph* g, char** out);
KKMDS_API size_t kkmds_graph_vertex_count(const kkmds_graph* g);
KKMDS_API size_t kkmds_graph_edge_count(const kkmds_graph* g);
KKMDS_API int kkmds_graph_is_connected(const kkmds_graph* g);
KKMDS_API void kkmds_graph_free(kkmds_graph* g);

KKMDS_API kkmds_status kkmds_gen_watts_strogatz(size_t n, size_t k, double beta, uint64_t seed, kkmds_graph** out);
/* probs is a row-major blocks x blocks matrix. */
KKMDS_API kkmds_status kkmds_gen_sbm(const size_t* sizes, size_t blocks, const double* probs, uint64_t seed,
                                     kkmds_graph** out);
KKMDS_API kkmds_status kkmds_gen_clique_path(size_t cliques, size_t clique_size, kkmds_graph** out);
KKMDS_API kkmds_status kkmds_gen_complete(size_t n, kkmds_graph** out);
KKMDS_API kkmds_status kkmds_gen_cycle(size_t n, kkmds_graph** out);
KKMDS_API kkmds_status kkmds_gen_path(size_t n, kkmds_graph** out);
KKMDS_API kkmds_status kkmds_gen_davis(kkmds_graph** out);

/* Metrics */
KKMDS_API kkmds_status kkmds_metric_from_graph(const kkmds_graph* g, kkmds_metric** out);
KKMDS_API kkmds_status kkmds_metric_parse_csv(const char* text, kkmds_metric** out);
KKMDS_API size_t kkmds_metric_size(const kkmds_metric* d);
KKMDS_API double kkmds_metric_diameter(const kkmds_metric* d);
KKMDS_API double kkmds_metric_at(const kkmds_metric* d, size_t i, size_t j);
KKMDS_API void kkmds_metric_free(kkmds_metric* d);

/* Layouts */
KKMDS_API kkmds_status kkmds_layout_create(size_t n, size_t dim, const double* coords, kkmds_layout** out);
KKMDS_API kkmds_status kkmds_layout_parse_json(const char* text, kkmds_layout** out);
/* JSON with stress fields computed against d. */
KKMDS_API kkmds_status kkmds_layout_to_json(const kkmds_layout* x, const kkmds_metric* d, char** out);
KKMDS_API size_t kkmds_layout_size(const kkmds_layout* x);
KKMDS_API size_t kkmds_layout_dim(const kkmds_layout* x);
/* Row-major view of size * dim values, valid until the layout is freed. */
KKMDS_API const double* kkmds_layout_coords(const kkmds_layout* x);
KKMDS_API kkmds_status kkmds_layout_stress(const kkmds_layout* x, const kkmds_metric* d, double* out);
KKMDS_API kkmds_status kkmds_clique_optimal(size_t n, kkmds_layout** out);
KKMDS_API void kkmds_layout_free(kkmds_layout* x);

/* Embedding */
typedef enum kkmds_algo {
  KKMDS_ALGO_GREEDY = 0,
  KKMDS_ALGO_GRAD = 1,
  KKMDS_ALGO_GREEDY_GRAD = 2,
  KKMDS_ALGO_SPECTRAL = 3
} kkmds_algo;

typedef struct kkmds_embed_options {
  kkmds_algo algo;
  size_t dim;
  double radius;
  double eps1;
  size_t t0;
  double lr;
  size_t steps;
  size_t trials;
  uint64_t seed;
  size_t threads;          /* 0 = MDS_THREADS or 1 */
  int symmetry_reduction;  /* greedy only */
  int normalized;          /* spectral: degree-normalised Laplacian */
  int spectral_rescale;    /* spectral: scale to the stress-optimal size */
} kkmds_embed_options;

KKMDS_API void kkmds_embed_options_default(kkmds_embed_options* opt);
KKMDS_API kkmds_status kkmds_algo_parse(const char* name, kkmds_algo* out);

KKMDS_API kkmds_status kkmds_embed(const kkmds_graph* g, const kkmds_embed_options* opt, kkmds_run** out);
/* Same on an explicit metric; spectral is not available here. */
KKMDS_API kkmds_status kkmds_embed_metric(const kkmds_metric* d, const kkmds_embed_options* opt, kkmds_run** out);
/* Borrowed; valid until the run is freed. */
KKMDS_API const kkmds_layout* kkmds_run_layout(const kkmds_run* r);
KKMDS_API double kkmds_run_stress(const kkmds_run* r);
/* trial,seed,stress,normalized_stress,seconds */
KKMDS_API kkmds_status kkmds_run_trials_csv(const kkmds_run* r, char** out);
KKMDS_API void kkmds_run_free(kkmds_run* r);

/* Structural diagnostics */
/* *applicable is 0 when the diameter hypothesis fails; *out then holds the raw formula. */
KKMDS_API void kkmds_energy_lower_bound(size_t n, double diameter, size_t dim, double* out, int* applicable);
KKMDS_API kkmds_status kkmds_diameter_upper_bound(double diameter, double* out);
/* kmax = 0 omits the concentration rows. */
KKMDS_API kkmds_status kkmds_check(const kkmds_layout* x, const kkmds_metric* d, double c, size_t kmax, char** out);

/* SVG; g may be NULL (no edges). normalized_stress is omitted when NaN. */
KKMDS_API kkmds_status kkmds_render_svg(const kkmds_layout* x, const kkmds_graph* g, int draw_edges, const char* title,
                                        double normalized_stress, char** out);

/* SAT instances and gadgets */
typedef struct kkmds_gadget_params {
  size_t nv;
  size_t nt;
  size_t nc;
} kkmds_gadget_params;

KKMDS_API void kkmds_gadget_params_default(kkmds_gadget_params* p);
KKMDS_API kkmds_status kkmds_sat_parse(const char* text, kkmds_sat** out);
KKMDS_API kkmds_status kkmds_sat_format(const kkmds_sat* s, char** out);
KKMDS_API kkmds_status kkmds_sat_regularize(const kkmds_sat* s, kkmds_sat** out);
/* *ok set to 1 when regular; *failure (may be NULL) receives the first failed check. */
KKMDS_API kkmds_status kkmds_sat_check_regular(const kkmds_sat* s, int* ok, char** failure);
KKMDS_API size_t kkmds_sat_num_vars(const kkmds_sat* s);
KKMDS_API size_t kkmds_sat_num_clauses(const kkmds_sat* s);
/* assignment holds num_vars bytes, nonzero = true. */
KKMDS_API kkmds_status kkmds_sat_all_equal_count(const kkmds_sat* s, const unsigned char* assignment, size_t* out);
KKMDS_API void kkmds_sat_free(kkmds_sat* s);

/* The graph carries role labels: 0 anchor, 1 literal, 2 clause. */
KKMDS_API kkmds_status kkmds_gadget_build(const kkmds_sat* s, const kkmds_gadget_params* p, kkmds_graph** out);
/* JSON report; *ok is 1 when every invariant holds. */
KKMDS_API kkmds_status kkmds_gadget_verify(const kkmds_graph* g, const kkmds_sat* s, const kkmds_gadget_params* p,
                                           int* ok, char** out);
KKMDS_API kkmds_status kkmds_gadget_probe(const kkmds_sat* s, const kkmds_gadget_params* p, size_t trials,
                                          uint64_t seed, char** out);

/* Bench: writes results.csv and SVGs into dir; *csv (may be NULL) receives results.csv. */
KKMDS_API kkmds_status kkmds_bench(const char* suite, size_t trials, uint64_t seed, size_t threads, const char* dir,
                                   int force, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* KKMDS_KKMDS_H */
