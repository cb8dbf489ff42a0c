/*
 * Copyright 2026 The dsg Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the dsg library. All objects are opaque handles; every
 * fallible call returns a dsg_status and, on failure, records a message
 * retrievable with dsg_last_error() on the calling thread. Strings returned
 * through char** out-parameters are owned by the caller and must be released
 * with dsg_string_free().
 */

#ifndef DSG_DSG_H_
#define DSG_DSG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(DSG_BUILDING_LIBRARY)
#define DSG_API __attribute__((visibility("default")))
#else
#define DSG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsg_status {
  DSG_OK = 0,
  DSG_E_PARSE = 1,
  DSG_E_DOMAIN = 2,
  DSG_E_ACTION = 3,
  DSG_E_ORDER_CAP = 4,
  DSG_E_SUBGROUP_CAP = 5,
  DSG_E_NOT_NORMAL = 6,
  DSG_E_BUDGET = 7,
  DSG_E_IO = 8,
  DSG_E_INTERNAL = 9,
  DSG_E_INVALID_ARGUMENT = 10
} dsg_status;

typedef enum dsg_graph_kind {
  DSG_GRAPH_GAMMA = 0,
  DSG_GRAPH_DELTA = 1,
  DSG_GRAPH_DIFFERENCE = 2,
  DSG_GRAPH_DIFFERENCE_STAR = 3
} dsg_graph_kind;

typedef enum dsg_format { DSG_FORMAT_JSON = 0, DSG_FORMAT_TEXT = 1, DSG_FORMAT_DOT = 2 } dsg_format;

typedef enum dsg_tier { DSG_TIER_FAST = 0, DSG_TIER_STANDARD = 1, DSG_TIER_LONG = 2 } dsg_tier;

typedef enum dsg_cache_outcome {
  DSG_CACHE_DISABLED = 0,
  DSG_CACHE_HIT = 1,
  DSG_CACHE_MISS = 2,
  DSG_CACHE_CORRUPT = 3
} dsg_cache_outcome;

typedef struct dsg_group dsg_group;
typedef struct dsg_lattice dsg_lattice;
typedef struct dsg_graph dsg_graph;

typedef struct dsg_run_options {
  dsg_tier tier;
  const char* theorem_filter; /* comma-separated ids, or NULL for all */
  uint32_t threads;           /* 0 is treated as 1 */
  uint64_t clique_budget;     /* 0 selects the default */
  uint64_t independence_budget;
  const char* cache_dir; /* NULL or "" disables the cache */
} dsg_run_options;

DSG_API const char* dsg_version(void);
DSG_API const char* dsg_last_error(void);
DSG_API void dsg_string_free(char* s);
DSG_API void dsg_run_options_init(dsg_run_options* options);

/* Groups. `spec` is a constructor expression or a label from the manifest.
 * `manifest_text` supplies labels and semidirect actions; NULL selects the
 * built-in manifest. `order_cap` of 0 selects the default cap. */
DSG_API dsg_status dsg_group_create(const char* spec, const char* manifest_text,
                                    uint64_t order_cap, dsg_group** out);
DSG_API void dsg_group_free(dsg_group* group);
DSG_API dsg_status dsg_group_order(const dsg_group* group, uint64_t* out);
DSG_API dsg_status dsg_group_degree(const dsg_group* group, uint64_t* out);
DSG_API dsg_status dsg_group_content_hash(const dsg_group* group, uint64_t* out);

/* Subgroup lattices. `cache_dir` may be NULL or "" to disable caching. */
DSG_API dsg_status dsg_lattice_create(const dsg_group* group, const char* cache_dir,
                                      dsg_lattice** out);
DSG_API void dsg_lattice_free(dsg_lattice* lattice);
DSG_API dsg_status dsg_lattice_subgroup_count(const dsg_lattice* lattice, uint64_t* out);
DSG_API dsg_status dsg_lattice_cache_outcome(const dsg_lattice* lattice, dsg_cache_outcome* out,
                                             char** warning);
/* Order, degree, subgroup counts and classification flags (JSON or text). */
DSG_API dsg_status dsg_lattice_group_info(const dsg_lattice* lattice, dsg_format format,
                                          char** out);
DSG_API dsg_status dsg_lattice_write(const dsg_lattice* lattice, dsg_format format, char** out);

/* Graphs on the nontrivial proper subgroups. */
DSG_API dsg_status dsg_graph_create(const dsg_lattice* lattice, dsg_graph_kind kind,
                                    dsg_graph** out);
DSG_API void dsg_graph_free(dsg_graph* graph);
DSG_API dsg_status dsg_graph_vertex_count(const dsg_graph* graph, uint64_t* out);
DSG_API dsg_status dsg_graph_edge_count(const dsg_graph* graph, uint64_t* out);
DSG_API dsg_status dsg_graph_write(const dsg_graph* graph, dsg_format format, char** out);
/* Budgets of 0 select the defaults. */
DSG_API dsg_status dsg_graph_analyze(const dsg_graph* graph, uint64_t clique_budget,
                                     uint64_t independence_budget, dsg_format format, char** out);
/* *out is 1 when isomorphic, 0 otherwise; DSG_E_BUDGET when undecided. */
DSG_API dsg_status dsg_graph_isomorphic(const dsg_graph* a, const dsg_graph* b, uint64_t budget,
                                        int* out);
DSG_API dsg_status dsg_graph_kind_parse(const char* name, dsg_graph_kind* out);

/* Corpus runs. `manifest_text` NULL selects the built-in manifest and NULL
 * `options` the defaults of dsg_run_options_init().
 * `exit_code` receives 0 (clean), 2 (counterexample) or 3 (unverified). */
DSG_API dsg_status dsg_verify(const char* manifest_text, const dsg_run_options* options,
                              dsg_format format, char** out, int* exit_code);
DSG_API dsg_status dsg_registry(dsg_format format, char** out);
/* Hunt ids are "H-1" to "H-5"; `counterexamples` receives their count. */
DSG_API dsg_status dsg_hunt(const char* hunt_id, const char* manifest_text,
                            const dsg_run_options* options, dsg_format format, char** out,
                            uint64_t* counterexamples);
/* Cache warnings produced by the last dsg_verify on this thread, one per
 * line; empty when there were none. */
DSG_API dsg_status dsg_last_warnings(char** out);
DSG_API dsg_status dsg_default_manifest(char** out);
/* Labels admitted by a tier, one per line. */
DSG_API dsg_status dsg_corpus_labels(const char* manifest_text, dsg_tier tier, char** out);
/* Re-runs the order-32 action scan; returns the action table and spec. */
DSG_API dsg_status dsg_gap_scan(char** action, char** spec);

#ifdef __cplusplus
}
#endif

#endif /* DSG_DSG_H_ */
