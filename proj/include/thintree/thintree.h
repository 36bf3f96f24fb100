// Copyright 2026 The thintree Authors
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

/* C interface to the thintree library.
 *
 * Objects are opaque handles created by tt_*_load / tt_*_create / tt_reduce
 * and released with the matching tt_*_free. Every fallible call returns a
 * tt_status; on failure tt_last_error_message() describes the error for the
 * calling thread until its next failing call.
 *
 * Cuts cross the boundary as 64-bit masks: bit i set means vertex i is on
 * the side that does not contain vertex 0. Exhaustive routines therefore
 * accept at most 63 vertices.
 */
#ifndef THINTREE_THINTREE_H_
#define THINTREE_THINTREE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(THINTREE_BUILDING_LIBRARY)
#define TT_API __attribute__((visibility("default")))
#else
#define TT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tt_status {
  TT_OK = 0,
  TT_ERR_INVALID_ARGUMENT = 1,
  TT_ERR_INVALID_CUT = 2,
  TT_ERR_INVALID_INSTANCE = 3,
  TT_ERR_INVALID_TREE = 4,
  TT_ERR_GUARD_EXCEEDED = 5,
  TT_ERR_PROTOCOL = 6,
  TT_ERR_INVARIANT_VIOLATION = 7,
  TT_ERR_CONSTRUCTION = 8,
  TT_ERR_DOMAIN = 9,
  TT_ERR_NOT_CLIQUE_RESPECTING = 10,
  TT_ERR_PARSE = 11,
  TT_ERR_IO = 12,
  TT_ERR_OVERFLOW = 13,
  TT_ERR_NULL_POINTER = 100,
  TT_ERR_INTERNAL = 101
} tt_status;

typedef struct tt_rational {
  int64_t num;
  int64_t den; /* > 0 */
} tt_rational;

typedef struct tt_graph tt_graph;   /* multigraph with {-1,+1} weights */
typedef struct tt_tree tt_tree;     /* spanning tree of a tt_graph */
typedef struct tt_gadget tt_gadget; /* reduction output (G', T, alpha) */
typedef struct tt_report tt_report; /* line-oriented check report */

typedef struct tt_verdict {
  int is_thin;
  tt_rational worst_thickness;
  uint64_t worst_cut_mask; /* 0 when is_thin */
} tt_verdict;

typedef struct tt_ttvc_answer {
  int yes; /* 1: the tree is NOT alpha-thin */
  tt_rational max_lifted_thickness;
  uint64_t source_cut_mask; /* certificate, as a cut of the source graph */
  int soundness_warning;    /* multiplier below 24 */
} tt_ttvc_answer;

typedef struct tt_fuzz_config {
  uint64_t seed;
  size_t count;
  size_t max_vertices;
  size_t max_edges; /* 0: no cap */
  size_t multiplier;
  int all_thresholds; /* 0: only k = maxcut and maxcut + 1 */
} tt_fuzz_config;

TT_API const char* tt_version(void);
TT_API const char* tt_status_name(tt_status status);
TT_API const char* tt_last_error_message(void);

/* "p/q" or an integer. */
TT_API tt_status tt_rational_parse(const char* text, tt_rational* out);

/* Graph text format: "p <n> <m>" then m lines "e <u> <v> [<w>]". */
TT_API tt_status tt_graph_load(const char* path, tt_graph** out);
TT_API tt_status tt_graph_parse(const char* text, size_t length,
                                const char* source_name, tt_graph** out);
/* endpoints holds 2*edge_count vertex ids; weights may be NULL (all +1). */
TT_API tt_status tt_graph_create(size_t vertex_count, size_t edge_count,
                                 const uint32_t* endpoints, const int* weights,
                                 tt_graph** out);
TT_API void tt_graph_free(tt_graph* graph);
TT_API size_t tt_graph_vertex_count(const tt_graph* graph);
TT_API size_t tt_graph_edge_count(const tt_graph* graph);
TT_API int tt_graph_is_connected(const tt_graph* graph);

/* Tree text format: "t <k>" then k lines "i <edge_id>". */
TT_API tt_status tt_tree_load(const tt_graph* graph, const char* path,
                              tt_tree** out);
TT_API tt_status tt_tree_create(const tt_graph* graph, const uint32_t* edge_ids,
                                size_t count, tt_tree** out);
TT_API void tt_tree_free(tt_tree* tree);

/* vertex_limit 0 selects the default guard (26). */
TT_API tt_status tt_thickness(const tt_graph* graph, const tt_tree* tree,
                              uint64_t cut_mask, tt_rational* out);
TT_API tt_status tt_verify_thin(const tt_graph* graph, const tt_tree* tree,
                                tt_rational alpha, size_t vertex_limit,
                                tt_verdict* out);
TT_API tt_status tt_max_cut(const tt_graph* graph, size_t vertex_limit,
                            int64_t* value, uint64_t* cut_mask);
TT_API tt_status tt_max_avg_cut(const tt_graph* graph, size_t vertex_limit,
                                tt_rational* value, uint64_t* cut_mask);
TT_API tt_status tt_max_avg_cut_decide(const tt_graph* graph, tt_rational k,
                                       size_t vertex_limit, int* answer);

/* Reductions driven by the exhaustive oracles. */
TT_API tt_status tt_reduce_max_cut(const tt_graph* graph, int64_t k,
                                   int* answer, size_t* iterations);
TT_API tt_status tt_reduce_max_avg_cut(const tt_graph* graph,
                                       tt_rational* value, uint64_t* cut_mask);

/* multiplier 0 selects 24. */
TT_API tt_status tt_reduce(const tt_graph* graph, tt_rational k,
                           size_t multiplier, tt_gadget** out);
TT_API void tt_gadget_free(tt_gadget* gadget);
TT_API size_t tt_gadget_vertex_count(const tt_gadget* gadget);
TT_API size_t tt_gadget_edge_count(const tt_gadget* gadget);
TT_API size_t tt_gadget_clique_size(const tt_gadget* gadget);
TT_API tt_rational tt_gadget_alpha(const tt_gadget* gadget);
TT_API int tt_gadget_is_sound(const tt_gadget* gadget);
/* Writes gadget.graph, gadget.tree and gadget.map into dir. */
TT_API tt_status tt_gadget_write(const tt_gadget* gadget, const char* dir);
TT_API tt_status tt_gadget_decide(const tt_gadget* gadget, tt_ttvc_answer* out);

TT_API tt_status tt_check_lemmas(const tt_graph* graph, tt_rational k,
                                 size_t multiplier, size_t samples,
                                 uint64_t seed, tt_report** out);
TT_API tt_status tt_end_to_end(const tt_graph* graph, int64_t k,
                               size_t multiplier, tt_report** out);
TT_API tt_status tt_fuzz(const tt_fuzz_config* config, tt_report** out);
TT_API const char* tt_report_text(const tt_report* report);
TT_API int tt_report_passed(const tt_report* report);
TT_API void tt_report_free(tt_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* THINTREE_THINTREE_H_ */
