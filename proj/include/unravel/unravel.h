// Copyright 2026 The unravel Authors
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

#ifndef UNRAVEL_UNRAVEL_H_
#define UNRAVEL_UNRAVEL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UNR_API
#elif defined(UNRAVEL_BUILDING_LIBRARY)
#define UNR_API __attribute__((visibility("default")))
#else
#define UNR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum unr_status {
  UNR_OK = 0,
  UNR_E_INVALID_ARGUMENT = 1,
  UNR_E_IO = 2,
  UNR_E_PARSE = 3,
  UNR_E_PRECONDITION = 4,
  UNR_E_CAP_EXCEEDED = 5,
  UNR_E_NOT_CONVERGED = 6,
  UNR_E_RETRY_LIMIT = 7,
  UNR_E_INTERNAL = 8
} unr_status;

/* Opaque immutable graph. */
typedef struct unr_graph unr_graph;

UNR_API const char* unr_version(void);
UNR_API const char* unr_status_string(unr_status status);
/* Message for the last failing call on this thread; "" if none. */
UNR_API const char* unr_last_error(void);
/* Frees strings returned through char** out-parameters. */
UNR_API void unr_string_free(char* s);

/* Graphs. ".json" paths use the JSON format, anything else an edge list. */
UNR_API unr_status unr_graph_load(const char* path, unr_graph** out);
UNR_API unr_status unr_graph_save(const unr_graph* g, const char* path);
/* edges holds edge_count (u, v) pairs. */
UNR_API unr_status unr_graph_from_edges(size_t vertex_count, const uint32_t* edges, size_t edge_count,
                                        unr_graph** out);
/* spec_json is a GenSpec object such as {"family":"cycle","n":5}. name_out
   and meta_out (spec plus degree statistics) are optional. */
UNR_API unr_status unr_graph_generate(const char* spec_json, unr_graph** out, char** name_out,
                                      char** meta_out);
UNR_API void unr_graph_free(unr_graph* g);
UNR_API size_t unr_graph_vertex_count(const unr_graph* g);
UNR_API size_t unr_graph_edge_count(const unr_graph* g);
UNR_API unr_status unr_graph_to_json(const unr_graph* g, char** out);

/* Spectra. tol <= 0 selects the default 1e-10. */
UNR_API unr_status unr_spectral_radius(const unr_graph* g, double tol, double* value, double* residual);
UNR_API unr_status unr_second_eigenvalue(const unr_graph* g, double tol, double* value);
UNR_API unr_status unr_smallest_eigenvalue(const unr_graph* g, double tol, double* value);

/* Unraveled balls. cap = 0 selects the default node cap. */
UNR_API unr_status unr_unraveled_ball_radius(const unr_graph* g, uint32_t v, size_t r, uint64_t cap,
                                             double* value, uint64_t* node_count);
UNR_API unr_status unr_unraveled_ball_export(const unr_graph* g, uint32_t v, size_t r, uint64_t cap,
                                             const char* edges_path, const char* labels_path);

/* JSON array of the six bound reports for radius r. */
UNR_API unr_status unr_evaluate_bounds(const unr_graph* g, size_t r, double slack_tol, char** out);

/* Runs a verification sweep described by a RunConfig JSON object and
   writes its outputs when "out" is set. summary_out is optional;
   violation is set to 1 iff some report failed with its hypothesis met. */
UNR_API unr_status unr_verify(const char* config_json, char** summary_out, int* violation);

/* format is "json", "csv" or "text". ok reports the table's own checks. */
UNR_API unr_status unr_converge(const unr_graph* g, uint32_t v, size_t max_length, const char* format,
                                char** out, int* ok);
UNR_API unr_status unr_cover(const unr_graph* g, size_t r_max, uint64_t cap, const char* format, char** out,
                             int* ok);

/* Summarizes a reports.json file; format is "json" or "csv". */
UNR_API unr_status unr_report(const char* reports_path, const char* format, char** out, int* violation);

#ifdef __cplusplus
}
#endif

#endif
