#ifndef MSTLAB_H
#define MSTLAB_H

/* C interface to the random-MST local-search laboratory. All functions
 * return MSTLAB_OK or an error code; mstlab_last_error() describes the most
 * recent failure on the calling thread. Handles are opaque and owned by the
 * caller via the matching _free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define MSTLAB_OK 0
#define MSTLAB_EINVAL 1
#define MSTLAB_EDOMAIN 2
#define MSTLAB_EIO 3
#define MSTLAB_EINTERNAL 4

typedef struct mstlab_graph mstlab_graph;
typedef struct mstlab_subgraph mstlab_subgraph;
typedef struct mstlab_trace mstlab_trace;

const char* mstlab_version(void);
const char* mstlab_strerror(int code);
/* Message from the last failing call on this thread; empty if none. */
const char* mstlab_last_error(void);

/* Complete graph with one weight per unordered pair. dist is a spec string:
 * "uniform", "uniform:b", "truncexp:rate,hi", "pwlinear:f0,hi". */
int mstlab_graph_sample(int n, const char* dist, uint64_t seed,
                        mstlab_graph** out);
/* weights holds n(n-1)/2 entries, pair (u,v), u < v, at v(v-1)/2 + u. */
int mstlab_graph_fixed(int n, const double* weights, size_t count,
                       mstlab_graph** out);
int mstlab_graph_load(const char* path, mstlab_graph** out);
void mstlab_graph_free(mstlab_graph* g);
int mstlab_graph_order(const mstlab_graph* g);
int mstlab_graph_weight(const mstlab_graph* g, int u, int v, double* out);
int mstlab_graph_rho_star(const mstlab_graph* g, double* out);

/* kind: "path", "star", "clique", "tree" (uniform random spanning tree). */
int mstlab_start_graph(const char* kind, int n, uint64_t seed,
                       mstlab_subgraph** out);
int mstlab_mst(const mstlab_graph* g, mstlab_subgraph** out);
void mstlab_subgraph_free(mstlab_subgraph* h);
int mstlab_subgraph_order(const mstlab_subgraph* h);
/* 1, 0, or a negative error code. */
int mstlab_subgraph_has_edge(const mstlab_subgraph* h, int u, int v);
int64_t mstlab_subgraph_edge_count(const mstlab_subgraph* h);
int mstlab_subgraph_total_weight(const mstlab_graph* g,
                                 const mstlab_subgraph* h, double* out);
/* Weighted diameter of a spanning tree of g. */
int mstlab_wdiam(const mstlab_graph* g, const mstlab_subgraph* tree,
                 double* out);

/* Runs the full construction from start graph h: witness extraction, the
 * witness-restricted phase, then absorption of the remaining vertices. */
int mstlab_pipeline(const mstlab_graph* g, const mstlab_subgraph* h,
                    mstlab_trace** out);
void mstlab_trace_free(mstlab_trace* t);
int64_t mstlab_trace_steps(const mstlab_trace* t);
int mstlab_trace_wt_max(const mstlab_trace* t, double* out);
/* 1, 0, or a negative error code. */
int mstlab_trace_reached_mst(const mstlab_trace* t);
int mstlab_trace_step_weight(const mstlab_trace* t, int64_t i, double* out);
/* 0 clique, 1 star, 2 path; negative error code on null. */
int mstlab_trace_witness_kind(const mstlab_trace* t);
int mstlab_trace_witness_size(const mstlab_trace* t);
int mstlab_trace_used_fallback(const mstlab_trace* t);

/* Exact bottleneck cost to the MST state; n <= 6, or 7 with force. */
int mstlab_exact_cost(const mstlab_graph* g, const mstlab_subgraph* h,
                      int force, double* out);
int mstlab_reachable_under(const mstlab_graph* g, const mstlab_subgraph* h,
                           double rho, int force, int* out);

/* Runs one experiment command. config_text is flat key=value lines;
 * command, csv_path, and json_path override the config's command, out, and
 * summary keys when non-null. A path of "-" writes to stdout. On failure
 * the message is copied into errbuf (if errcap > 0) as well as
 * mstlab_last_error(). */
int mstlab_run_command(const char* command, const char* config_text,
                       const char* csv_path, const char* json_path,
                       char* errbuf, size_t errcap);

#ifdef __cplusplus
}
#endif

#endif /* MSTLAB_H */
