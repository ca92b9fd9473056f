#include "mstlab/mstlab.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "distribution.hpp"
#include "experiments.hpp"
#include "graph.hpp"
#include "kruskal.hpp"
#include "oracle.hpp"
#include "starpath.hpp"
#include "subgraph.hpp"
#include "tree.hpp"

using mstlab::Error;

struct mstlab_graph {
  mstlab::Graph g;
};
struct mstlab_subgraph {
  mstlab::Subgraph h;
};
struct mstlab_trace {
  mstlab::PipelineResult pr;
};

namespace {

thread_local std::string g_last_error;

int code_of(Error::Code c) {
  switch (c) {
    case Error::Code::invalid_argument:
      return MSTLAB_EINVAL;
    case Error::Code::domain:
      return MSTLAB_EDOMAIN;
    case Error::Code::io:
      return MSTLAB_EIO;
    case Error::Code::internal:
      return MSTLAB_EINTERNAL;
  }
  return MSTLAB_EINTERNAL;
}

template <typename F>
int guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return MSTLAB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MSTLAB_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return MSTLAB_EINTERNAL;
  }
}

int invalid(const char* what) {
  g_last_error = what;
  return MSTLAB_EINVAL;
}

}  // namespace

extern "C" {

const char* mstlab_version(void) { return "0.1.0"; }

const char* mstlab_strerror(int code) {
  switch (code) {
    case MSTLAB_OK:
      return "ok";
    case MSTLAB_EINVAL:
      return "invalid argument";
    case MSTLAB_EDOMAIN:
      return "domain error";
    case MSTLAB_EIO:
      return "io error";
    case MSTLAB_EINTERNAL:
      return "internal error";
    default:
      return "unknown error code";
  }
}

const char* mstlab_last_error(void) { return g_last_error.c_str(); }

int mstlab_graph_sample(int n, const char* dist, uint64_t seed,
                        mstlab_graph** out) {
  if (!dist || !out) return invalid("null argument");
  return guarded([&] {
    *out = new mstlab_graph{
        mstlab::Graph::sample(n, mstlab::parse_distribution(dist), seed)};
  });
}

int mstlab_graph_fixed(int n, const double* weights, size_t count,
                       mstlab_graph** out) {
  if (!weights || !out) return invalid("null argument");
  return guarded([&] {
    *out = new mstlab_graph{
        mstlab::Graph::fixed(n, std::vector<double>(weights, weights + count))};
  });
}

int mstlab_graph_load(const char* path, mstlab_graph** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new mstlab_graph{mstlab::Graph::load(path)}; });
}

void mstlab_graph_free(mstlab_graph* g) { delete g; }

int mstlab_graph_order(const mstlab_graph* g) {
  if (!g) return -MSTLAB_EINVAL;
  return g->g.n();
}

int mstlab_graph_weight(const mstlab_graph* g, int u, int v, double* out) {
  if (!g || !out) return invalid("null argument");
  if (u == v || u < 0 || v < 0 || u >= g->g.n() || v >= g->g.n())
    return invalid("vertex pair out of range");
  return guarded([&] { *out = g->g.weight(u, v); });
}

int mstlab_graph_rho_star(const mstlab_graph* g, double* out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] { *out = g->g.rho_star(); });
}

int mstlab_start_graph(const char* kind, int n, uint64_t seed,
                       mstlab_subgraph** out) {
  if (!kind || !out) return invalid("null argument");
  return guarded([&] {
    *out = new mstlab_subgraph{
        mstlab::Subgraph::make_start(mstlab::parse_start_kind(kind), n, seed)};
  });
}

int mstlab_mst(const mstlab_graph* g, mstlab_subgraph** out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] { *out = new mstlab_subgraph{mstlab::mst(g->g)}; });
}

void mstlab_subgraph_free(mstlab_subgraph* h) { delete h; }

int mstlab_subgraph_order(const mstlab_subgraph* h) {
  if (!h) return -MSTLAB_EINVAL;
  return h->h.n();
}

int mstlab_subgraph_has_edge(const mstlab_subgraph* h, int u, int v) {
  if (!h) return -MSTLAB_EINVAL;
  if (u < 0 || v < 0 || u >= h->h.n() || v >= h->h.n())
    return -invalid("vertex pair out of range");
  return h->h.has(u, v) ? 1 : 0;
}

int64_t mstlab_subgraph_edge_count(const mstlab_subgraph* h) {
  if (!h) return -MSTLAB_EINVAL;
  return static_cast<int64_t>(h->h.edge_count_set());
}

int mstlab_subgraph_total_weight(const mstlab_graph* g,
                                 const mstlab_subgraph* h, double* out) {
  if (!g || !h || !out) return invalid("null argument");
  return guarded([&] { *out = h->h.total_weight(g->g); });
}

int mstlab_wdiam(const mstlab_graph* g, const mstlab_subgraph* tree,
                 double* out) {
  if (!g || !tree || !out) return invalid("null argument");
  return guarded([&] { *out = mstlab::wdiam(mstlab::TreeView(g->g, tree->h)); });
}

int mstlab_pipeline(const mstlab_graph* g, const mstlab_subgraph* h,
                    mstlab_trace** out) {
  if (!g || !h || !out) return invalid("null argument");
  return guarded(
      [&] { *out = new mstlab_trace{mstlab::full_pipeline(g->g, h->h)}; });
}

void mstlab_trace_free(mstlab_trace* t) { delete t; }

int64_t mstlab_trace_steps(const mstlab_trace* t) {
  if (!t) return -MSTLAB_EINVAL;
  return static_cast<int64_t>(t->pr.trace.steps());
}

int mstlab_trace_wt_max(const mstlab_trace* t, double* out) {
  if (!t || !out) return invalid("null argument");
  *out = t->pr.trace.wt_max;
  return MSTLAB_OK;
}

int mstlab_trace_reached_mst(const mstlab_trace* t) {
  if (!t) return -MSTLAB_EINVAL;
  return t->pr.trace.reached_mst ? 1 : 0;
}

int mstlab_trace_step_weight(const mstlab_trace* t, int64_t i, double* out) {
  if (!t || !out) return invalid("null argument");
  if (i < 0 || i >= static_cast<int64_t>(t->pr.trace.step_weights.size()))
    return invalid("step index out of range");
  *out = t->pr.trace.step_weights[static_cast<size_t>(i)];
  return MSTLAB_OK;
}

int mstlab_trace_witness_kind(const mstlab_trace* t) {
  if (!t) return -MSTLAB_EINVAL;
  return static_cast<int>(t->pr.witness_kind);
}

int mstlab_trace_witness_size(const mstlab_trace* t) {
  if (!t) return -MSTLAB_EINVAL;
  return t->pr.witness_size;
}

int mstlab_trace_used_fallback(const mstlab_trace* t) {
  if (!t) return -MSTLAB_EINVAL;
  return t->pr.fallback ? 1 : 0;
}

int mstlab_exact_cost(const mstlab_graph* g, const mstlab_subgraph* h,
                      int force, double* out) {
  if (!g || !h || !out) return invalid("null argument");
  return guarded([&] { *out = mstlab::exact_cost(g->g, h->h, force != 0); });
}

int mstlab_reachable_under(const mstlab_graph* g, const mstlab_subgraph* h,
                           double rho, int force, int* out) {
  if (!g || !h || !out) return invalid("null argument");
  return guarded(
      [&] { *out = mstlab::reachable_under(g->g, h->h, rho, force != 0); });
}

int mstlab_run_command(const char* command, const char* config_text,
                       const char* csv_path, const char* json_path,
                       char* errbuf, size_t errcap) {
  if (errbuf && errcap > 0) errbuf[0] = '\0';
  int rc = guarded([&] {
    mstlab::ExperimentConfig cfg =
        mstlab::parse_config_text(config_text ? config_text : "");
    if (command) cfg.command = command;
    if (csv_path) cfg.out_csv = csv_path;
    if (json_path) cfg.out_json = json_path;
    mstlab::CommandResult res = mstlab::run_command(cfg);
    auto write_out = [](const std::string& path, const std::string& data) {
      if (path == "-") {
        std::fwrite(data.data(), 1, data.size(), stdout);
        return;
      }
      std::ofstream out(path, std::ios::binary);
      if (!out) mstlab::fail_io("cannot write " + path);
      out << data;
    };
    if (!cfg.out_csv.empty()) write_out(cfg.out_csv, res.csv);
    if (!cfg.out_json.empty()) write_out(cfg.out_json, res.json);
  });
  if (rc != MSTLAB_OK && errbuf && errcap > 0) {
    std::strncpy(errbuf, g_last_error.c_str(), errcap - 1);
    errbuf[errcap - 1] = '\0';
  }
  return rc;
}

}  // extern "C"
