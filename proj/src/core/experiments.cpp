#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "distribution.hpp"
#include "dsu.hpp"
#include "kruskal.hpp"
#include "local_search.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "starpath.hpp"
#include "subgraph.hpp"
#include "tree.hpp"

#ifndef MSTLAB_GIT_DESCRIBE
#define MSTLAB_GIT_DESCRIBE "unknown"
#endif

namespace mstlab {

namespace {

using nlohmann::json;

std::string fd(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_n_list(const std::string& v) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    size_t used = 0;
    int n = std::stoi(item, &used);
    if (used != item.size() || n < 2) fail_invalid("config: bad n value " + item);
    out.push_back(n);
  }
  if (out.empty()) fail_invalid("config: empty n list");
  return out;
}

struct Csv {
  std::string text;
  size_t cols = 0;

  void header(std::initializer_list<const char*> names) {
    cols = names.size();
    bool first = true;
    for (const char* c : names) {
      if (!first) text += ',';
      text += c;
      first = false;
    }
    text += '\n';
  }
  void row(const std::vector<std::string>& cells) {
    if (cells.size() != cols) fail_internal("csv: column mismatch");
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) text += ',';
      text += cells[i];
    }
    text += '\n';
  }
};

std::string fi(long long v) { return std::to_string(v); }
std::string fb(bool v) { return v ? "1" : "0"; }
std::string fu(u64 v) { return std::to_string(v); }

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / double(xs.size());
}

double stddev_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean_of(xs), s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / double(xs.size() - 1));
}

double median_of(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  size_t k = xs.size();
  return k % 2 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

double percentile95(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  size_t idx = static_cast<size_t>(std::floor(0.95 * double(xs.size() - 1)));
  return xs[idx];
}

u64 trial_seed(const ExperimentConfig& cfg, int t) {
  return derive_seed(cfg.seed, static_cast<u64>(t));
}

u64 start_seed(u64 ts) { return derive_seed(ts, 0x51a57ull); }

int default_trials(const std::string& cmd) {
  if (cmd == "zeta3" || cmd == "wdiam-scan") return 50;
  if (cmd == "lower") return 1000;
  if (cmd == "coupling") return 20;
  if (cmd == "appendix" || cmd == "good-sets") return 200;
  if (cmd == "run-index") return 10000;
  return 100;
}

std::vector<int> default_n(const std::string& cmd) {
  if (cmd == "zeta3") return {1000};
  if (cmd == "upper") return {50, 100, 200, 400};
  if (cmd == "lower") return {400};
  if (cmd == "wdiam-scan") return {200, 1000, 5000};
  if (cmd == "coupling") return {50};
  if (cmd == "appendix") return {500};
  if (cmd == "run-index") return {10000};
  if (cmd == "good-sets") return {200, 500, 1000};
  if (cmd == "oracle") return {5};
  return {100};
}

struct Resolved {
  ExperimentConfig cfg;
  DistPtr dist;
};

Resolved resolve(const ExperimentConfig& in) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), in.command) == names.end())
    fail_invalid("config: unknown command " + in.command);
  if (!in.has_seed) fail_invalid("config: seed is required");
  Resolved r;
  r.cfg = in;
  if (r.cfg.n_values.empty()) r.cfg.n_values = default_n(in.command);
  if (r.cfg.trials <= 0) r.cfg.trials = default_trials(in.command);
  r.dist = parse_distribution(r.cfg.dist);
  parse_start_kind(r.cfg.start);
  return r;
}

json config_json(const ExperimentConfig& c) {
  json j;
  j["command"] = c.command;
  j["n"] = c.n_values;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["dist"] = c.dist;
  j["epsilon"] = c.epsilon;
  j["start"] = c.start;
  j["p"] = c.p;
  j["w"] = c.w_threshold;
  j["l"] = c.run_length;
  j["out"] = c.out_csv;
  j["summary"] = c.out_json;
  return j;
}

void cmd_zeta3(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  csv.header({"trial", "seed", "n", "mst_weight"});
  double f0 = r.dist->density_at_zero();
  agg["per_n"] = json::array();
  for (int n : cfg.n_values) {
    std::vector<double> ws;
    for (int t = 0; t < cfg.trials; ++t) {
      TrialRecord rec;
      rec.trial = t;
      rec.seed = trial_seed(cfg, t);
      rec.n = n;
      Graph g = Graph::sample(n, r.dist, rec.seed);
      rec.mst_weight = mst(g).total_weight(g);
      ws.push_back(rec.mst_weight);
      csv.row({fi(rec.trial), fu(rec.seed), fi(rec.n), fd(rec.mst_weight)});
    }
    json e;
    e["n"] = n;
    e["mean"] = mean_of(ws);
    e["stddev"] = stddev_of(ws);
    if (f0 > 0.0) {
      e["target"] = kZeta3 / f0;
      e["abs_err"] = std::abs(mean_of(ws) - kZeta3 / f0);
    }
    agg["per_n"].push_back(e);
  }
}

void cmd_upper(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  StartKind kind = parse_start_kind(cfg.start);
  csv.header({"trial", "seed", "n", "wt_max", "reached_mst", "fallback", "ok"});
  agg["per_n"] = json::array();
  for (int n : cfg.n_values) {
    std::vector<double> wts, times;
    int good = 0, reached = 0, fallbacks = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      TrialRecord rec;
      rec.trial = t;
      rec.seed = trial_seed(cfg, t);
      rec.n = n;
      auto c0 = std::chrono::steady_clock::now();
      Graph g = Graph::sample(n, r.dist, rec.seed);
      Subgraph h = Subgraph::make_start(kind, n, start_seed(rec.seed));
      PipelineResult pr = full_pipeline(g, h);
      rec.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - c0)
                           .count();
      rec.wt_max = pr.trace.wt_max;
      rec.reached_mst = pr.trace.reached_mst;
      bool ok = rec.wt_max <= g.rho_star() + cfg.epsilon;
      wts.push_back(rec.wt_max);
      times.push_back(rec.runtime_ms);
      good += ok;
      reached += rec.reached_mst;
      fallbacks += pr.fallback;
      csv.row({fi(rec.trial), fu(rec.seed), fi(rec.n), fd(rec.wt_max),
               fb(rec.reached_mst), fb(pr.fallback), fb(ok)});
    }
    double rate = double(good) / cfg.trials;
    json e;
    e["n"] = n;
    e["success_rate"] = rate;
    e["sigma"] = std::sqrt(std::max(rate * (1.0 - rate), 0.0) / cfg.trials);
    e["reach_rate"] = double(reached) / cfg.trials;
    e["fallback_rate"] = double(fallbacks) / cfg.trials;
    e["mean_wt_max"] = mean_of(wts);
    e["median_wt_max"] = median_of(wts);
    e["mean_trial_ms"] = mean_of(times);
    agg["per_n"].push_back(e);
  }
}

void cmd_lower(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  StartKind kind = parse_start_kind(cfg.start);
  double delta = (1.0 - cfg.epsilon) * cfg.epsilon / (4.0 * kZeta3);
  csv.header({"trial", "seed", "n", "heavy_count", "count_ok", "weight_floor",
              "mst_weight", "implied_ratio", "ratio_ok"});
  agg["per_n"] = json::array();
  agg["delta"] = delta;
  for (int n : cfg.n_values) {
    int count_good = 0, ratio_bad = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      TrialRecord rec;
      rec.trial = t;
      rec.seed = trial_seed(cfg, t);
      rec.n = n;
      Graph g = Graph::sample(n, r.dist, rec.seed);
      Subgraph h = Subgraph::make_start(kind, n, start_seed(rec.seed));
      HeavyEdgeFloor floor = heavy_edge_floor(g, h, cfg.epsilon);
      rec.heavy_count = static_cast<int>(floor.count);
      rec.mst_weight = mst(g).total_weight(g);
      bool count_ok = double(rec.heavy_count) >= cfg.epsilon * n / 2.0;
      double ratio = floor.weight_floor / (double(n) * rec.mst_weight);
      bool audited = count_ok && rec.mst_weight <= 2.0 * kZeta3;
      bool ratio_ok = !audited || ratio >= delta * (1.0 - 1e-12);
      count_good += count_ok;
      ratio_bad += !ratio_ok;
      csv.row({fi(rec.trial), fu(rec.seed), fi(rec.n), fi(rec.heavy_count),
               fb(count_ok), fd(floor.weight_floor), fd(rec.mst_weight),
               fd(ratio), fb(ratio_ok)});
    }
    json e;
    e["n"] = n;
    e["count_ok_rate"] = double(count_good) / cfg.trials;
    e["ratio_violations"] = ratio_bad;
    agg["per_n"].push_back(e);
  }
}

void scan_row(const Resolved& r, int n, int t, Csv& csv, bool appendix_cols,
              std::vector<double>& wds, int& upper_bad, int& wn_hits) {
  const auto& cfg = r.cfg;
  u64 ts = trial_seed(cfg, t);
  Graph g = Graph::sample(n, r.dist, ts);
  Subgraph tree = mst(g);
  TreeView tv(g, tree);
  double wd = wdiam(tv);
  double p = cfg.p > 0.0 ? cfg.p : 1.0 / n + std::pow(double(n), -1.1);
  ThresholdSnapshot snap = snapshot_of(g, tree, p);
  int tmax = static_cast<int>(snap.t_max.size());
  double rhs = p * (tmax - 1) + 2.0 * snap.w_n * snap.l_np;
  bool upper_ok = wd <= rhs * (1.0 + 1e-12) + 1e-15;
  double logn = std::log(double(n));
  wds.push_back(wd);
  upper_bad += !upper_ok;
  if (appendix_cols) {
    double wn_bound = 3.0 * logn * logn / n;
    bool wn_exceeds = snap.w_n > wn_bound;
    wn_hits += wn_exceeds;
    csv.row({fi(t), fu(ts), fi(n), fd(p), fi(tmax), fi(snap.runner_up_size),
             fd(snap.w_n), fi(snap.l_np), fd(wd), fd(rhs), fb(upper_ok),
             fb(wn_exceeds)});
  } else {
    double tail = 7.0 * std::pow(logn, 4.0) / std::pow(double(n), 0.1);
    csv.row({fi(t), fu(ts), fi(n), fd(wd), fd(tail), fb(wd <= tail), fd(p),
             fi(tmax), fd(snap.w_n), fi(snap.l_np), fd(rhs), fb(upper_ok)});
  }
}

void cmd_wdiam_scan(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  csv.header({"trial", "seed", "n", "wdiam", "tail_bound", "tail_ok", "p",
              "tmax_size", "w_n", "l_np", "upper_rhs", "upper_ok"});
  agg["per_n"] = json::array();
  for (int n : cfg.n_values) {
    std::vector<double> wds;
    int upper_bad = 0, wn_hits = 0;
    for (int t = 0; t < cfg.trials; ++t)
      scan_row(r, n, t, csv, false, wds, upper_bad, wn_hits);
    json e;
    e["n"] = n;
    e["median_wdiam"] = median_of(wds);
    e["p95_wdiam"] = percentile95(wds);
    e["mean_wdiam"] = mean_of(wds);
    e["upper_violations"] = upper_bad;
    agg["per_n"].push_back(e);
  }
}

void cmd_appendix(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  csv.header({"trial", "seed", "n", "p", "tmax_size", "runner_up_size", "w_n",
              "l_np", "wdiam", "upper_rhs", "upper_ok", "wn_exceeds"});
  agg["per_n"] = json::array();
  for (int n : cfg.n_values) {
    std::vector<double> wds;
    int upper_bad = 0, wn_hits = 0;
    for (int t = 0; t < cfg.trials; ++t)
      scan_row(r, n, t, csv, true, wds, upper_bad, wn_hits);
    double p = cfg.p > 0.0 ? cfg.p : 1.0 / n + std::pow(double(n), -1.1);
    json e;
    e["n"] = n;
    e["upper_violations"] = upper_bad;
    e["wn_exceed_rate"] = double(wn_hits) / cfg.trials;
    e["connectivity_bound"] = connectivity_probability_bound(n, p);
    e["empirical_disconnect"] = empirical_disconnect_rate(
        n, p, cfg.trials, derive_seed(cfg.seed, 0xd15cull));
    agg["per_n"].push_back(e);
  }
}

void cmd_coupling(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  csv.header({"trial", "seed", "n", "steps", "violations"});
  long long total_bad = 0;
  for (int n : cfg.n_values) {
    for (int t = 0; t < cfg.trials; ++t) {
      u64 ts = trial_seed(cfg, t);
      Graph g = Graph::sample(n, r.dist, ts);
      KruskalTrace trace = kruskal_trace(g);
      long long bad = coupling_violations(trace);
      total_bad += bad;
      csv.row({fi(t), fu(ts), fi(n), fi(static_cast<long long>(trace.total_edges)),
               fi(bad)});
    }
  }
  agg["total_violations"] = total_bad;
}

void cmd_run_index(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  int n = cfg.n_values.front();
  double w = cfg.w_threshold > 0.0 ? cfg.w_threshold
                                   : default_w_threshold(n, r.dist->rho_star());
  int l = cfg.run_length > 0 ? cfg.run_length : default_run_length(n);
  TailCheckReport rep = run_index_tail_check(n, w, l, cfg.trials, cfg.seed, r.dist);
  csv.header({"trial", "seed", "n", "i_value"});
  for (int t = 0; t < cfg.trials; ++t) {
    TrialRecord rec;
    rec.trial = t;
    rec.seed = trial_seed(cfg, t);
    rec.n = n;
    rec.i_value = rep.i_values[t];
    csv.row({fi(rec.trial), fu(rec.seed), fi(rec.n), fi(rec.i_value)});
  }
  agg["w"] = rep.w_threshold;
  agg["l"] = rep.run_length;
  agg["k_grid"] = rep.k_grid;
  agg["empirical"] = rep.empirical;
  agg["bound"] = rep.bound;
  agg["sigma"] = rep.sigma;
  agg["ok"] = rep.ok;
}

void cmd_good_sets(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  csv.header({"n", "w_threshold", "run_length", "epsilon", "trials",
              "bad_trials", "frequency"});
  agg["per_n"] = json::array();
  for (int n : cfg.n_values) {
    double w = cfg.w_threshold > 0.0
                   ? cfg.w_threshold
                   : default_w_threshold(n, r.dist->rho_star());
    int l = cfg.run_length > 0 ? cfg.run_length : default_run_length(n);
    GoodSetsReport rep =
        good_sets_scan(n, w, l, cfg.epsilon, cfg.trials, cfg.seed, r.dist);
    csv.row({fi(n), fd(rep.w_threshold), fi(rep.run_length), fd(rep.epsilon),
             fi(rep.trials), fi(rep.bad_trials), fd(rep.frequency)});
    json e;
    e["n"] = n;
    e["frequency"] = rep.frequency;
    agg["per_n"].push_back(e);
  }
}

void cmd_oracle(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  StartKind kind = parse_start_kind(cfg.start);
  csv.header({"trial", "seed", "n", "exact_cost", "wt_max", "ok"});
  int bad = 0;
  double max_cost = 0.0;
  for (int n : cfg.n_values) {
    for (int t = 0; t < cfg.trials; ++t) {
      u64 ts = trial_seed(cfg, t);
      Graph g = Graph::sample(n, r.dist, ts);
      Subgraph h = Subgraph::make_start(kind, n, start_seed(ts));
      double cost = exact_cost(g, h);
      PipelineResult pr = full_pipeline(g, h);
      bool ok = cost <= pr.trace.wt_max * (1.0 + 1e-12) + 1e-15;
      bad += !ok;
      max_cost = std::max(max_cost, cost);
      csv.row({fi(t), fu(ts), fi(n), fd(cost), fd(pr.trace.wt_max), fb(ok)});
    }
  }
  agg["violations"] = bad;
  agg["max_exact_cost"] = max_cost;
}

void cmd_pipeline(const Resolved& r, Csv& csv, json& agg) {
  const auto& cfg = r.cfg;
  StartKind kind = parse_start_kind(cfg.start);
  csv.header({"trial", "seed", "n", "witness_kind", "witness_size", "fallback",
              "run_index", "steps", "wt_max", "reached_mst"});
  agg["per_n"] = json::array();
  for (int n : cfg.n_values) {
    std::vector<double> wts;
    int reached = 0, fallbacks = 0, good = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      TrialRecord rec;
      rec.trial = t;
      rec.seed = trial_seed(cfg, t);
      rec.n = n;
      Graph g = Graph::sample(n, r.dist, rec.seed);
      Subgraph h = Subgraph::make_start(kind, n, start_seed(rec.seed));
      PipelineResult pr = full_pipeline(g, h);
      rec.wt_max = pr.trace.wt_max;
      rec.reached_mst = pr.trace.reached_mst;
      wts.push_back(rec.wt_max);
      reached += rec.reached_mst;
      fallbacks += pr.fallback;
      good += rec.wt_max <= g.rho_star() + cfg.epsilon;
      csv.row({fi(rec.trial), fu(rec.seed), fi(rec.n),
               fi(static_cast<int>(pr.witness_kind)), fi(pr.witness_size),
               fb(pr.fallback), fi(pr.run_idx),
               fi(static_cast<long long>(pr.trace.steps())), fd(rec.wt_max),
               fb(rec.reached_mst)});
    }
    json e;
    e["n"] = n;
    e["reach_rate"] = double(reached) / cfg.trials;
    e["fallback_rate"] = double(fallbacks) / cfg.trials;
    e["success_rate"] = double(good) / cfg.trials;
    e["mean_wt_max"] = mean_of(wts);
    agg["per_n"].push_back(e);
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "zeta3",  "upper",     "lower",     "wdiam-scan", "coupling",
      "appendix", "run-index", "good-sets", "oracle",     "pipeline"};
  return names;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    size_t cut = line.find_first_of("= \t");
    if (cut == std::string::npos)
      fail_invalid("config: expected key=value, got: " + line);
    std::string key = trim(line.substr(0, cut));
    std::string value = trim(line.substr(cut + 1));
    try {
      if (key == "command") {
        cfg.command = value;
      } else if (key == "n") {
        cfg.n_values = parse_n_list(value);
      } else if (key == "trials") {
        cfg.trials = std::stoi(value);
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
        cfg.has_seed = true;
      } else if (key == "dist") {
        cfg.dist = value;
      } else if (key == "epsilon") {
        cfg.epsilon = std::stod(value);
      } else if (key == "start") {
        cfg.start = value;
      } else if (key == "p") {
        cfg.p = std::stod(value);
      } else if (key == "w") {
        cfg.w_threshold = std::stod(value);
      } else if (key == "l") {
        cfg.run_length = std::stoi(value);
      } else if (key == "out") {
        cfg.out_csv = value;
      } else if (key == "summary") {
        cfg.out_json = value;
      } else {
        fail_invalid("config: unknown key " + key);
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail_invalid("config: bad value for " + key + ": " + value);
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_io("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string config_to_text(const ExperimentConfig& c) {
  std::string out;
  out += "command=" + c.command + "\n";
  if (!c.n_values.empty()) {
    out += "n=";
    for (size_t i = 0; i < c.n_values.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c.n_values[i]);
    }
    out += '\n';
  }
  if (c.trials > 0) out += "trials=" + std::to_string(c.trials) + "\n";
  if (c.has_seed) out += "seed=" + std::to_string(c.seed) + "\n";
  out += "dist=" + c.dist + "\n";
  out += "epsilon=" + fd(c.epsilon) + "\n";
  out += "start=" + c.start + "\n";
  if (c.p > 0.0) out += "p=" + fd(c.p) + "\n";
  if (c.w_threshold > 0.0) out += "w=" + fd(c.w_threshold) + "\n";
  if (c.run_length > 0) out += "l=" + std::to_string(c.run_length) + "\n";
  if (!c.out_csv.empty()) out += "out=" + c.out_csv + "\n";
  if (!c.out_json.empty()) out += "summary=" + c.out_json + "\n";
  return out;
}

CommandResult run_command(const ExperimentConfig& in) {
  auto t0 = std::chrono::steady_clock::now();
  Resolved r = resolve(in);
  Csv csv;
  json agg;
  const std::string& cmd = r.cfg.command;
  if (cmd == "zeta3")
    cmd_zeta3(r, csv, agg);
  else if (cmd == "upper")
    cmd_upper(r, csv, agg);
  else if (cmd == "lower")
    cmd_lower(r, csv, agg);
  else if (cmd == "wdiam-scan")
    cmd_wdiam_scan(r, csv, agg);
  else if (cmd == "coupling")
    cmd_coupling(r, csv, agg);
  else if (cmd == "appendix")
    cmd_appendix(r, csv, agg);
  else if (cmd == "run-index")
    cmd_run_index(r, csv, agg);
  else if (cmd == "good-sets")
    cmd_good_sets(r, csv, agg);
  else if (cmd == "oracle")
    cmd_oracle(r, csv, agg);
  else if (cmd == "pipeline")
    cmd_pipeline(r, csv, agg);
  else
    fail_internal("run_command: unhandled command");

  auto t1 = std::chrono::steady_clock::now();
  json summary;
  summary["command"] = cmd;
  summary["config"] = config_json(r.cfg);
  summary["build"] = MSTLAB_GIT_DESCRIBE;
  summary["wall_clock_ms"] =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  summary["aggregates"] = agg;

  CommandResult out;
  out.csv = std::move(csv.text);
  out.json = summary.dump(2) + "\n";
  return out;
}

}  // namespace mstlab
