#include "app.hpp"

#include <chrono>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "tadpole/density_peaks.hpp"
#include "tadpole/engine.hpp"
#include "tadpole/generators.hpp"
#include "tadpole/io.hpp"
#include "tadpole/metrics.hpp"
#include "tadpole/ordering.hpp"
#include "tadpole/preprocess.hpp"
#include "tadpole/sequences.hpp"
#include "tadpole/tuning.hpp"

namespace tadpole::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

std::atomic<bool> g_interrupt{false};

extern "C" void on_sigint(int) { g_interrupt.store(true); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Everything a single invocation can be configured with.
struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "tsv";
  double window = 0.05;
  std::optional<double> dc;
  std::optional<double> dc_pct;
  std::optional<std::size_t> k;
  bool auto_k = false;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 0;
  std::string measure = "dtw";
  std::string out;
  std::string trace;
  std::vector<std::string> orderings;
  unsigned threads = 1;
  bool no_normalize = false;
  std::size_t smooth_window = 1;
  std::optional<std::string> alphabet;

  // tune
  std::string param = "window";
  std::vector<double> values;
  std::optional<double> fixed;
  std::optional<std::size_t> sample;
  double warp = 0.1;

  // bench
  std::vector<std::size_t> sizes{50, 100, 200};
  std::size_t length = 128;

  // gen
  std::string kind = "cbf";
  std::size_t n = 0;
  std::size_t channels = 1;
  std::size_t families = 3;
  std::size_t per_family = 30;
  double rate = 0.1;
};

Measure parse_measure(const std::string& name) {
  if (name == "dtw") return Measure::dtw;
  if (name == "euclidean") return Measure::euclidean;
  throw std::invalid_argument("unknown real-valued measure '" + name + "'");
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw DataError("cannot write output file: " + path);
  f << text;
}

LabeledDataset load_series(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw std::invalid_argument("--input is required");
  std::vector<fs::path> paths(cfg.inputs.begin(), cfg.inputs.end());
  auto ds = load_ucr_multichannel(paths, parse_delimiter(cfg.format));
  if (cfg.smooth_window > 1) ds = smooth(ds, cfg.smooth_window);
  if (!cfg.no_normalize) ds = znormalize(ds);
  return ds;
}

std::optional<std::vector<int>> ground_truth(const std::optional<std::vector<std::string>>& labels) {
  if (!labels) return std::nullopt;
  return encode_labels(*labels);
}

double resolve_dc(const RunConfig& cfg, const BoundMatrices& bounds) {
  if (cfg.dc) {
    if (!(*cfg.dc > 0.0)) throw std::invalid_argument("--dc must be positive");
    return *cfg.dc;
  }
  return percentile_cutoff(bounds, cfg.dc_pct.value_or(2.0));
}

std::optional<std::size_t> resolve_k(const RunConfig& cfg) {
  if (cfg.k && *cfg.k == 0) throw std::invalid_argument("--k must be positive");
  return cfg.auto_k ? std::nullopt : cfg.k;
}

json stats_json(const PruneStats& s) {
  return json{{"total_pairs", s.total_pairs},
              {"case_a", s.case_a},
              {"case_b", s.case_b},
              {"case_c", s.case_c},
              {"case_d_computed", s.case_d_computed},
              {"phase2_pruned", s.phase2_pruned},
              {"phase2_computed", s.phase2_computed},
              {"phase2_reused", s.phase2_reused},
              {"exact_calls", s.exact_calls()}};
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json parameters_json(const RunConfig& cfg, const std::string& command, double dc,
                     const std::optional<std::size_t>& k) {
  json p;
  p["command"] = command;
  p["inputs"] = cfg.inputs;
  p["format"] = cfg.format;
  p["measure"] = cfg.measure;
  p["window"] = cfg.window;
  p["dc"] = dc;
  p["dc_pct"] = cfg.dc ? json(nullptr) : json(cfg.dc_pct.value_or(2.0));
  p["k"] = optional_json(k);
  p["auto_k"] = !k.has_value();
  p["budget"] = optional_json(cfg.budget);
  p["seed"] = cfg.seed;
  if (command == "cluster-seq") {
    p["alphabet"] = cfg.alphabet ? *cfg.alphabet : Alphabet::uppercase().symbols();
  } else {
    p["normalize"] = !cfg.no_normalize;
    p["smooth"] = cfg.smooth_window;
  }
  return p;
}

json result_json(const RunConfig& cfg, const std::string& command, double dc,
                 const std::optional<std::size_t>& k, const TadpoleResult& result,
                 const std::optional<std::vector<int>>& truth, json timing) {
  json j;
  j["parameters"] = parameters_json(cfg, command, dc, k);
  j["centers"] = result.model.centers;
  j["labels"] = result.model.labels;
  j["rho"] = result.model.rho;
  j["delta"] = result.model.delta;
  j["gamma"] = result.model.gamma;
  j["stats"] = stats_json(result.stats);
  j["interrupted"] = result.interrupted;
  j["complete"] = result.complete;
  if (truth) {
    j["evaluation"] = json{{"rand_index", rand_index(result.model.labels, *truth)},
                           {"nmi", nmi(result.model.labels, *truth)},
                           {"nmi_normalization", "arithmetic_mean"}};
  }
  j["timing"] = std::move(timing);
  return j;
}

void write_engine_trace(const RunConfig& cfg, const TadpoleResult& result,
                        const std::optional<std::vector<int>>& truth, std::ostream& out) {
  if (cfg.trace.empty()) return;
  const std::vector<int> reference = truth ? *truth : result.model.labels;
  std::ostringstream csv;
  write_trace_csv(csv, score_trace(result.trace, reference));
  write_text(cfg.trace, csv.str(), out);
}

int cmd_cluster_seq(const RunConfig& cfg, std::ostream& out);

int cmd_cluster(const RunConfig& cfg, std::ostream& out) {
  if (cfg.measure == "edit") return cmd_cluster_seq(cfg, out);
  const auto t0 = Clock::now();
  const auto ds = load_series(cfg);
  if (ds.size() < 2) throw std::invalid_argument("clustering needs at least two series");
  const auto problem = time_series_problem(ds, cfg.window, parse_measure(cfg.measure), cfg.threads);
  const double bounds_s = seconds_since(t0);
  const double dc = resolve_dc(cfg, problem.bounds);
  const auto k = resolve_k(cfg);

  const auto t1 = Clock::now();
  const auto result =
      tadpole_cluster(problem, TadpoleOptions{dc, k, cfg.budget, cfg.threads, &interrupt_flag()});
  const double cluster_s = seconds_since(t1);

  const auto truth = ground_truth(ds.labels());
  const auto j = result_json(cfg, "cluster", dc, k, result, truth,
                             json{{"bounds_seconds", bounds_s},
                                  {"clustering_seconds", cluster_s},
                                  {"total_seconds", seconds_since(t0)}});
  write_text(cfg.out, j.dump(2) + "\n", out);
  write_engine_trace(cfg, result, truth, out);
  return kOk;
}

int cmd_cluster_seq(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw std::invalid_argument("sequence clustering takes one --input");
  const auto t0 = Clock::now();
  const auto ds = load_sequences(cfg.inputs.front(),
                                   cfg.alphabet ? Alphabet(*cfg.alphabet) : Alphabet::uppercase());
  if (ds.size() < 2) throw std::invalid_argument("clustering needs at least two sequences");
  const auto problem = sequence_problem(ds, cfg.threads);
  const double bounds_s = seconds_since(t0);
  const double dc = resolve_dc(cfg, problem.bounds);
  const auto k = resolve_k(cfg);

  const auto t1 = Clock::now();
  const auto result =
      tadpole_cluster(problem, TadpoleOptions{dc, k, cfg.budget, cfg.threads, &interrupt_flag()});
  const double cluster_s = seconds_since(t1);

  const auto truth = ground_truth(ds.labels());
  auto seq_cfg = cfg;
  seq_cfg.measure = "edit";
  const auto j = result_json(seq_cfg, "cluster-seq", dc, k, result, truth,
                             json{{"bounds_seconds", bounds_s},
                                  {"clustering_seconds", cluster_s},
                                  {"total_seconds", seconds_since(t0)}});
  write_text(cfg.out, j.dump(2) + "\n", out);
  write_engine_trace(cfg, result, truth, out);
  return kOk;
}

int cmd_tune(const RunConfig& cfg, std::ostream& out) {
  if (cfg.values.empty()) throw std::invalid_argument("--values needs at least one value");
  if (!cfg.fixed) throw std::invalid_argument("--fixed is required");
  if (cfg.out.empty()) throw std::invalid_argument("--out is required for tune");
  const auto ds = load_series(cfg);
  const SweepParameter param = cfg.param == "window" ? SweepParameter::window
                               : cfg.param == "dc"   ? SweepParameter::dc
                                                     : throw std::invalid_argument(
                                                           "--param must be window or dc");
  const std::size_t sample = cfg.sample.value_or(std::min<std::size_t>(30, ds.size()));
  const auto sweep =
      parameter_sweep(ds, param, cfg.values, *cfg.fixed, sample, cfg.warp, cfg.seed, cfg.threads);
  std::ostringstream csv;
  write_sweep_csv(csv, sweep);
  write_text(cfg.out, csv.str(), out);
  out << "recommended " << cfg.param << " " << format_double(sweep.recommended) << "\n";
  return kOk;
}

std::string trace_path_for(const std::string& base, const std::string& kind, bool several) {
  if (!several) return base;
  const fs::path p(base);
  return (p.parent_path() / (p.stem().string() + "." + kind + p.extension().string())).string();
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  const auto ds = load_series(cfg);
  const auto problem = time_series_problem(ds, cfg.window, parse_measure(cfg.measure), cfg.threads);
  const double dc = resolve_dc(cfg, problem.bounds);
  const auto k = resolve_k(cfg);
  const auto truth = ground_truth(ds.labels());
  const std::string target = cfg.trace.empty() ? cfg.out : cfg.trace;
  auto kinds = cfg.orderings;
  if (kinds.empty()) kinds.push_back("tadpole");
  const bool several = kinds.size() > 1;
  for (const auto& name : kinds) {
    const OrderingSpec spec{parse_ordering(name), cfg.seed};
    const auto tr = ordering_trace(problem, dc, k, spec,
                                   truth ? std::span<const int>(*truth) : std::span<const int>{},
                                   cfg.budget);
    std::ostringstream csv;
    write_trace_csv(csv, tr);
    if (target.empty()) {
      out << "# ordering " << name << "\n";
      out << csv.str();
    } else {
      write_text(trace_path_for(target, name, several), csv.str(), out);
      out << name << ": snapshots=" << tr.trace.snapshots.size()
          << " phase2_calls=" << tr.stats.phase2_computed
          << " final_rand_index=" << format_double(tr.rand_index.back()) << "\n";
    }
  }
  return kOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  std::optional<LabeledDataset> source;
  if (!cfg.inputs.empty()) source = load_series(cfg);
  std::ostringstream csv;
  csv << "n,exact_calls,oracle_count,total_pairs,wall_time\n";
  for (std::size_t n : cfg.sizes) {
    LabeledDataset ds;
    if (source) {
      if (n > source->size()) throw std::invalid_argument("bench size exceeds input rows");
      std::vector<TimeSeries> rows(source->series().begin(), source->series().begin() + n);
      ds = LabeledDataset(std::move(rows));
    } else {
      ds = znormalize(generate_cbf(n, cfg.length, cfg.seed));
    }
    const auto problem = time_series_problem(ds, cfg.window, parse_measure(cfg.measure), cfg.threads);
    const double dc = resolve_dc(cfg, problem.bounds);
    const auto t0 = Clock::now();
    const auto result = tadpole_cluster(problem, TadpoleOptions{dc, resolve_k(cfg), std::nullopt,
                                                                cfg.threads, nullptr});
    const double wall = seconds_since(t0);
    const auto full = full_distance_matrix(n, problem.distance, cfg.threads);
    const auto profile = local_density(full, dc);
    const auto deltas = delta_distances(full, profile);
    csv << n << ',' << result.stats.exact_calls() << ','
        << oracle_computation_count(full, dc, profile, deltas) << ',' << result.stats.total_pairs
        << ',' << format_double(wall) << '\n';
  }
  write_text(cfg.out, csv.str(), out);
  return kOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) throw std::invalid_argument("--out is required for gen");
  const Delimiter delim = parse_delimiter(cfg.format);
  if (cfg.kind == "families") {
    const auto ds = generate_mutation_families(cfg.families, cfg.per_family, cfg.length, cfg.rate,
                                               cfg.seed,
                                               cfg.alphabet ? Alphabet(*cfg.alphabet)
                                                            : Alphabet::protein());
    std::ostringstream text;
    write_sequences(text, ds);
    write_text(cfg.out, text.str(), out);
    return kOk;
  }
  if (cfg.kind != "cbf" && cfg.kind != "walks")
    throw std::invalid_argument("--kind must be cbf, walks, or families");
  if (cfg.channels == 0) throw std::invalid_argument("--channels must be positive");
  const fs::path base(cfg.out);
  for (std::size_t c = 0; c < cfg.channels; ++c) {
    const auto ds = cfg.kind == "cbf" ? generate_cbf(cfg.n, cfg.length, cfg.seed + c)
                                      : generate_random_walks(cfg.n, cfg.length, cfg.seed + c);
    const fs::path path =
        cfg.channels == 1
            ? base
            : base.parent_path() /
                  (base.stem().string() + "_ch" + std::to_string(c + 1) + base.extension().string());
    save_ucr(path, ds, 0, delim);
  }
  return kOk;
}

void add_common_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.inputs, "Input file (repeat once per channel)");
  sub->add_option("--format", cfg.format, "Input delimiter")
      ->check(CLI::IsMember({"tsv", "csv"}));
  sub->add_flag("--no-normalize", cfg.no_normalize, "Skip per-channel z-normalization");
  sub->add_option("--smooth", cfg.smooth_window, "Centered moving-average width (odd)");
  sub->add_option("--threads", cfg.threads, "Workers for pair evaluation")
      ->check(CLI::PositiveNumber);
}

void add_cutoff(CLI::App* sub, RunConfig& cfg) {
  auto* dc = sub->add_option("--dc", cfg.dc, "Absolute cutoff distance");
  auto* pct = sub->add_option("--dc-pct", cfg.dc_pct,
                              "Cutoff as a percentile of upper-bound distances (default 2)");
  dc->excludes(pct);
  auto* k = sub->add_option("--k", cfg.k, "Number of clusters");
  auto* ak = sub->add_flag("--auto-k", cfg.auto_k, "Choose k by the gamma knee rule");
  k->excludes(ak);
}

}  // namespace

std::atomic<bool>& interrupt_flag() { return g_interrupt; }

void install_interrupt_handler() { std::signal(SIGINT, on_sigint); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Density Peaks clustering under DTW with bound-based pruning", "tadpole"};
  app.require_subcommand(1);

  auto* cluster = app.add_subcommand("cluster", "Cluster a real-valued dataset");
  add_common_input(cluster, cfg);
  add_cutoff(cluster, cfg);
  cluster->add_option("--window", cfg.window, "Warping window as a fraction of length");
  cluster->add_option("--budget", cfg.budget, "Phase-2 exact-distance call budget");
  cluster->add_option("--measure", cfg.measure)->check(CLI::IsMember({"dtw", "euclidean", "edit"}));
  cluster->add_option("--out", cfg.out, "Result JSON path (default stdout)");
  cluster->add_option("--trace", cfg.trace, "Anytime trace CSV path");
  cluster->add_option("--seed", cfg.seed);
  cluster->add_option("--alphabet", cfg.alphabet, "Symbols allowed with --measure edit");

  auto* cluster_seq = app.add_subcommand("cluster-seq", "Cluster discrete sequences by edit distance");
  cluster_seq->add_option("--input", cfg.inputs, "Sequence file");
  cluster_seq->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
  add_cutoff(cluster_seq, cfg);
  cluster_seq->add_option("--budget", cfg.budget);
  cluster_seq->add_option("--out", cfg.out);
  cluster_seq->add_option("--trace", cfg.trace);
  cluster_seq->add_option("--seed", cfg.seed);
  cluster_seq->add_option("--alphabet", cfg.alphabet);

  auto* tune = app.add_subcommand("tune", "Score a window or cutoff sweep with warped-copy constraints");
  add_common_input(tune, cfg);
  tune->add_option("--param", cfg.param)->check(CLI::IsMember({"window", "dc"}));
  tune->add_option("--values", cfg.values, "Comma-separated values to sweep")->delimiter(',');
  tune->add_option("--fixed", cfg.fixed, "Value of the parameter held fixed");
  tune->add_option("--sample", cfg.sample, "Constraint sample size (default min(30, n))");
  tune->add_option("--warp", cfg.warp, "Warp amount in [0, 0.25]");
  tune->add_option("--seed", cfg.seed);
  tune->add_option("--out", cfg.out, "Sweep CSV path");

  auto* trace = app.add_subcommand("trace", "Anytime convergence traces for phase-2 orderings");
  add_common_input(trace, cfg);
  add_cutoff(trace, cfg);
  trace->add_option("--window", cfg.window);
  trace->add_option("--measure", cfg.measure)->check(CLI::IsMember({"dtw", "euclidean"}));
  trace->add_option("--ordering", cfg.orderings)->check(CLI::IsMember({"tadpole", "random", "oracle"}));
  trace->add_option("--budget", cfg.budget);
  trace->add_option("--seed", cfg.seed);
  trace->add_option("--trace", cfg.trace, "CSV path (suffixed per ordering when several)");
  trace->add_option("--out", cfg.out, "Alias of --trace");

  auto* bench = app.add_subcommand("bench", "Exact-call counts versus the oracle across sizes");
  add_common_input(bench, cfg);
  add_cutoff(bench, cfg);
  bench->add_option("--sizes", cfg.sizes)->delimiter(',');
  bench->add_option("--length", cfg.length);
  bench->add_option("--window", cfg.window);
  bench->add_option("--measure", cfg.measure)->check(CLI::IsMember({"dtw", "euclidean"}));
  bench->add_option("--seed", cfg.seed);
  bench->add_option("--out", cfg.out);

  auto* gen = app.add_subcommand("gen", "Write a synthetic dataset");
  gen->add_option("--kind", cfg.kind)->check(CLI::IsMember({"cbf", "walks", "families"}));
  gen->add_option("--n", cfg.n);
  gen->add_option("--length", cfg.length);
  gen->add_option("--channels", cfg.channels);
  gen->add_option("--families", cfg.families);
  gen->add_option("--per-family", cfg.per_family);
  gen->add_option("--rate", cfg.rate);
  gen->add_option("--alphabet", cfg.alphabet, "Symbols for --kind families (default: amino acids)");
  gen->add_option("--format", cfg.format)->check(CLI::IsMember({"tsv", "csv"}));
  gen->add_option("--seed", cfg.seed);
  gen->add_option("--out", cfg.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    const bool bad_values = dynamic_cast<const CLI::ExcludesError*>(&e) != nullptr ||
                            dynamic_cast<const CLI::RequiresError*>(&e) != nullptr ||
                            dynamic_cast<const CLI::ValidationError*>(&e) != nullptr;
    return bad_values ? kInvalidParams : kUsage;
  }

  try {
    if (*cluster) return cmd_cluster(cfg, out);
    if (*cluster_seq) return cmd_cluster_seq(cfg, out);
    if (*tune) return cmd_tune(cfg, out);
    if (*trace) return cmd_trace(cfg, out);
    if (*bench) return cmd_bench(cfg, out);
    if (*gen) return cmd_gen(cfg, out);
  } catch (const DataError& e) {
    err << "tadpole: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "tadpole: invalid parameters: " << e.what() << "\n";
    return kInvalidParams;
  } catch (const std::exception& e) {
    err << "tadpole: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace tadpole::cli
