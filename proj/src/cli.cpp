#include "ringswitch/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "ringswitch/cost_model.hpp"
#include "ringswitch/csv.hpp"
#include "ringswitch/flowsim.hpp"
#include "ringswitch/planner.hpp"

namespace ringswitch::cli {

namespace {

// Defaults for the single-cell commands: 32 nodes at 800 Gbps
// at the 32 B / 1 us / 100 ns operating point.
constexpr int kDefaultNodes = 32;
constexpr std::int64_t kDefaultBytes = 32;
constexpr double kDefaultAlphaNs = 1000.0;
constexpr double kDefaultDeltaNs = 100.0;
constexpr double kDefaultBandwidthGbps = 800.0;

constexpr int kDefaultRatioNodes = 16;

template <typename T>
T parse_number(const std::string& text, const std::string& flag) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParameterError(flag + ": cannot parse '" + text + "' as a number");
  }
  return value;
}

// A list option given as "" (or only empty items) is an explicitly empty list.
template <typename T>
std::vector<T> parse_list(const std::vector<std::string>& items, const std::string& flag) {
  std::vector<T> out;
  for (const std::string& item : items) {
    if (item.empty()) continue;
    out.push_back(parse_number<T>(item, flag));
  }
  return out;
}

template <typename T>
T single(const std::optional<std::vector<T>>& values, T fallback, const std::string& flag) {
  if (!values) return fallback;
  if (values->size() != 1) {
    throw ParameterError(flag + " expects exactly one value for this command");
  }
  return values->front();
}

std::string ns(double value) { return fmt::format("{:.2f}", value); }

std::string join_ns(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ' ';
    out += ns(v);
  }
  return out;
}

void print_params(std::ostream& out, const CostParams& p) {
  fmt::print(out, "n={} m_bytes={} alpha_ns={} alpha_s_ns={} bandwidth_gbps={} delta_ns={}\n",
             p.nodes, p.message_bytes, ns(p.alpha_ns), ns(p.alpha_s_ns),
             ns(p.bandwidth_gbps), ns(p.delta_ns));
}

void print_row(std::ostream& out, const std::string& label, const PhaseCost& cost) {
  fmt::print(out, "{:<10}{:>16}  {}\n", label, ns(cost.total_ns), join_ns(cost.per_step_ns));
}

// Ring row first so it is printed even when recursive doubling is invalid.
void print_phase_table(std::ostream& out, Phase phase, const CostParams& p,
                       AllGatherModel model) {
  fmt::print(out, "[{}]\n", to_string(phase));
  fmt::print(out, "{:<10}{:>16}  {}\n", "strategy", "total_ns", "per_step_ns");
  print_row(out, "ring", ring_total_cost(p));
  const int steps = log2_exact(p.nodes);
  const char* symbol = phase == Phase::kReduceScatter ? "T" : "T'";
  for (int t = 0; t <= steps; ++t) {
    print_row(out, fmt::format("{}={}", symbol, t), switched_phase_cost(phase, t, p, model));
  }
}

std::string describe_plan(const Plan& plan) {
  std::string text(to_string(plan.mode));
  if (plan.mode == PlanMode::kRdSwitched) {
    auto part = [](std::optional<int> t) { return t ? std::to_string(*t) : std::string("ring"); };
    if (involves(plan.collective, Phase::kReduceScatter)) text += " T=" + part(plan.rs_threshold);
    if (involves(plan.collective, Phase::kAllGather)) text += " T'=" + part(plan.ag_threshold);
  }
  return text;
}

int cmd_model(const RunConfig& config, std::ostream& out) {
  const CostParams p = config.scalar_params();
  p.validate();
  fmt::print(out, "collective={} ag_model={}\n", to_string(config.collective),
             to_string(config.ag_model));
  print_params(out, p);

  for (Phase phase : {Phase::kReduceScatter, Phase::kAllGather}) {
    if (involves(config.collective, phase)) {
      print_phase_table(out, phase, p, config.ag_model);
    }
  }
  if (config.collective == Collective::kAllReduce) {
    const ThresholdChoice rs = best_threshold(p, Phase::kReduceScatter, config.ag_model);
    const ThresholdChoice ag = best_threshold(p, Phase::kAllGather, config.ag_model);
    fmt::print(out, "[allreduce]\nring      {:>16}\nbest      {:>16}  T={} T'={}\n",
               ns(2.0 * ring_total_cost(p).total_ns),
               ns(allreduce_cost(rs.threshold, ag.threshold, p, config.ag_model)),
               rs.threshold, ag.threshold);
  }
  return kExitOk;
}

int cmd_plan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CostParams p = config.scalar_params();
  const Plan plan = plan_collective(p, config.collective, config.rule, config.ag_model);
  for (const std::string& warning : plan.warnings) fmt::print(err, "warning: {}\n", warning);
  fmt::print(out, "collective={} rule={} ag_model={}\n", to_string(config.collective),
             to_string(config.rule), to_string(config.ag_model));
  print_params(out, p);
  fmt::print(out, "{} predicted_ns={} ring_ns={}\n", describe_plan(plan),
             ns(plan.predicted_total_ns), ns(plan.ring_baseline_ns));
  return kExitOk;
}

Plan simulation_plan(const RunConfig& config, const CostParams& p, std::ostream& err) {
  if (config.force_ring) return Plan::ring(config.collective);
  if (!config.threshold && !config.ag_threshold) {
    Plan plan = plan_collective(p, config.collective, config.rule, config.ag_model);
    for (const std::string& warning : plan.warnings) fmt::print(err, "warning: {}\n", warning);
    return plan;
  }
  const int steps = require_recursive_doubling(p);
  switch (config.collective) {
    case Collective::kReduceScatter:
      return Plan::switched(config.collective, config.threshold.value_or(steps), std::nullopt);
    case Collective::kAllGather:
      return Plan::switched(config.collective, std::nullopt,
                            config.ag_threshold ? config.ag_threshold : config.threshold);
    case Collective::kAllReduce: {
      const int rs = config.threshold.value_or(steps);
      return Plan::switched(config.collective, rs, config.ag_threshold.value_or(steps - rs));
    }
  }
  return Plan::ring(config.collective);
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CostParams p = config.scalar_params();
  p.validate();
  const Plan plan = simulation_plan(config, p, err);
  const SimResult result = simulate_collective(plan, p);
  fmt::print(out, "collective={} {}\n", to_string(config.collective), describe_plan(plan));
  print_params(out, p);
  write_timeline(out, result);
  fmt::print(out, "total_ns={}\n", ns(result.total_ns));
  return kExitOk;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  return file;
}

void finish_output(std::ofstream& file, const std::filesystem::path& path) {
  file.flush();
  if (!file) throw IoError("failed writing " + path.string());
}

void ensure_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  const SweepGrid grid = config.sweep_grid();
  const std::vector<SweepRecord> records = run_grid(grid, config.threads);

  ensure_out_dir(config.out_dir);
  const auto detail_path = config.out_dir / "sweep_detail.csv";
  const auto summary_path = config.out_dir / "sweep_summary.csv";
  {
    std::ofstream file = open_output(detail_path);
    write_detail_csv(file, records);
    finish_output(file, detail_path);
  }
  {
    std::ofstream file = open_output(summary_path);
    write_summary_csv(file, records);
    finish_output(file, summary_path);
  }

  fmt::print(out, "collective={} n={} bandwidth_gbps={} alpha_s_ns={} ag_model={} cells={}\n",
             to_string(grid.collective), grid.nodes, ns(grid.bandwidth_gbps),
             ns(grid.alpha_s_ns), to_string(grid.ag_model), records.size());
  fmt::print(out, "{:>12}{:>12}{:>12}{:>8}{:>16}{:>16}{:>12}\n", "m_bytes", "delta_ns",
             "alpha_ns", "best_T", "t_best_ns", "t_ring_ns", "speedup_%");
  double deviation = 0.0;
  for (const SweepRecord& r : records) {
    fmt::print(out, "{:>12}{:>12}{:>12}{:>8}{:>16}{:>16}{:>12}{}\n", r.params.message_bytes,
               ns(r.params.delta_ns), ns(r.params.alpha_ns), r.best_threshold,
               ns(r.t_best_ns), ns(r.t_ring_ns), ns(r.speedup_pct),
               r.ring_fallback ? "  (ring)" : "");
    deviation = std::max(deviation, r.max_model_deviation());
  }
  fmt::print(out, "max relative deviation simulated vs analytic ({} model): {:.3e}\n",
             to_string(grid.ag_model), deviation);
  fmt::print(out, "wrote {} and {}\n", detail_path.string(), summary_path.string());
  return kExitOk;
}

int cmd_ratio(const RunConfig& config, std::ostream& out) {
  const int nodes = config.nodes.value_or(kDefaultRatioNodes);
  const std::vector<std::int64_t> sizes = config.message_bytes.value_or(
      std::vector<std::int64_t>{32, kKiB, 32 * kKiB, kMiB, 4 * kMiB});
  const std::vector<double> alphas = config.alpha_ns.value_or(
      std::vector<double>{10, 20, 50, 100, 200, 500, 1000});
  const std::vector<RatioRecord> records =
      ratio_experiment(nodes, sizes, alphas, config.bandwidth_gbps.value_or(kDefaultBandwidthGbps),
                       config.alpha_s_ns.value_or(0.0));

  ensure_out_dir(config.out_dir);
  const auto path = config.out_dir / "ratio.csv";
  {
    std::ofstream file = open_output(path);
    write_ratio_csv(file, records);
    finish_output(file, path);
  }

  fmt::print(out, "{:>16}{:>12}{:>12}{:>16}{:>16}{:>10}\n", "collective", "m_bytes",
             "alpha_ns", "t_rd_ns", "t_ring_ns", "ratio");
  for (const RatioRecord& r : records) {
    fmt::print(out, "{:>16}{:>12}{:>12}{:>16}{:>16}{:>10.3f}\n", to_string(r.collective),
               r.message_bytes, ns(r.alpha_ns), ns(r.t_rd_ns), ns(r.t_ring_ns), r.ratio);
  }
  fmt::print(out, "wrote {}\n", path.string());
  return kExitOk;
}

}  // namespace

CostParams RunConfig::scalar_params() const {
  CostParams p;
  p.nodes = nodes.value_or(kDefaultNodes);
  p.message_bytes = single(message_bytes, kDefaultBytes, "--bytes");
  p.alpha_ns = single(alpha_ns, kDefaultAlphaNs, "--alpha-ns");
  p.alpha_s_ns = alpha_s_ns.value_or(0.0);
  p.bandwidth_gbps = bandwidth_gbps.value_or(kDefaultBandwidthGbps);
  p.delta_ns = single(delta_ns, kDefaultDeltaNs, "--delta-ns");
  if (bytes_eq_tx) {
    // N bytes at 8 Gbit/s take exactly N ns to transmit.
    p.message_bytes = *bytes_eq_tx;
    p.bandwidth_gbps = 8.0;
  }
  return p;
}

SweepGrid RunConfig::sweep_grid() const {
  SweepGrid grid = SweepGrid::default_grid();
  if (nodes) grid.nodes = *nodes;
  if (bandwidth_gbps) grid.bandwidth_gbps = *bandwidth_gbps;
  if (alpha_s_ns) grid.alpha_s_ns = *alpha_s_ns;
  if (message_bytes) grid.message_bytes = *message_bytes;
  if (alpha_ns) grid.alpha_ns = *alpha_ns;
  if (delta_ns) grid.delta_ns = *delta_ns;
  grid.collective = collective;
  grid.ag_model = ag_model;
  return grid;
}

std::optional<RunConfig> parse_run_config(std::span<const std::string> args,
                                          std::ostream& out) {
  CLI::App app{"Plan and simulate AllReduce-family collectives on a ring with "
               "in-collective circuit switching",
               "ringswitch"};
  app.set_config("--config", "", "Read options from a 'key = value' file");
  app.require_subcommand(1);

  int nodes = 0;
  std::vector<std::string> bytes, alpha, delta;
  std::int64_t bytes_eq_tx = 0;
  double alpha_s = 0.0, bandwidth = 0.0;
  std::string collective = "reduce-scatter", rule = "argmin", ag_model = "full-message";
  int threshold = 0, ag_threshold = 0;
  bool force_ring = false;
  std::string out_dir = ".";
  unsigned threads = 0;

  auto* o_nodes = app.add_option("--nodes", nodes, "Node count n");
  auto* o_bytes = app.add_option("--bytes", bytes, "Message size in bytes (comma list for sweeps)")
                      ->delimiter(',');
  auto* o_eq = app.add_option("--bytes-eq-tx", bytes_eq_tx,
                              "Set size and bandwidth so the full message takes N ns to send");
  auto* o_alpha = app.add_option("--alpha-ns", alpha, "Per-link propagation delay (ns)")
                      ->delimiter(',');
  auto* o_alpha_s = app.add_option("--alpha-s-ns", alpha_s, "Per-step startup latency (ns)");
  auto* o_bw = app.add_option("--bandwidth-gbps", bandwidth, "Link bandwidth (Gbit/s)");
  auto* o_delta = app.add_option("--delta-ns", delta, "Reconfiguration delay (ns)")
                      ->delimiter(',');
  app.add_option("--collective", collective, "reduce-scatter|allgather|allreduce")
      ->check(CLI::IsMember({"reduce-scatter", "allgather", "allreduce"}));
  app.add_option("--rule", rule, "smallest|argmin")->check(CLI::IsMember({"smallest", "argmin"}));
  app.add_option("--ag-model", ag_model, "full-message|reverse")
      ->check(CLI::IsMember({"full-message", "reverse"}));
  auto* o_t = app.add_option("--threshold", threshold, "Reduce-scatter threshold T override");
  auto* o_t2 = app.add_option("--ag-threshold", ag_threshold, "AllGather threshold T' override");
  app.add_flag("--ring", force_ring, "Simulate the Ring algorithm");
  app.add_option("--out-dir", out_dir, "Directory for CSV output");
  app.add_option("--threads", threads, "Sweep worker threads (0 = all cores)");

  for (const char* name : {"model", "plan", "simulate", "sweep", "ratio"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("model")->description("Print analytical per-threshold costs");
  app.get_subcommand("plan")->description("Choose Ring fallback or switched thresholds");
  app.get_subcommand("simulate")->description("Run the flow-level simulator and print a timeline");
  app.get_subcommand("sweep")->description("Grid sweep over (m, delta, alpha); writes CSV");
  app.get_subcommand("ratio")->description("Static recursive doubling vs Ring ratio; writes CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::FileError& e) {
    throw IoError(e.what());
  } catch (const CLI::ParseError& e) {
    throw ParameterError(e.what());
  }

  RunConfig config;
  config.command = app.get_subcommands().front()->get_name();
  if (o_nodes->count()) config.nodes = nodes;
  if (o_bytes->count()) config.message_bytes = parse_list<std::int64_t>(bytes, "--bytes");
  if (o_eq->count()) config.bytes_eq_tx = bytes_eq_tx;
  if (o_alpha->count()) config.alpha_ns = parse_list<double>(alpha, "--alpha-ns");
  if (o_alpha_s->count()) config.alpha_s_ns = alpha_s;
  if (o_bw->count()) config.bandwidth_gbps = bandwidth;
  if (o_delta->count()) config.delta_ns = parse_list<double>(delta, "--delta-ns");
  config.collective = parse_collective(collective);
  config.rule = parse_selection_rule(rule);
  config.ag_model = parse_allgather_model(ag_model);
  if (o_t->count()) config.threshold = threshold;
  if (o_t2->count()) config.ag_threshold = ag_threshold;
  config.force_ring = force_ring;
  config.out_dir = out_dir;
  config.threads = threads;
  return config;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    const std::optional<RunConfig> config = parse_run_config(args, out);
    if (!config) return kExitOk;

    const std::string& command = config->command;
    if (command == "model") return cmd_model(*config, out);
    if (command == "plan") return cmd_plan(*config, out, err);
    if (command == "simulate") return cmd_simulate(*config, out, err);
    if (command == "sweep") return cmd_sweep(*config, out);
    if (command == "ratio") return cmd_ratio(*config, out);
    throw ParameterError("unknown command '" + command + "'");
  } catch (const IoError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitIo;
  } catch (const ParameterError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitParameter;
  } catch (const SweepError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitParameter;
  }
}

}  // namespace ringswitch::cli
