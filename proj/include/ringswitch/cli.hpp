#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringswitch/cost_params.hpp"
#include "ringswitch/sweep.hpp"
#include "ringswitch/types.hpp"

namespace ringswitch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitIo = 3;

/// Everything the command line (or a `key = value` config file with the same
/// keys) can set. Unset optionals fall back to per-command defaults.
struct RunConfig {
  std::string command;

  std::optional<int> nodes;
  std::optional<std::vector<std::int64_t>> message_bytes;
  std::optional<std::int64_t> bytes_eq_tx;
  std::optional<std::vector<double>> alpha_ns;
  std::optional<std::vector<double>> delta_ns;
  std::optional<double> alpha_s_ns;
  std::optional<double> bandwidth_gbps;

  Collective collective = Collective::kReduceScatter;
  SelectionRule rule = SelectionRule::kArgmin;
  AllGatherModel ag_model = AllGatherModel::kFullMessage;
  std::optional<int> threshold;
  std::optional<int> ag_threshold;
  bool force_ring = false;

  std::filesystem::path out_dir = ".";
  unsigned threads = 0;

  /// Single-valued parameters for model/plan/simulate.
  CostParams scalar_params() const;
  /// Grid for `sweep`; unset lists take the default grid.
  SweepGrid sweep_grid() const;
};

/// Parses arguments (without the program name). Returns nullopt when help
/// was requested and printed to `out`. Throws ParameterError on bad flags
/// and IoError when the config file cannot be read.
std::optional<RunConfig> parse_run_config(std::span<const std::string> args,
                                          std::ostream& out);

/// Entry point behind the `ringswitch` binary. Returns the process exit code:
/// 0 on success, 2 for parameter errors, 3 for I/O errors.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ringswitch::cli
