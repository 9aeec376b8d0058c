#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ringswitch/cost_params.hpp"
#include "ringswitch/types.hpp"

namespace ringswitch {

inline constexpr std::int64_t kKiB = 1024;
inline constexpr std::int64_t kMiB = 1024 * kKiB;

struct SweepGrid {
  int nodes = 32;
  double bandwidth_gbps = 800.0;
  double alpha_s_ns = 0.0;
  std::vector<double> delta_ns;
  std::vector<double> alpha_ns;
  std::vector<std::int64_t> message_bytes;
  Collective collective = Collective::kReduceScatter;
  AllGatherModel ag_model = AllGatherModel::kFullMessage;

  /// n=32, 800 Gbps, alpha_s=0, alpha {4,10,100,1000} ns,
  /// delta {4,10,100,1000,10000} ns, m {32 B, 4 MiB, 32 MiB}.
  static SweepGrid default_grid();

  std::size_t cell_count() const;
  /// Checks the grid shape and shared scalars; individual list values are
  /// checked cell by cell in run_grid.
  void validate() const;
};

/// Result of one grid cell.
///
/// per_threshold_ns[t] is the simulated completion with threshold t. For
/// AllGather t is the AllGather threshold; for AllReduce t is the
/// reduce-scatter threshold and the AllGather runs the mirrored schedule
/// (threshold L - t). model_ns holds the analytical prediction for the same
/// schedule under the grid's AllGather model.
struct SweepRecord {
  CostParams params;
  Collective collective = Collective::kReduceScatter;
  std::vector<double> per_threshold_ns;
  std::vector<double> model_ns;
  int best_threshold = 0;
  bool ring_fallback = false;
  double t_best_ns = 0.0;  // min(best switched schedule, Ring)
  double t_ring_ns = 0.0;
  double speedup_pct = 0.0;

  /// Largest |simulated - model| / max(|model|, 1e-300) over thresholds.
  double max_model_deviation() const;
};

class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SweepRecord run_cell(const CostParams& params, Collective collective,
                     AllGatherModel ag_model = AllGatherModel::kFullMessage);

/// One record per (m, delta, alpha) cell in that nesting order. Cells run on
/// up to `threads` workers (0 = hardware concurrency); output order does not
/// depend on scheduling.
std::vector<SweepRecord> run_grid(const SweepGrid& grid, unsigned threads = 0);

struct RatioRecord {
  int nodes = 0;
  Collective collective = Collective::kReduceScatter;
  std::int64_t message_bytes = 0;
  double alpha_ns = 0.0;
  double t_rd_ns = 0.0;
  double t_ring_ns = 0.0;
  double ratio = 1.0;
};

/// Static recursive doubling versus Ring, simulated, for every (m, alpha).
/// Emits a reduce-scatter row and an AllReduce row per pair.
std::vector<RatioRecord> ratio_experiment(int nodes,
                                          std::span<const std::int64_t> message_bytes,
                                          std::span<const double> alpha_ns,
                                          double bandwidth_gbps,
                                          double alpha_s_ns = 0.0);

}  // namespace ringswitch
