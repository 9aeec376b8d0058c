#include "ringswitch/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "ringswitch/cost_model.hpp"
#include "ringswitch/flowsim.hpp"
#include "ringswitch/planner.hpp"

namespace ringswitch {

namespace {

std::string describe_cell(const CostParams& p) {
  return fmt::format("n={} m_bytes={} alpha_ns={} alpha_s_ns={} delta_ns={} bandwidth_gbps={}",
                     p.nodes, p.message_bytes, p.alpha_ns, p.alpha_s_ns, p.delta_ns,
                     p.bandwidth_gbps);
}

}  // namespace

SweepGrid SweepGrid::default_grid() {
  SweepGrid grid;
  grid.delta_ns = {4, 10, 100, 1000, 10000};
  grid.alpha_ns = {4, 10, 100, 1000};
  grid.message_bytes = {32, 4 * kMiB, 32 * kMiB};
  return grid;
}

std::size_t SweepGrid::cell_count() const {
  return delta_ns.size() * alpha_ns.size() * message_bytes.size();
}

void SweepGrid::validate() const {
  if (delta_ns.empty() || alpha_ns.empty() || message_bytes.empty()) {
    throw ParameterError("empty grid");
  }
  log2_exact(nodes);
  // Per-value checks happen per cell so a failure names the offending cell.
  CostParams{nodes, 0, 0.0, alpha_s_ns, bandwidth_gbps, 0.0}.validate();
}

double SweepRecord::max_model_deviation() const {
  double worst = 0.0;
  for (std::size_t t = 0; t < per_threshold_ns.size() && t < model_ns.size(); ++t) {
    const double scale = std::max(std::abs(model_ns[t]), 1e-300);
    worst = std::max(worst, std::abs(per_threshold_ns[t] - model_ns[t]) / scale);
  }
  return worst;
}

SweepRecord run_cell(const CostParams& params, Collective collective,
                     AllGatherModel ag_model) {
  const int steps = require_recursive_doubling(params);

  SweepRecord record;
  record.params = params;
  record.collective = collective;
  record.per_threshold_ns.reserve(static_cast<std::size_t>(steps) + 1);
  record.model_ns.reserve(static_cast<std::size_t>(steps) + 1);

  for (int t = 0; t <= steps; ++t) {
    Plan plan;
    double model = 0.0;
    switch (collective) {
      case Collective::kReduceScatter:
        plan = Plan::switched(collective, t, std::nullopt);
        model = switched_rs_cost(t, params).total_ns;
        break;
      case Collective::kAllGather:
        plan = Plan::switched(collective, std::nullopt, t);
        model = switched_ag_cost(t, params, ag_model).total_ns;
        break;
      case Collective::kAllReduce:
        plan = Plan::switched(collective, t, steps - t);
        model = allreduce_cost(t, steps - t, params, ag_model);
        break;
    }
    record.per_threshold_ns.push_back(simulate_collective(plan, params).total_ns);
    record.model_ns.push_back(model);
  }

  record.t_ring_ns = simulate_collective(Plan::ring(collective), params).total_ns;

  double best = record.per_threshold_ns.front();
  for (int t = 1; t <= steps; ++t) {
    if (record.per_threshold_ns[t] <= best) {
      best = record.per_threshold_ns[t];
      record.best_threshold = t;
    }
  }

  if (best <= record.t_ring_ns) {
    record.t_best_ns = best;
    record.speedup_pct =
        best > 0.0 ? (record.t_ring_ns - best) / best * 100.0 : 0.0;
  } else {
    record.ring_fallback = true;
    record.t_best_ns = record.t_ring_ns;
    record.speedup_pct = 0.0;
  }
  return record;
}

std::vector<SweepRecord> run_grid(const SweepGrid& grid, unsigned threads) {
  grid.validate();

  std::vector<CostParams> cells;
  cells.reserve(grid.cell_count());
  for (auto m : grid.message_bytes) {
    for (double delta : grid.delta_ns) {
      for (double alpha : grid.alpha_ns) {
        cells.push_back(CostParams{grid.nodes, m, alpha, grid.alpha_s_ns,
                                   grid.bandwidth_gbps, delta});
      }
    }
  }

  std::vector<SweepRecord> records(cells.size());
  std::vector<std::exception_ptr> failures(cells.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        records[i] = run_cell(cells[i], grid.collective, grid.ag_model);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
    worker();
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const std::exception& e) {
      throw SweepError("sweep cell failed (" + describe_cell(cells[i]) + "): " + e.what());
    }
  }
  return records;
}

std::vector<RatioRecord> ratio_experiment(int nodes,
                                          std::span<const std::int64_t> message_bytes,
                                          std::span<const double> alpha_ns,
                                          double bandwidth_gbps, double alpha_s_ns) {
  if (message_bytes.empty() || alpha_ns.empty()) throw ParameterError("empty grid");
  const int steps = log2_exact(nodes);

  std::vector<RatioRecord> out;
  out.reserve(2 * message_bytes.size() * alpha_ns.size());
  for (auto m : message_bytes) {
    for (double alpha : alpha_ns) {
      const CostParams p{nodes, m, alpha, alpha_s_ns, bandwidth_gbps, 0.0};
      p.validate();
      for (Collective c : {Collective::kReduceScatter, Collective::kAllReduce}) {
        // Fully static recursive doubling: RS threshold L, AG threshold 0.
        const Plan rd = Plan::switched(c, steps, 0);
        RatioRecord r;
        r.nodes = nodes;
        r.collective = c;
        r.message_bytes = m;
        r.alpha_ns = alpha;
        r.t_rd_ns = simulate_collective(rd, p).total_ns;
        r.t_ring_ns = simulate_collective(Plan::ring(c), p).total_ns;
        r.ratio = r.t_ring_ns > 0.0 ? r.t_rd_ns / r.t_ring_ns : 1.0;
        out.push_back(r);
      }
    }
  }
  return out;
}

}  // namespace ringswitch
