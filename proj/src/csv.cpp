#include "ringswitch/csv.hpp"

#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace ringswitch {

void write_detail_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kDetailHeader << '\n';
  for (const SweepRecord& r : records) {
    const CostParams& p = r.params;
    for (std::size_t t = 0; t < r.per_threshold_ns.size(); ++t) {
      fmt::print(out, "{},{},{},{},{},{},{},{},{}\n", p.nodes, to_string(r.collective),
                 p.message_bytes, p.alpha_ns, p.alpha_s_ns, p.delta_ns,
                 p.bandwidth_gbps, t, r.per_threshold_ns[t]);
    }
  }
}

void write_summary_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kSummaryHeader << '\n';
  for (const SweepRecord& r : records) {
    const CostParams& p = r.params;
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{}\n", p.nodes,
               to_string(r.collective), p.message_bytes, p.alpha_ns, p.alpha_s_ns,
               p.delta_ns, p.bandwidth_gbps, r.best_threshold, r.t_best_ns,
               r.t_ring_ns, r.speedup_pct);
  }
}

void write_ratio_csv(std::ostream& out, std::span<const RatioRecord> records) {
  out << kRatioHeader << '\n';
  for (const RatioRecord& r : records) {
    fmt::print(out, "{},{},{},{},{},{},{}\n", r.nodes, to_string(r.collective),
               r.message_bytes, r.alpha_ns, r.t_rd_ns, r.t_ring_ns, r.ratio);
  }
}

}  // namespace ringswitch
