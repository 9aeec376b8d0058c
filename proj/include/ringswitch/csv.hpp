#pragma once

#include <iosfwd>
#include <span>
#include <string_view>

#include "ringswitch/sweep.hpp"

namespace ringswitch {

inline constexpr std::string_view kDetailHeader =
    "n,collective,m_bytes,alpha_ns,alpha_s_ns,delta_ns,bandwidth_gbps,T,total_ns";
inline constexpr std::string_view kSummaryHeader =
    "n,collective,m_bytes,alpha_ns,alpha_s_ns,delta_ns,bandwidth_gbps,best_T,"
    "t_best_ns,t_ring_ns,speedup_pct";
inline constexpr std::string_view kRatioHeader =
    "n,collective,m_bytes,alpha_ns,t_rd_ns,t_ring_ns,ratio";

// Numbers are written in shortest round-trip form, so re-reading a CSV
// recovers the exact doubles.
void write_detail_csv(std::ostream& out, std::span<const SweepRecord> records);
void write_summary_csv(std::ostream& out, std::span<const SweepRecord> records);
void write_ratio_csv(std::ostream& out, std::span<const RatioRecord> records);

}  // namespace ringswitch
