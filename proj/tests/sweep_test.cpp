#include "ringswitch/sweep.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "ringswitch/csv.hpp"
#include "test_support.hpp"

namespace ringswitch {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

const SweepRecord& cell(const std::vector<SweepRecord>& records, std::int64_t m,
                        double delta, double alpha) {
  auto it = std::find_if(records.begin(), records.end(), [&](const SweepRecord& r) {
    return r.params.message_bytes == m && r.params.delta_ns == delta && r.params.alpha_ns == alpha;
  });
  EXPECT_NE(it, records.end());
  return *it;
}

TEST(RunCell, HeadlineLatencyCell) {
  const SweepRecord r = run_cell(testing::latency_case(), Collective::kReduceScatter);
  EXPECT_EQ(r.best_threshold, 1);
  EXPECT_FALSE(r.ring_fallback);
  EXPECT_NEAR(r.t_best_ns, 5400.31, 1e-9 * 5400.31);
  EXPECT_NEAR(r.t_ring_ns, 31000.31, 1e-9 * 31000.31);
  // (31000.31 - 5400.31) / 5400.31 * 100
  EXPECT_NEAR(r.speedup_pct, 25600.0 / 5400.31 * 100.0, 1e-6);
  EXPECT_EQ(r.per_threshold_ns.size(), 6u);
}

TEST(RunCell, LargeMessageCell) {
  // Ring 31000 + 335544.32*31/32 = 356058.56;
  // T=1: 1000 + 167772.16 + 4*1004 + 335544.32*(15/32) = 330074.56.
  const CostParams p{32, 32 * kMiB, 1000.0, 0.0, 800.0, 4.0};
  const SweepRecord r = run_cell(p, Collective::kReduceScatter);
  EXPECT_EQ(r.best_threshold, 1);
  EXPECT_NEAR(r.t_ring_ns, 356058.56, 1e-6);
  EXPECT_NEAR(r.t_best_ns, 330074.56, 1e-6);
  EXPECT_NEAR(r.speedup_pct, (356058.56 - 330074.56) / 330074.56 * 100.0, 1e-6);
}

TEST(RunCell, HugeReconfigurationDelayFallsBackToRing) {
  const CostParams p{32, 32, 4.0, 0.0, 800.0, 1e9};
  const SweepRecord r = run_cell(p, Collective::kReduceScatter);
  EXPECT_TRUE(r.ring_fallback);
  EXPECT_EQ(r.best_threshold, 5);
  EXPECT_EQ(r.speedup_pct, 0.0);
  EXPECT_EQ(r.t_best_ns, r.t_ring_ns);
}

TEST(RunCell, AllZeroCellHasZeroSpeedup) {
  const SweepRecord r = run_cell(CostParams{8, 0, 0.0, 0.0, 800.0, 0.0}, Collective::kAllReduce);
  EXPECT_EQ(r.t_best_ns, 0.0);
  EXPECT_EQ(r.speedup_pct, 0.0);
}

TEST(RunCell, ModelDeviation) {
  const CostParams p{16, 4096, 100.0, 20.0, 800.0, 50.0};
  EXPECT_LE(run_cell(p, Collective::kReduceScatter).max_model_deviation(), 1e-9);
  EXPECT_LE(run_cell(p, Collective::kAllGather, AllGatherModel::kReverseOfReduceScatter)
                .max_model_deviation(),
            1e-9);
  EXPECT_LE(run_cell(p, Collective::kAllReduce, AllGatherModel::kReverseOfReduceScatter)
                .max_model_deviation(),
            1e-9);
  // The full-message AllGather is a different static pattern than the one
  // simulated, so the two disagree whenever a static step exists.
  EXPECT_GT(run_cell(p, Collective::kAllGather).max_model_deviation(), 1e-3);
}

TEST(RunGrid, CanonicalOrderAndCardinality) {
  const SweepGrid grid = SweepGrid::default_grid();
  const auto records = run_grid(grid, 1);
  ASSERT_EQ(records.size(), 60u);
  std::size_t k = 0;
  for (auto m : grid.message_bytes) {
    for (double d : grid.delta_ns) {
      for (double a : grid.alpha_ns) {
        EXPECT_EQ(records[k].params.message_bytes, m);
        EXPECT_EQ(records[k].params.delta_ns, d);
        EXPECT_EQ(records[k].params.alpha_ns, a);
        ++k;
      }
    }
  }
}

TEST(RunGrid, SingleCellMatchesRunCell) {
  SweepGrid grid = SweepGrid::default_grid();
  grid.message_bytes = {32};
  grid.alpha_ns = {1000};
  grid.delta_ns = {100};
  const auto records = run_grid(grid);
  ASSERT_EQ(records.size(), 1u);
  const SweepRecord direct = run_cell(testing::latency_case(), Collective::kReduceScatter);
  EXPECT_EQ(records[0].per_threshold_ns, direct.per_threshold_ns);
  EXPECT_EQ(records[0].speedup_pct, direct.speedup_pct);
}

TEST(RunGrid, OutputIndependentOfThreadCount) {
  const SweepGrid grid = SweepGrid::default_grid();
  std::ostringstream a, b, c;
  write_summary_csv(a, run_grid(grid, 1));
  write_summary_csv(b, run_grid(grid, 4));
  write_summary_csv(c, run_grid(grid, 4));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(b.str(), c.str());
}

TEST(RunGrid, Errors) {
  SweepGrid empty = SweepGrid::default_grid();
  empty.alpha_ns.clear();
  EXPECT_THROW(
      {
        try {
          run_grid(empty);
        } catch (const ParameterError& e) {
          EXPECT_STREQ(e.what(), "empty grid");
          throw;
        }
      },
      ParameterError);

  SweepGrid bad = SweepGrid::default_grid();
  bad.alpha_ns = {4, -1};
  try {
    run_grid(bad);
    FAIL() << "expected SweepError";
  } catch (const SweepError& e) {
    EXPECT_NE(std::string(e.what()).find("alpha_ns=-1"), std::string::npos) << e.what();
  }

  SweepGrid odd = SweepGrid::default_grid();
  odd.nodes = 24;
  EXPECT_THROW(run_grid(odd), ParameterError);
}

TEST(SweepProperties, SpeedupNeverNegative) {
  for (auto c : {Collective::kReduceScatter, Collective::kAllGather, Collective::kAllReduce}) {
    SweepGrid grid = SweepGrid::default_grid();
    grid.collective = c;
    grid.message_bytes = {32, 4096, 4 * kMiB};
    for (const SweepRecord& r : run_grid(grid)) {
      EXPECT_GE(r.speedup_pct, 0.0);
      EXPECT_LE(r.t_best_ns, r.t_ring_ns);
      EXPECT_EQ(r.t_best_ns, std::min(r.t_ring_ns, r.per_threshold_ns[r.best_threshold]));
    }
  }
}

TEST(SweepProperties, SmallMessageMaximumAtLargestAlphaSmallestDelta) {
  SweepGrid grid = SweepGrid::default_grid();
  grid.message_bytes = {32};
  const auto records = run_grid(grid);
  const auto best = std::max_element(records.begin(), records.end(), [](auto& a, auto& b) {
    return a.speedup_pct < b.speedup_pct;
  });
  EXPECT_GE(best->speedup_pct, 430.0);
  EXPECT_LE(best->speedup_pct, 530.0);
  EXPECT_EQ(best->params.alpha_ns, 1000.0);
  EXPECT_EQ(best->params.delta_ns, 4.0);
  EXPECT_EQ(cell(records, 32, 100, 1000).best_threshold, 1);
}

TEST(RatioExperiment, ZeroMessageGivesUnitRatio) {
  const std::vector<std::int64_t> sizes{0};
  const std::vector<double> alphas{10, 100, 1000};
  for (const RatioRecord& r : ratio_experiment(16, sizes, alphas, 800.0)) {
    EXPECT_EQ(r.ratio, 1.0);
    EXPECT_EQ(r.t_rd_ns, r.t_ring_ns);
  }
}

TEST(RatioExperiment, TransmissionDominatedLimit) {
  const std::vector<std::int64_t> sizes{4 * kMiB, 32 * kMiB};
  const std::vector<double> alphas{1, 10};
  const double limit = (4.0 / 2.0) / (15.0 / 16.0);
  for (const RatioRecord& r : ratio_experiment(16, sizes, alphas, 800.0)) {
    EXPECT_NEAR(r.ratio, limit, 0.05);
    EXPECT_LT(r.ratio, limit);
  }
}

TEST(RatioExperiment, RowsPerCollectiveAndDecreasingInAlpha) {
  const std::vector<std::int64_t> sizes{32, 64 * kKiB};
  const std::vector<double> alphas{10, 50, 100, 500, 1000};
  const auto records = ratio_experiment(16, sizes, alphas, 800.0);
  ASSERT_EQ(records.size(), 2u * sizes.size() * alphas.size());
  for (auto c : {Collective::kReduceScatter, Collective::kAllReduce}) {
    for (auto m : sizes) {
      double previous = 1e300;
      for (const RatioRecord& r : records) {
        if (r.collective != c || r.message_bytes != m) continue;
        EXPECT_GT(r.ratio, 1.0);
        EXPECT_LT(r.ratio, previous);
        previous = r.ratio;
      }
    }
  }
  EXPECT_THROW(ratio_experiment(12, sizes, alphas, 800.0), ParameterError);
}

TEST(Csv, SchemasAndRoundTrip) {
  SweepGrid grid = SweepGrid::default_grid();
  grid.message_bytes = {32, 4 * kMiB};
  const auto records = run_grid(grid);

  std::ostringstream summary, detail;
  write_summary_csv(summary, records);
  write_detail_csv(detail, records);

  const auto summary_lines = lines_of(summary.str());
  ASSERT_EQ(summary_lines.size(), records.size() + 1);
  EXPECT_EQ(summary_lines[0], kSummaryHeader);
  const auto detail_lines = lines_of(detail.str());
  EXPECT_EQ(detail_lines[0], kDetailHeader);
  EXPECT_EQ(detail_lines.size(), records.size() * 6 + 1);

  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto fields = split(summary_lines[i + 1]);
    ASSERT_EQ(fields.size(), 11u);
    EXPECT_EQ(fields[1], "reduce-scatter");
    EXPECT_EQ(std::stoll(fields[2]), records[i].params.message_bytes);
    EXPECT_EQ(std::stoi(fields[7]), records[i].best_threshold);
    EXPECT_EQ(std::stod(fields[8]), records[i].t_best_ns);
    EXPECT_EQ(std::stod(fields[10]), records[i].speedup_pct);
  }

  const std::vector<std::int64_t> sizes{32};
  const std::vector<double> alphas{10};
  std::ostringstream ratio;
  write_ratio_csv(ratio, ratio_experiment(16, sizes, alphas, 800.0));
  const auto ratio_lines = lines_of(ratio.str());
  EXPECT_EQ(ratio_lines[0], kRatioHeader);
  ASSERT_EQ(ratio_lines.size(), 3u);
  EXPECT_EQ(split(ratio_lines[1]).size(), 7u);
}

}  // namespace
}  // namespace ringswitch
