#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "tadpole/generators.hpp"
#include "tadpole/metrics.hpp"
#include "tadpole/ordering.hpp"
#include "tadpole/preprocess.hpp"

using namespace tadpole;

TEST(RandIndex, HandValues) {
  const std::vector<int> a{1, 1, 2}, b{1, 2, 2};
  EXPECT_DOUBLE_EQ(rand_index(a, a), 1.0);
  EXPECT_DOUBLE_EQ(rand_index(a, b), 1.0 / 3.0);
}

TEST(RandIndex, PermutationInvariant) {
  const std::vector<int> a{1, 1, 2, 3, 3, 2}, b{2, 2, 3, 1, 1, 3}, c{1, 2, 2, 3, 1, 3};
  EXPECT_DOUBLE_EQ(rand_index(a, b), 1.0);
  EXPECT_DOUBLE_EQ(rand_index(a, c), rand_index(b, c));
}

TEST(RandIndex, MatchesPairEnumeration) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> size(2, 12);
    std::uniform_int_distribution<int> lab(1, 4);
    const std::size_t n = size(rng);
    std::vector<int> a(n), b(n);
    for (auto& x : a) x = lab(rng);
    for (auto& x : b) x = lab(rng);
    EXPECT_EQ(rand_index(a, b), oracle::pair_rand_index(a, b));
  }
}

TEST(Nmi, Conventions) {
  const std::vector<int> a{1, 1, 2, 2, 3}, perm{3, 3, 1, 1, 2}, ones(5, 1);
  EXPECT_NEAR(nmi(a, a), 1.0, 1e-12);
  EXPECT_NEAR(nmi(a, perm), 1.0, 1e-12);
  EXPECT_EQ(nmi(a, ones), 0.0);
  EXPECT_EQ(nmi(ones, a), 0.0);
}

TEST(Nmi, ArithmeticMeanNormalization) {
  const std::vector<int> a{1, 1, 2, 2}, b{1, 1, 1, 2};
  // H(a) = ln 2, H(b) = -(3/4 ln 3/4 + 1/4 ln 1/4); I from the contingency table.
  const double ha = std::log(2.0);
  const double hb = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25));
  const double mi = 0.5 * std::log(0.5 / (0.5 * 0.75)) + 0.25 * std::log(0.25 / (0.5 * 0.75)) +
                    0.25 * std::log(0.25 / (0.5 * 0.25));
  EXPECT_NEAR(nmi(a, b), mi / (0.5 * (ha + hb)), 1e-12);
}

TEST(OracleCount, HandValues) {
  SquareMatrix close(3);
  close.set_symmetric(0, 1, 0.1);
  close.set_symmetric(0, 2, 0.2);
  close.set_symmetric(1, 2, 0.3);
  auto p = local_density(close, 1.0);
  auto d = delta_distances(close, p);
  EXPECT_EQ(oracle_computation_count(close, 1.0, p, d), 3u);

  SquareMatrix far(2);
  far.set_symmetric(0, 1, 5.0);
  p = local_density(far, 1.0);
  d = delta_distances(far, p);
  EXPECT_EQ(oracle_computation_count(far, 1.0, p, d), 1u);
}

TEST(OracleCount, BelowTadpoleCallsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ds = oracle::random_walk_set(30, 48, 50 + seed);
    const auto problem = time_series_problem(ds, 0.1);
    const double dc = percentile_cutoff(problem.bounds, 5);
    const auto r = tadpole_cluster(problem, TadpoleOptions{dc, 2});
    const auto full = full_distance_matrix(ds.size(), problem.distance);
    const auto p = local_density(full, dc);
    const auto d = delta_distances(full, p);
    const auto oracle = oracle_computation_count(full, dc, p, d);
    EXPECT_LE(oracle, r.stats.exact_calls());
    EXPECT_LE(r.stats.exact_calls(), r.stats.total_pairs);
  }
}

class OrderingTraceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ds_ = znormalize(generate_cbf(45, 64, 2));
    truth_ = encode_labels(*ds_.labels());
    problem_ = time_series_problem(ds_, 0.1);
    dc_ = percentile_cutoff(problem_.bounds, 10);
    exact_ = tadpole_cluster(problem_, TadpoleOptions{dc_, 3}).model.labels;
  }

  LabeledDataset ds_;
  std::vector<int> truth_;
  DistanceProblem problem_;
  double dc_ = 0.0;
  std::vector<int> exact_;
};

TEST_F(OrderingTraceTest, EveryKindConvergesToTheExactClustering) {
  const double final_ri = rand_index(exact_, truth_);
  for (auto kind : {OrderingKind::tadpole, OrderingKind::random, OrderingKind::oracle}) {
    const auto tr = ordering_trace(problem_, dc_, 3, OrderingSpec{kind, 4}, truth_);
    EXPECT_EQ(tr.final_labels, exact_) << to_string(kind);
    EXPECT_DOUBLE_EQ(tr.rand_index.back(), final_ri);
    EXPECT_EQ(tr.rand_index.size(), tr.trace.snapshots.size());
  }
}

TEST_F(OrderingTraceTest, WithoutGroundTruthEndsAtOne) {
  const auto tr = ordering_trace(problem_, dc_, 3, OrderingSpec{OrderingKind::random, 1});
  EXPECT_DOUBLE_EQ(tr.rand_index.back(), 1.0);
  EXPECT_THROW(ordering_trace(problem_, dc_, 3, OrderingSpec{OrderingKind::oracle, 0}),
               std::invalid_argument);
}

TEST_F(OrderingTraceTest, RandomOrderIsSeeded) {
  const auto a = ordering_trace(problem_, dc_, 3, OrderingSpec{OrderingKind::random, 7}, truth_);
  const auto b = ordering_trace(problem_, dc_, 3, OrderingSpec{OrderingKind::random, 7}, truth_);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.rand_index, b.rand_index);
}

TEST_F(OrderingTraceTest, TadpoleKindMatchesEngineTrace) {
  const auto tr = ordering_trace(problem_, dc_, 3, OrderingSpec{}, truth_);
  const auto r = tadpole_cluster(problem_, TadpoleOptions{dc_, 3});
  EXPECT_EQ(tr.trace, r.trace);
  EXPECT_EQ(tr.stats, r.stats);
  EXPECT_EQ(score_trace(r.trace, truth_).rand_index, tr.rand_index);
}

TEST_F(OrderingTraceTest, CsvHeaderAndRows) {
  const auto tr = ordering_trace(problem_, dc_, 3, OrderingSpec{}, truth_);
  std::ostringstream out;
  write_trace_csv(out, tr);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "exact_calls,processed_count,rand_index");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, tr.trace.snapshots.size());
}

TEST_F(OrderingTraceTest, CallsToReach) {
  const auto tr = ordering_trace(problem_, dc_, 3, OrderingSpec{}, truth_);
  const auto at_end = calls_to_reach(tr, tr.rand_index.back());
  ASSERT_TRUE(at_end.has_value());
  EXPECT_LE(*at_end, tr.trace.snapshots.back().exact_calls);
  EXPECT_FALSE(calls_to_reach(tr, 1.5).has_value());
}

TEST(ParseOrdering, Names) {
  EXPECT_EQ(parse_ordering("oracle"), OrderingKind::oracle);
  EXPECT_EQ(to_string(parse_ordering("random")), "random");
  EXPECT_THROW(parse_ordering("sideways"), std::invalid_argument);
}
