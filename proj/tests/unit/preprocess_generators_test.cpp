#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <map>

#include "support.hpp"
#include "tadpole/generators.hpp"
#include "tadpole/preprocess.hpp"

using namespace tadpole;

namespace {
std::vector<double> values(const TimeSeries& s) {
  const auto c = s.channel(0);
  return {c.begin(), c.end()};
}
}  // namespace

TEST(Znormalize, ThreePoints) {
  const auto z = values(znormalize(TimeSeries(std::vector<double>{1, 2, 3})));
  EXPECT_NEAR(z[0], -1.2247, 1e-4);
  EXPECT_NEAR(z[1], 0.0, 1e-12);
  EXPECT_NEAR(z[2], 1.2247, 1e-4);
}

TEST(Znormalize, ConstantBecomesZeros) {
  EXPECT_EQ(values(znormalize(TimeSeries(std::vector<double>{5, 5, 5}))),
            (std::vector<double>{0, 0, 0}));
}

TEST(Znormalize, Idempotent) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const TimeSeries s(oracle::random_values(rng, 50, 4.0));
    const auto once = values(znormalize(s));
    const auto twice = values(znormalize(znormalize(s)));
    for (std::size_t i = 0; i < once.size(); ++i) EXPECT_NEAR(once[i], twice[i], 1e-9);
  }
}

TEST(Znormalize, PerChannel) {
  const TimeSeries s(std::vector<std::vector<double>>{{1, 2, 3}, {10, 10, 10}});
  const auto z = znormalize(s);
  EXPECT_NEAR(z.channel(0)[2], 1.2247, 1e-4);
  EXPECT_EQ(z.channel(1)[0], 0.0);
}

TEST(Smooth, WindowOneIsIdentity) {
  const TimeSeries s(std::vector<double>{3, -1, 4, 1, 5});
  EXPECT_EQ(smooth(s, 1), s);
}

TEST(Smooth, TruncatedWindowAtEdges) {
  const auto out = values(smooth(TimeSeries(std::vector<double>{0, 3, 0}), 3));
  EXPECT_DOUBLE_EQ(out[0], 1.5);
  EXPECT_DOUBLE_EQ(out[1], 1.0);
  EXPECT_DOUBLE_EQ(out[2], 1.5);
}

TEST(Smooth, MatchesDirectMeanAndKeepsLength) {
  std::mt19937_64 rng(9);
  const auto v = oracle::random_values(rng, 40);
  for (std::size_t w : {1u, 3u, 7u, 41u, 81u}) {
    const auto out = values(smooth(TimeSeries(v), w));
    ASSERT_EQ(out.size(), v.size());
    const long h = static_cast<long>(w / 2);
    for (long i = 0; i < static_cast<long>(v.size()); ++i) {
      double s = 0.0;
      int c = 0;
      for (long j = std::max(0L, i - h); j <= std::min<long>(v.size() - 1, i + h); ++j, ++c)
        s += v[j];
      EXPECT_NEAR(out[i], s / c, 1e-12);
    }
  }
}

TEST(Smooth, RejectsEvenOrZeroWindow) {
  const TimeSeries s(std::vector<double>{1, 2, 3});
  EXPECT_THROW(smooth(s, 0), std::invalid_argument);
  EXPECT_THROW(smooth(s, 4), std::invalid_argument);
}

TEST(GenerateCbf, Deterministic) {
  EXPECT_EQ(generate_cbf(30, 128, 5), generate_cbf(30, 128, 5));
  EXPECT_NE(generate_cbf(30, 128, 5), generate_cbf(30, 128, 6));
}

TEST(GenerateCbf, RoundRobinClasses) {
  const auto ds = generate_cbf(30, 128, 1);
  std::map<std::string, int> counts;
  for (const auto& l : *ds.labels()) ++counts[l];
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [_, c] : counts) EXPECT_EQ(c, 10);
  EXPECT_EQ(ds.length(), 128u);
}

TEST(GenerateCbf, RejectsTinyInputs) {
  EXPECT_THROW(generate_cbf(2, 128, 0), std::invalid_argument);
  EXPECT_THROW(generate_cbf(10, 31, 0), std::invalid_argument);
}

TEST(GenerateCbf, EuclideanOneNearestNeighbourAboveEightyPercent) {
  const auto ds = generate_cbf(150, 128, 11);
  const auto& labels = *ds.labels();
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < ds.size(); ++i) rows.push_back(values(ds[i]));
  int correct = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      const double d = oracle::plain_euclidean(rows[i], rows[j]);
      if (d < best) {
        best = d;
        arg = j;
      }
    }
    if (labels[arg] == labels[i]) ++correct;
  }
  EXPECT_GT(correct / 150.0, 0.80);
}

TEST(GenerateRandomWalks, ShapeAndDeterminism) {
  const auto a = generate_random_walks(5, 64, 2);
  EXPECT_EQ(a, generate_random_walks(5, 64, 2));
  EXPECT_FALSE(a.labels().has_value());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].length(), 64u);
}

TEST(GenerateRandomWalks, UnitVarianceIncrements) {
  const auto ds = generate_random_walks(4, 1024, 8);
  for (std::size_t s = 0; s < ds.size(); ++s) {
    const auto v = values(ds[s]);
    std::vector<double> d;
    for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
    double mean = 0.0;
    for (double x : d) mean += x;
    mean /= static_cast<double>(d.size());
    double var = 0.0;
    for (double x : d) var += (x - mean) * (x - mean);
    var /= static_cast<double>(d.size() - 1);
    EXPECT_GE(var, 0.7);
    EXPECT_LE(var, 1.3);
  }
}
