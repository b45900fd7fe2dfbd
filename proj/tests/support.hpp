#pragma once
// Independent reference implementations used as test oracles. None of these
// call into the library's distance or clustering code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "tadpole/matrix.hpp"
#include "tadpole/series.hpp"

namespace tadpole::oracle {

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t len, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<double> v(len);
  for (auto& x : v) x = g(rng);
  return v;
}

inline std::vector<double> random_walk_values(std::mt19937_64& rng, std::size_t len) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(len);
  double acc = 0.0;
  for (auto& x : v) x = acc += g(rng);
  return v;
}

inline LabeledDataset random_walk_set(std::size_t n, std::size_t len, std::uint64_t seed,
                                      std::size_t dims = 1) {
  std::mt19937_64 rng(seed);
  std::vector<TimeSeries> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<double>> ch;
    for (std::size_t c = 0; c < dims; ++c) ch.push_back(random_walk_values(rng, len));
    out.emplace_back(std::move(ch));
  }
  return LabeledDataset(std::move(out));
}

/// Minimum over every monotone warping path with |i - j| <= r of the summed
/// squared differences, by explicit recursive enumeration; sqrt at the end.
inline double enumerate_dtw(const std::vector<double>& a, const std::vector<double>& b,
                            std::size_t r) {
  const std::size_t n = a.size(), m = b.size();
  double best = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t i, std::size_t j,
                                                                   double cost) {
    const std::size_t gap = i > j ? i - j : j - i;
    if (gap > r) return;
    cost += (a[i] - b[j]) * (a[i] - b[j]);
    if (i + 1 == n && j + 1 == m) {
      best = std::min(best, cost);
      return;
    }
    if (i + 1 < n) walk(i + 1, j, cost);
    if (j + 1 < m) walk(i, j + 1, cost);
    if (i + 1 < n && j + 1 < m) walk(i + 1, j + 1, cost);
  };
  walk(0, 0, 0.0);
  return std::sqrt(best);
}

inline double plain_euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

/// Levenshtein distance with a full table.
inline std::size_t table_edit_distance(const std::string& s, const std::string& t) {
  std::vector<std::vector<std::size_t>> d(s.size() + 1, std::vector<std::size_t>(t.size() + 1));
  for (std::size_t i = 0; i <= s.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= t.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= s.size(); ++i)
    for (std::size_t j = 1; j <= t.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1)});
  return d[s.size()][t.size()];
}

inline double pair_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t agree = 0, total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      ++total;
      if ((a[i] == a[j]) == (b[i] == b[j])) ++agree;
    }
  return total == 0 ? 1.0 : static_cast<double>(agree) / static_cast<double>(total);
}

inline SquareMatrix random_distance_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  SquareMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d.set_symmetric(i, j, u(rng));
  return d;
}

/// Straightforward Density Peaks: counting density, prefix scan for delta,
/// top-k gamma, propagation in density order.
struct BruteDp {
  std::vector<std::size_t> rho;
  std::vector<std::size_t> order;
  std::vector<double> delta;
  std::vector<std::size_t> nn;
  std::vector<std::size_t> centers;
  std::vector<int> labels;
};

inline BruteDp brute_dp(const SquareMatrix& d, double dc, std::size_t k) {
  const std::size_t n = d.size();
  BruteDp r;
  r.rho.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d(i, j) < dc) ++r.rho[i];
  for (std::size_t i = 0; i < n; ++i) r.order.push_back(i);
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t x, std::size_t y) { return r.rho[x] > r.rho[y]; });
  r.delta.assign(n, 0.0);
  r.nn.assign(n, n);
  double largest = 0.0;
  for (std::size_t p = 1; p < n; ++p) {
    const std::size_t i = r.order[p];
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = n;
    for (std::size_t q = 0; q < p; ++q) {
      const std::size_t j = r.order[q];
      if (d(i, j) < best || (d(i, j) == best && j < arg)) {
        best = d(i, j);
        arg = j;
      }
    }
    r.delta[i] = best;
    r.nn[i] = arg;
    largest = std::max(largest, best);
  }
  r.delta[r.order[0]] = largest;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return static_cast<double>(r.rho[x]) * r.delta[x] > static_cast<double>(r.rho[y]) * r.delta[y];
  });
  r.centers.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
  r.labels.assign(n, 0);
  for (std::size_t c = 0; c < k; ++c) r.labels[r.centers[c]] = static_cast<int>(c) + 1;
  for (std::size_t i : r.order)
    if (r.labels[i] == 0 && r.nn[i] < n) r.labels[i] = r.labels[r.nn[i]];
  return r;
}

}  // namespace tadpole::oracle
