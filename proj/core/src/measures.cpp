#include "tadpole/measures.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "tadpole/parallel.hpp"

namespace tadpole {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("series lengths differ");
}

void require_same_shape(const TimeSeries& a, const TimeSeries& b) {
  if (a.length() != b.length() || a.dims() != b.dims())
    throw std::invalid_argument("series shapes differ");
}

void require_single_channel(const TimeSeries& s) {
  if (s.dims() != 1)
    throw std::invalid_argument("single-channel operation given a multi-channel series");
}

}  // namespace

std::size_t band_radius(std::size_t length, double window_frac) {
  if (!(window_frac >= 0.0 && window_frac <= 1.0))
    throw std::invalid_argument("window fraction must be in [0, 1]");
  return static_cast<std::size_t>(std::floor(window_frac * static_cast<double>(length)));
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

double euclidean(const TimeSeries& a, const TimeSeries& b) {
  require_same_shape(a, b);
  double acc = 0.0;
  for (std::size_t c = 0; c < a.dims(); ++c) {
    const auto x = a.channel(c);
    const auto y = b.channel(c);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - y[i];
      acc += d * d;
    }
  }
  return std::sqrt(acc);
}

double dtw(std::span<const double> a, std::span<const double> b, std::size_t radius) {
  require_same_length(a.size(), b.size());
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return 0.0;
  std::vector<double> prev(m, kInf);
  std::vector<double> cur(m, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > radius ? i - radius : 0;
    const std::size_t hi = std::min(m - 1, i + radius);
    // cur[lo - 1] may hold a stale value from two rows back, so the left
    // neighbour of the first band cell is tracked separately.
    double left = kInf;
    for (std::size_t j = lo; j <= hi; ++j) {
      const double d = a[i] - b[j];
      double best;
      if (i == 0 && j == 0) {
        best = 0.0;
      } else {
        best = left;
        if (i > 0) {
          best = std::min(best, prev[j]);
          if (j > 0) best = std::min(best, prev[j - 1]);
        }
      }
      cur[j] = d * d + best;
      left = cur[j];
    }
    std::swap(prev, cur);
  }
  return std::sqrt(prev[m - 1]);
}

double dtw(const TimeSeries& a, const TimeSeries& b, double window_frac) {
  require_same_shape(a, b);
  require_single_channel(a);
  return dtw(a.channel(0), b.channel(0), band_radius(a.length(), window_frac));
}

Envelope envelope(std::span<const double> series, std::size_t radius) {
  const std::size_t n = series.size();
  Envelope env{std::vector<double>(n), std::vector<double>(n), radius};
  // Monotone deques over the window [i - r, i + r].
  std::deque<std::size_t> maxq;
  std::deque<std::size_t> minq;
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hi = std::min(n - 1, i + radius);
    for (; next <= hi; ++next) {
      while (!maxq.empty() && series[maxq.back()] <= series[next]) maxq.pop_back();
      maxq.push_back(next);
      while (!minq.empty() && series[minq.back()] >= series[next]) minq.pop_back();
      minq.push_back(next);
    }
    const std::size_t lo = i > radius ? i - radius : 0;
    while (maxq.front() < lo) maxq.pop_front();
    while (minq.front() < lo) minq.pop_front();
    env.upper[i] = series[maxq.front()];
    env.lower[i] = series[minq.front()];
  }
  return env;
}

Envelope envelope(const TimeSeries& series, double window_frac) {
  require_single_channel(series);
  return envelope(series.channel(0), band_radius(series.length(), window_frac));
}

double lb_keogh(std::span<const double> query, const Envelope& env) {
  require_same_length(query.size(), env.upper.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < query.size(); ++i) {
    const double q = query[i];
    double d = 0.0;
    if (q > env.upper[i]) {
      d = q - env.upper[i];
    } else if (q < env.lower[i]) {
      d = q - env.lower[i];
    }
    acc += d * d;
  }
  return std::sqrt(acc);
}

double lb_symmetric(std::span<const double> a, std::span<const double> b, std::size_t radius) {
  require_same_length(a.size(), b.size());
  return std::max(lb_keogh(a, envelope(b, radius)), lb_keogh(b, envelope(a, radius)));
}

double lb_symmetric(const TimeSeries& a, const TimeSeries& b, double window_frac) {
  require_same_shape(a, b);
  require_single_channel(a);
  return lb_symmetric(a.channel(0), b.channel(0), band_radius(a.length(), window_frac));
}

double multidim_distance(const TimeSeries& a, const TimeSeries& b, double window_frac) {
  require_same_shape(a, b);
  const std::size_t r = band_radius(a.length(), window_frac);
  double total = 0.0;
  for (std::size_t c = 0; c < a.dims(); ++c) total += dtw(a.channel(c), b.channel(c), r);
  return total;
}

double multidim_euclidean(const TimeSeries& a, const TimeSeries& b) {
  require_same_shape(a, b);
  double total = 0.0;
  for (std::size_t c = 0; c < a.dims(); ++c) total += euclidean(a.channel(c), b.channel(c));
  return total;
}

BoundMatrices bound_matrices(const LabeledDataset& dataset, double window_frac, unsigned threads) {
  const std::size_t n = dataset.size();
  if (n < 2) throw std::invalid_argument("bound matrices need at least two series");
  const std::size_t dims = dataset.dims();
  const std::size_t r = band_radius(dataset.length(), window_frac);

  std::vector<std::vector<Envelope>> envs(n);
  parallel_for(n, threads, [&](std::size_t i) {
    envs[i].reserve(dims);
    for (std::size_t c = 0; c < dims; ++c) envs[i].push_back(envelope(dataset[i].channel(c), r));
  });

  std::vector<double> lower(pair_count(n));
  std::vector<double> upper(pair_count(n));
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double lb = 0.0;
      double ub = 0.0;
      for (std::size_t c = 0; c < dims; ++c) {
        const auto x = dataset[i].channel(c);
        const auto y = dataset[j].channel(c);
        lb += std::max(lb_keogh(x, envs[j][c]), lb_keogh(y, envs[i][c]));
        ub += euclidean(x, y);
      }
      const std::size_t p = pair_index(n, i, j);
      lower[p] = lb;
      upper[p] = ub;
    }
  });

  BoundMatrices out{SquareMatrix(n), SquareMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t p = pair_index(n, i, j);
      out.lower.set_symmetric(i, j, lower[p]);
      out.upper.set_symmetric(i, j, upper[p]);
    }
  }
  return out;
}

SquareMatrix full_distance_matrix(std::size_t n, const PairDistance& distance, unsigned threads) {
  std::vector<double> values(pair_count(n));
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) values[pair_index(n, i, j)] = distance(i, j);
  });
  SquareMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d.set_symmetric(i, j, values[pair_index(n, i, j)]);
  return d;
}

PairDistance dataset_distance(const LabeledDataset& dataset, Measure measure, double window_frac) {
  band_radius(dataset.length(), window_frac);  // validates the fraction up front
  if (measure == Measure::euclidean) {
    return [&dataset](std::size_t i, std::size_t j) {
      return multidim_euclidean(dataset[i], dataset[j]);
    };
  }
  return [&dataset, window_frac](std::size_t i, std::size_t j) {
    return multidim_distance(dataset[i], dataset[j], window_frac);
  };
}

}  // namespace tadpole
