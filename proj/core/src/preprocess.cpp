#include "tadpole/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tadpole {
namespace {

template <typename F>
LabeledDataset map_series(const LabeledDataset& dataset, F&& f) {
  std::vector<TimeSeries> out;
  out.reserve(dataset.size());
  for (const auto& s : dataset.series()) out.push_back(f(s));
  return LabeledDataset(std::move(out), dataset.labels());
}

}  // namespace

TimeSeries znormalize(const TimeSeries& series) {
  std::vector<std::vector<double>> out;
  out.reserve(series.dims());
  for (const auto& ch : series.channels()) {
    const double n = static_cast<double>(ch.size());
    double mean = 0.0;
    for (double v : ch) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : ch) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / n);
    std::vector<double> z(ch.size(), 0.0);
    if (sd > 0.0) {
      std::transform(ch.begin(), ch.end(), z.begin(), [&](double v) { return (v - mean) / sd; });
    }
    out.push_back(std::move(z));
  }
  return TimeSeries(std::move(out));
}

LabeledDataset znormalize(const LabeledDataset& dataset) {
  return map_series(dataset, [](const TimeSeries& s) { return znormalize(s); });
}

TimeSeries smooth(const TimeSeries& series, std::size_t window) {
  if (window == 0 || window % 2 == 0)
    throw std::invalid_argument("smoothing window must be a positive odd integer");
  const std::size_t half = window / 2;
  std::vector<std::vector<double>> out;
  out.reserve(series.dims());
  for (const auto& ch : series.channels()) {
    const std::size_t n = ch.size();
    std::vector<double> sm(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t lo = i >= half ? i - half : 0;
      const std::size_t hi = std::min(n - 1, i + half);
      double acc = 0.0;
      for (std::size_t j = lo; j <= hi; ++j) acc += ch[j];
      sm[i] = acc / static_cast<double>(hi - lo + 1);
    }
    out.push_back(std::move(sm));
  }
  return TimeSeries(std::move(out));
}

LabeledDataset smooth(const LabeledDataset& dataset, std::size_t window) {
  return map_series(dataset, [window](const TimeSeries& s) { return smooth(s, window); });
}

}  // namespace tadpole
