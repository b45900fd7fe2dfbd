#include "tadpole/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>

namespace tadpole {

LabeledDataset generate_cbf(std::size_t n, std::size_t length, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("generate_cbf: n must be >= 3");
  if (length < 32) throw std::invalid_argument("generate_cbf: length must be >= 32");

  static const std::array<std::string, 3> kClasses{"cylinder", "bell", "funnel"};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> start(length / 8, length / 4);
  std::uniform_int_distribution<std::size_t> span(length / 4, 3 * length / 4);

  std::vector<TimeSeries> series;
  std::vector<std::string> labels;
  series.reserve(n);
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kind = i % 3;
    const std::size_t a = start(rng);
    const std::size_t b = std::min(length - 1, a + span(rng));
    const double amplitude = 6.0 + gauss(rng);
    const double width = static_cast<double>(b - a);
    std::vector<double> v(length);
    for (std::size_t t = 0; t < length; ++t) {
      double shape = 0.0;
      if (t >= a && t <= b) {
        const double pos = static_cast<double>(t - a) / width;
        shape = kind == 0 ? 1.0 : kind == 1 ? pos : 1.0 - pos;
      }
      v[t] = amplitude * shape + gauss(rng);
    }
    series.emplace_back(std::move(v));
    labels.push_back(kClasses[kind]);
  }
  return LabeledDataset(std::move(series), std::move(labels));
}

LabeledDataset generate_random_walks(std::size_t n, std::size_t length, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_random_walks: n must be >= 2");
  if (length < 2) throw std::invalid_argument("generate_random_walks: length must be >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<TimeSeries> series;
  series.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v(length);
    double acc = 0.0;
    for (auto& x : v) {
      acc += gauss(rng);
      x = acc;
    }
    series.emplace_back(std::move(v));
  }
  return LabeledDataset(std::move(series));
}

}  // namespace tadpole
