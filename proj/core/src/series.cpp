#include "tadpole/series.hpp"

#include <cmath>
#include <unordered_map>

namespace tadpole {

TimeSeries::TimeSeries(std::vector<double> values)
    : TimeSeries(std::vector<std::vector<double>>{std::move(values)}) {}

TimeSeries::TimeSeries(std::vector<std::vector<double>> channels)
    : channels_(std::move(channels)) {
  if (channels_.empty()) throw std::invalid_argument("time series needs at least one channel");
  const std::size_t len = channels_.front().size();
  if (len < 2) throw std::invalid_argument("time series length must be >= 2");
  for (const auto& ch : channels_) {
    if (ch.size() != len) throw std::invalid_argument("time series channels differ in length");
    for (double v : ch) {
      if (!std::isfinite(v)) throw std::invalid_argument("time series contains a non-finite value");
    }
  }
}

LabeledDataset::LabeledDataset(std::vector<TimeSeries> series,
                               std::optional<std::vector<std::string>> labels)
    : series_(std::move(series)), labels_(std::move(labels)) {
  if (labels_ && labels_->size() != series_.size())
    throw std::invalid_argument("label count does not match series count");
  for (const auto& s : series_) {
    if (s.length() != series_.front().length() || s.dims() != series_.front().dims())
      throw std::invalid_argument("dataset series differ in length or dims");
  }
}

LabeledDataset LabeledDataset::channel(std::size_t c) const {
  std::vector<TimeSeries> out;
  out.reserve(series_.size());
  for (const auto& s : series_) {
    const auto ch = s.channel(c);
    out.emplace_back(std::vector<double>(ch.begin(), ch.end()));
  }
  return LabeledDataset(std::move(out), labels_);
}

std::vector<int> encode_labels(const std::vector<std::string>& tokens) {
  std::unordered_map<std::string, int> ids;
  std::vector<int> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto [it, inserted] = ids.try_emplace(t, static_cast<int>(ids.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace tadpole
