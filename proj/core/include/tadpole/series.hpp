#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tadpole {

/// Raised for malformed input data (ragged rows, bad numbers, empty files).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One clusterable real-valued object: `dims` channels of equal length.
///
/// Construction validates the shape (at least one channel, every channel the
/// same length >= 2) and that every value is finite. Once built the object is
/// immutable.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> values);
  explicit TimeSeries(std::vector<std::vector<double>> channels);

  std::size_t length() const noexcept { return channels_.front().size(); }
  std::size_t dims() const noexcept { return channels_.size(); }

  std::span<const double> channel(std::size_t c) const { return channels_.at(c); }
  const std::vector<std::vector<double>>& channels() const noexcept { return channels_; }

  bool operator==(const TimeSeries&) const = default;

 private:
  std::vector<std::vector<double>> channels_;
};

/// A list of equal-shape series with optional class tokens.
class LabeledDataset {
 public:
  LabeledDataset() = default;
  explicit LabeledDataset(std::vector<TimeSeries> series,
                          std::optional<std::vector<std::string>> labels = std::nullopt);

  std::size_t size() const noexcept { return series_.size(); }
  bool empty() const noexcept { return series_.empty(); }
  std::size_t length() const noexcept { return series_.empty() ? 0 : series_.front().length(); }
  std::size_t dims() const noexcept { return series_.empty() ? 0 : series_.front().dims(); }

  const TimeSeries& operator[](std::size_t i) const { return series_[i]; }
  const std::vector<TimeSeries>& series() const noexcept { return series_; }
  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

  /// Series restricted to one channel, as a 1-channel dataset.
  LabeledDataset channel(std::size_t c) const;

  bool operator==(const LabeledDataset&) const = default;

 private:
  std::vector<TimeSeries> series_;
  std::optional<std::vector<std::string>> labels_;
};

/// Maps class tokens to dense integer ids in order of first appearance.
std::vector<int> encode_labels(const std::vector<std::string>& tokens);

}  // namespace tadpole
