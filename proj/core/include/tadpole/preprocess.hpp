#pragma once

#include <cstddef>

#include "tadpole/series.hpp"

namespace tadpole {

/// Per-channel (x - mean) / std with the population standard deviation.
/// A constant channel maps to all zeros.
TimeSeries znormalize(const TimeSeries& series);
LabeledDataset znormalize(const LabeledDataset& dataset);

/// Centered moving average of odd width; the window is truncated to the
/// available samples at both edges so the length is preserved.
TimeSeries smooth(const TimeSeries& series, std::size_t window);
LabeledDataset smooth(const LabeledDataset& dataset, std::size_t window);

}  // namespace tadpole
