#pragma once

#include <cstddef>
#include <cstdint>

#include "tadpole/series.hpp"

namespace tadpole {

/// Cylinder-Bell-Funnel series. Labels cycle "cylinder", "bell", "funnel".
///
/// For length L the event starts at a ~ U{L/8 .. L/4} and lasts
/// b - a ~ U{L/4 .. 3L/4} samples (the classic 16..32 / 32..96 at L = 128),
/// amplitude 6 + N(0,1), plus N(0,1) noise per sample. The output is not
/// normalized. Requires n >= 3 and length >= 32.
LabeledDataset generate_cbf(std::size_t n, std::size_t length, std::uint64_t seed);

/// Cumulative sums of N(0,1) increments, unlabeled. Requires n >= 2, length >= 2.
LabeledDataset generate_random_walks(std::size_t n, std::size_t length, std::uint64_t seed);

}  // namespace tadpole
