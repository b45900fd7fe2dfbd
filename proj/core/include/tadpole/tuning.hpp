#pragma once

// Parameter heuristic based on synthetic link constraints.
//
// A seeded sample R of the dataset is copied and each copy is warped. An
// original and its own copy form a must-link pair; an original and any other
// copy form a cannot-link pair. For a (window, dc) setting a must-link pair
// is satisfied when their DTW is below dc and a cannot-link pair when it is
// at or above dc. The score is the satisfied fraction of all |R|^2 pairs.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tadpole/series.hpp"

namespace tadpole {

/// Seeded monotone piecewise-linear time distortion with maximum index
/// displacement floor(warp_amount * length), resampled by linear
/// interpolation. warp_amount must be in [0, 0.25]; 0 returns the input.
/// Single-channel, length >= 8.
TimeSeries make_warped_copy(const TimeSeries& series, double warp_amount, std::uint64_t seed);

/// Same distortion applied to every channel.
TimeSeries warp_all_channels(const TimeSeries& series, double warp_amount, std::uint64_t seed);

struct ConstraintSet {
  std::vector<TimeSeries> originals;
  /// copies[i] is the warped copy of originals[i] (same pseudo-label i).
  std::vector<TimeSeries> copies;
  /// Dataset index each original was sampled from.
  std::vector<std::size_t> source;

  std::size_t size() const noexcept { return originals.size(); }
  std::size_t must_link_pairs() const noexcept { return size(); }
  std::size_t cannot_link_pairs() const noexcept { return size() * size() - size(); }
};

/// Samples `sample_size` distinct objects (2 <= sample_size <= n).
ConstraintSet make_constraint_set(const LabeledDataset& dataset, std::size_t sample_size,
                                  double warp_amount, std::uint64_t seed);

struct ConstraintTally {
  std::size_t must_link_satisfied = 0;
  std::size_t must_link_total = 0;
  std::size_t cannot_link_satisfied = 0;
  std::size_t cannot_link_total = 0;

  double score() const noexcept;
};

/// DTW (multidim sum) between every original r and every copy c: out[r][c].
std::vector<std::vector<double>> cross_distances(const ConstraintSet& cs, double window_frac,
                                                 unsigned threads = 1);

ConstraintTally tally_constraints(const std::vector<std::vector<double>>& cross, double dc);
ConstraintTally tally_constraints(const ConstraintSet& cs, double window_frac, double dc);

double constraint_score(const ConstraintSet& cs, double window_frac, double dc);

enum class SweepParameter { window, dc };

struct SweepPoint {
  double value = 0.0;
  double score = 0.0;
  std::size_t must_link_satisfied = 0;
  std::size_t cannot_link_satisfied = 0;
};

struct SweepResult {
  std::vector<SweepPoint> curve;
  /// argmax of the score, ties to the smaller value.
  double recommended = 0.0;
};

/// Scores every value of one parameter with the other held at `fixed`.
SweepResult parameter_sweep(const ConstraintSet& cs, SweepParameter param,
                            const std::vector<double>& values, double fixed, unsigned threads = 1);
SweepResult parameter_sweep(const LabeledDataset& dataset, SweepParameter param,
                            const std::vector<double>& values, double fixed,
                            std::size_t sample_size, double warp_amount, std::uint64_t seed,
                            unsigned threads = 1);

/// `count` evenly spaced quantiles of the original-to-copy distances.
std::vector<double> dc_grid(const ConstraintSet& cs, double window_frac, std::size_t count,
                            unsigned threads = 1);

struct TunedParameters {
  double window_frac = 0.0;
  double dc = 0.0;
  SweepResult window_sweep;
  SweepResult dc_sweep;
};

/// Coordinate-wise workflow: sweep the window at `initial_dc`, fix the best
/// window, then sweep dc over dc_grid at that window.
TunedParameters tune_parameters(const ConstraintSet& cs, const std::vector<double>& windows,
                                double initial_dc, std::size_t dc_points, unsigned threads = 1);

/// CSV with header value,score.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

}  // namespace tadpole
