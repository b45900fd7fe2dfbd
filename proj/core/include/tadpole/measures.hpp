#pragma once

// Elastic distance measures and their admissible bounds.
//
// Every real-valued distance here uses squared per-sample differences with a
// final square root. With that convention the zero-width band DTW equals the
// Euclidean distance bit for bit, and the sandwich
//
//     lb_symmetric(a, b) <= dtw(a, b) <= euclidean(a, b)
//
// holds exactly in floating point, not only mathematically: each envelope
// term is <= some cell cost on every warping path, the diagonal path is one
// of the paths minimized over, and all accumulations are sequential sums of
// non-negative terms (monotone under round-to-nearest).

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tadpole/matrix.hpp"
#include "tadpole/series.hpp"

namespace tadpole {

/// Sakoe-Chiba radius floor(window_frac * length). window_frac must be in [0, 1].
std::size_t band_radius(std::size_t length, double window_frac);

double euclidean(std::span<const double> a, std::span<const double> b);
/// sqrt of the squared differences summed over every channel and position.
double euclidean(const TimeSeries& a, const TimeSeries& b);

/// Band-constrained DTW, |i - j| <= radius (the diagonal is always inside).
double dtw(std::span<const double> a, std::span<const double> b, std::size_t radius);
/// Single-channel DTW with r = band_radius(length, window_frac).
double dtw(const TimeSeries& a, const TimeSeries& b, double window_frac);

struct Envelope {
  std::vector<double> upper;
  std::vector<double> lower;
  std::size_t radius = 0;
};

Envelope envelope(std::span<const double> series, std::size_t radius);
Envelope envelope(const TimeSeries& series, double window_frac);

/// One-directional envelope bound: excursions of `query` outside `env`.
double lb_keogh(std::span<const double> query, const Envelope& env);

/// max of the envelope bound in both directions.
double lb_symmetric(std::span<const double> a, std::span<const double> b, std::size_t radius);
double lb_symmetric(const TimeSeries& a, const TimeSeries& b, double window_frac);

/// Sum over channels of independent per-channel DTW.
double multidim_distance(const TimeSeries& a, const TimeSeries& b, double window_frac);

/// Sum over channels of per-channel Euclidean distance (the multi-channel upper bound).
double multidim_euclidean(const TimeSeries& a, const TimeSeries& b);

/// Full symmetric lower/upper bound matrices with zero diagonals.
struct BoundMatrices {
  SquareMatrix lower;
  SquareMatrix upper;

  std::size_t size() const noexcept { return lower.size(); }
};

/// lower(i, j) = sum over channels of lb_symmetric, upper(i, j) = sum over
/// channels of euclidean. Pairs are evaluated independently, so the result
/// does not depend on `threads`.
BoundMatrices bound_matrices(const LabeledDataset& dataset, double window_frac,
                             unsigned threads = 1);

/// Which exact measure a real-valued pipeline uses.
enum class Measure { dtw, euclidean };

/// distance(i, j) is always called with i < j.
using PairDistance = std::function<double(std::size_t, std::size_t)>;

/// Full n x n matrix of distance(i, j) for i < j, mirrored, zero diagonal.
SquareMatrix full_distance_matrix(std::size_t n, const PairDistance& distance,
                                  unsigned threads = 1);

/// Exact pair distance over a dataset: multidim DTW or per-channel Euclidean sum.
PairDistance dataset_distance(const LabeledDataset& dataset, Measure measure, double window_frac);

}  // namespace tadpole
