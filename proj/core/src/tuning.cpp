#include "tadpole/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "tadpole/io.hpp"
#include "tadpole/measures.hpp"
#include "tadpole/parallel.hpp"

namespace tadpole {
namespace {

constexpr std::size_t kWarpKnots = 4;

/// Monotone map from output index to source position.
std::vector<double> warp_map(std::size_t length, double warp_amount, std::uint64_t seed) {
  const double max_shift = std::floor(warp_amount * static_cast<double>(length));
  const double last = static_cast<double>(length - 1);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> shift(-max_shift, max_shift);

  std::vector<double> knot_x{0.0};
  std::vector<double> knot_y;
  for (std::size_t k = 1; k <= kWarpKnots; ++k)
    knot_x.push_back(last * static_cast<double>(k) / static_cast<double>(kWarpKnots + 1));
  knot_x.push_back(last);
  for (std::size_t k = 1; k <= kWarpKnots; ++k) knot_y.push_back(knot_x[k] + shift(rng));
  // Sorting the displaced knots keeps every displacement within max_shift.
  std::sort(knot_y.begin(), knot_y.end());
  knot_y.insert(knot_y.begin(), 0.0);
  knot_y.push_back(last);
  for (auto& y : knot_y) y = std::clamp(y, 0.0, last);

  std::vector<double> map(length);
  std::size_t seg = 0;
  for (std::size_t t = 0; t < length; ++t) {
    const double x = static_cast<double>(t);
    while (seg + 2 < knot_x.size() && x > knot_x[seg + 1]) ++seg;
    const double u = (x - knot_x[seg]) / (knot_x[seg + 1] - knot_x[seg]);
    map[t] = knot_y[seg] + u * (knot_y[seg + 1] - knot_y[seg]);
  }
  return map;
}

std::vector<double> resample(std::span<const double> x, const std::vector<double>& map) {
  std::vector<double> out(map.size());
  const std::size_t last = x.size() - 1;
  for (std::size_t t = 0; t < map.size(); ++t) {
    const double pos = map[t];
    const auto lo = std::min(static_cast<std::size_t>(std::floor(pos)), last);
    const std::size_t hi = std::min(lo + 1, last);
    const double frac = pos - static_cast<double>(lo);
    out[t] = x[lo] + frac * (x[hi] - x[lo]);
  }
  return out;
}

void check_warp(const TimeSeries& series, double warp_amount) {
  if (!(warp_amount >= 0.0 && warp_amount <= 0.25))
    throw std::invalid_argument("warp amount must be in [0, 0.25]");
  if (series.length() < 8) throw std::invalid_argument("warping needs length >= 8");
}

}  // namespace

TimeSeries warp_all_channels(const TimeSeries& series, double warp_amount, std::uint64_t seed) {
  check_warp(series, warp_amount);
  if (warp_amount == 0.0) return series;
  const auto map = warp_map(series.length(), warp_amount, seed);
  std::vector<std::vector<double>> channels;
  for (std::size_t c = 0; c < series.dims(); ++c) channels.push_back(resample(series.channel(c), map));
  return TimeSeries(std::move(channels));
}

TimeSeries make_warped_copy(const TimeSeries& series, double warp_amount, std::uint64_t seed) {
  if (series.dims() != 1) throw std::invalid_argument("make_warped_copy expects one channel");
  return warp_all_channels(series, warp_amount, seed);
}

ConstraintSet make_constraint_set(const LabeledDataset& dataset, std::size_t sample_size,
                                  double warp_amount, std::uint64_t seed) {
  if (sample_size < 2 || sample_size > dataset.size())
    throw std::invalid_argument("constraint sample size must be in [2, n]");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> idx(dataset.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(sample_size);

  ConstraintSet cs;
  for (std::size_t i : idx) {
    cs.originals.push_back(dataset[i]);
    cs.copies.push_back(warp_all_channels(dataset[i], warp_amount, rng()));
    cs.source.push_back(i);
  }
  return cs;
}

double ConstraintTally::score() const noexcept {
  const std::size_t total = must_link_total + cannot_link_total;
  if (total == 0) return 0.0;
  return static_cast<double>(must_link_satisfied + cannot_link_satisfied) /
         static_cast<double>(total);
}

std::vector<std::vector<double>> cross_distances(const ConstraintSet& cs, double window_frac,
                                                 unsigned threads) {
  const std::size_t m = cs.size();
  std::vector<std::vector<double>> out(m, std::vector<double>(m));
  parallel_for(m, threads, [&](std::size_t r) {
    for (std::size_t c = 0; c < m; ++c)
      out[r][c] = multidim_distance(cs.originals[r], cs.copies[c], window_frac);
  });
  return out;
}

ConstraintTally tally_constraints(const std::vector<std::vector<double>>& cross, double dc) {
  ConstraintTally t;
  for (std::size_t r = 0; r < cross.size(); ++r) {
    for (std::size_t c = 0; c < cross[r].size(); ++c) {
      if (r == c) {
        ++t.must_link_total;
        t.must_link_satisfied += cross[r][c] < dc ? 1 : 0;
      } else {
        ++t.cannot_link_total;
        t.cannot_link_satisfied += cross[r][c] >= dc ? 1 : 0;
      }
    }
  }
  return t;
}

ConstraintTally tally_constraints(const ConstraintSet& cs, double window_frac, double dc) {
  return tally_constraints(cross_distances(cs, window_frac), dc);
}

double constraint_score(const ConstraintSet& cs, double window_frac, double dc) {
  return tally_constraints(cs, window_frac, dc).score();
}

SweepResult parameter_sweep(const ConstraintSet& cs, SweepParameter param,
                            const std::vector<double>& values, double fixed, unsigned threads) {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
  SweepResult out;
  const auto add = [&](double value, const ConstraintTally& t) {
    out.curve.push_back({value, t.score(), t.must_link_satisfied, t.cannot_link_satisfied});
  };
  if (param == SweepParameter::dc) {
    const auto cross = cross_distances(cs, fixed, threads);
    for (double dc : values) add(dc, tally_constraints(cross, dc));
  } else {
    for (double w : values) add(w, tally_constraints(cross_distances(cs, w, threads), fixed));
  }
  const SweepPoint* best = &out.curve.front();
  for (const auto& p : out.curve) {
    if (p.score > best->score || (p.score == best->score && p.value < best->value)) best = &p;
  }
  out.recommended = best->value;
  return out;
}

SweepResult parameter_sweep(const LabeledDataset& dataset, SweepParameter param,
                            const std::vector<double>& values, double fixed,
                            std::size_t sample_size, double warp_amount, std::uint64_t seed,
                            unsigned threads) {
  const auto cs = make_constraint_set(dataset, sample_size, warp_amount, seed);
  return parameter_sweep(cs, param, values, fixed, threads);
}

std::vector<double> dc_grid(const ConstraintSet& cs, double window_frac, std::size_t count,
                            unsigned threads) {
  if (count == 0) throw std::invalid_argument("dc grid needs at least one point");
  const auto cross = cross_distances(cs, window_frac, threads);
  std::vector<double> all;
  for (const auto& row : cross) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  std::vector<double> grid;
  for (std::size_t g = 1; g <= count; ++g) {
    const auto pos = static_cast<std::size_t>(
        std::floor(static_cast<double>(g) / static_cast<double>(count + 1) *
                   static_cast<double>(all.size() - 1)));
    const double v = all[pos];
    if (v > 0.0 && (grid.empty() || v > grid.back())) grid.push_back(v);
  }
  if (grid.empty()) grid.push_back(1.0);
  return grid;
}

TunedParameters tune_parameters(const ConstraintSet& cs, const std::vector<double>& windows,
                                double initial_dc, std::size_t dc_points, unsigned threads) {
  TunedParameters out;
  out.window_sweep = parameter_sweep(cs, SweepParameter::window, windows, initial_dc, threads);
  out.window_frac = out.window_sweep.recommended;
  out.dc_sweep = parameter_sweep(cs, SweepParameter::dc,
                                 dc_grid(cs, out.window_frac, dc_points, threads),
                                 out.window_frac, threads);
  out.dc = out.dc_sweep.recommended;
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "value,score\n";
  for (const auto& p : sweep.curve) out << format_double(p.value) << ',' << format_double(p.score) << '\n';
}

}  // namespace tadpole
