#include "tadpole/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tadpole/parallel.hpp"

namespace tadpole {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::string_view to_string(PruneCase c) noexcept {
  switch (c) {
    case PruneCase::identical: return "identical";
    case PruneCase::within_cutoff: return "within_cutoff";
    case PruneCase::outside_cutoff: return "outside_cutoff";
    case PruneCase::unknown: return "unknown";
  }
  return "unknown";
}

PruneCase classify_pair(double lb, double ub, double dc) {
  if (!(dc > 0.0)) throw std::invalid_argument("cutoff distance must be positive");
  if (lb > ub) throw std::invalid_argument("lower bound exceeds upper bound");
  if (lb == ub) return PruneCase::identical;
  if (ub < dc) return PruneCase::within_cutoff;
  if (lb > dc) return PruneCase::outside_cutoff;
  return PruneCase::unknown;
}

SparseDistanceMatrix::SparseDistanceMatrix(std::size_t n)
    : n_(n), values_(pair_count(n), 0.0), present_(pair_count(n), 0) {}

bool SparseDistanceMatrix::contains(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  return present_[pair_index(n_, i, j)] != 0;
}

std::optional<double> SparseDistanceMatrix::get(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  const std::size_t p = pair_index(n_, i, j);
  if (!present_[p]) return std::nullopt;
  return values_[p];
}

void SparseDistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i == j) throw std::invalid_argument("sparse matrix diagonal is implicit");
  const std::size_t p = pair_index(n_, i, j);
  if (!present_[p]) ++stored_;
  present_[p] = 1;
  values_[p] = value;
}

DistanceProblem time_series_problem(const LabeledDataset& dataset, double window_frac,
                                    Measure measure, unsigned threads) {
  if (measure == Measure::euclidean) {
    // Exact measure equals the upper bound; lower = upper makes every pair identical.
    auto bounds = bound_matrices(dataset, 0.0, threads);
    return {std::move(bounds), dataset_distance(dataset, measure, 0.0)};
  }
  return {bound_matrices(dataset, window_frac, threads),
          dataset_distance(dataset, measure, window_frac)};
}

double percentile_cutoff(const BoundMatrices& bounds, double pct) {
  if (!(pct > 0.0 && pct <= 100.0)) throw std::invalid_argument("percentile must be in (0, 100]");
  const std::size_t n = bounds.size();
  std::vector<double> values;
  values.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(bounds.upper(i, j));
  if (values.empty()) throw std::invalid_argument("percentile cutoff needs at least two objects");
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(pct / 100.0 * values.size()));
  const double dc = values[std::clamp<std::size_t>(rank, 1, values.size()) - 1];
  if (!(dc > 0.0))
    throw std::invalid_argument("percentile cutoff is zero; give an absolute cutoff instead");
  return dc;
}

DensityPhase pruned_local_density(const BoundMatrices& bounds, const PairDistance& distance,
                                  double dc, unsigned threads) {
  const std::size_t n = bounds.size();
  if (n < 2) throw std::invalid_argument("clustering needs at least two objects");
  DensityPhase out{{}, SparseDistanceMatrix(n), {}};
  out.stats.total_pairs = pair_count(n);
  std::vector<std::size_t> rho(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> unknown;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double lb = bounds.lower(i, j);
      const double ub = bounds.upper(i, j);
      switch (classify_pair(lb, ub, dc)) {
        case PruneCase::identical:
          // lb <= exact <= ub with lb == ub pins the exact distance.
          ++out.stats.case_a;
          out.sparse.set(i, j, ub);
          if (ub < dc) {
            ++rho[i];
            ++rho[j];
          }
          break;
        case PruneCase::within_cutoff:
          ++out.stats.case_b;
          ++rho[i];
          ++rho[j];
          break;
        case PruneCase::outside_cutoff:
          ++out.stats.case_c;
          break;
        case PruneCase::unknown:
          unknown.emplace_back(i, j);
          break;
      }
    }
  }

  std::vector<double> exact(unknown.size());
  parallel_for(unknown.size(), threads,
               [&](std::size_t p) { exact[p] = distance(unknown[p].first, unknown[p].second); });
  for (std::size_t p = 0; p < unknown.size(); ++p) {
    const auto [i, j] = unknown[p];
    out.sparse.set(i, j, exact[p]);
    if (exact[p] < dc) {
      ++rho[i];
      ++rho[j];
    }
  }
  out.stats.case_d_computed = unknown.size();
  out.profile = make_density_profile(std::move(rho));
  return out;
}

UpperBoundVector nn_upper_bounds(const BoundMatrices& bounds, const SparseDistanceMatrix& sparse,
                                 const DensityProfile& profile) {
  const std::size_t n = profile.size();
  UpperBoundVector out{std::vector<double>(n, kInf), std::vector<std::size_t>(n, kNoNeighbor)};
  for (std::size_t pos = 1; pos < n; ++pos) {
    const std::size_t i = profile.order[pos];
    for (std::size_t q = 0; q < pos; ++q) {
      const std::size_t j = profile.order[q];
      const auto known = sparse.get(i, j);
      const double v = known ? *known : bounds.upper(i, j);
      if (v < out.ub[i] || (v == out.ub[i] && j < out.source[i])) {
        out.ub[i] = v;
        out.source[i] = j;
      }
    }
  }
  return out;
}

std::vector<std::size_t> processing_order(const DensityProfile& profile,
                                          const UpperBoundVector& ub) {
  const std::size_t n = profile.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<double> key(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == profile.densest()) continue;
    if (!std::isfinite(ub.ub[i]))
      throw std::invalid_argument("non-densest object has an infinite upper bound");
    key[i] = static_cast<double>(profile.rho[i]) * ub.ub[i];
    order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
  return order;
}

DeltaRefiner::DeltaRefiner(const DistanceProblem& problem, SparseDistanceMatrix sparse,
                           const DensityProfile& profile, UpperBoundVector ub,
                           std::optional<std::size_t> k)
    : problem_(problem),
      sparse_(std::move(sparse)),
      profile_(profile),
      ub_(std::move(ub)),
      k_(k),
      exact_delta_(profile.size(), 0.0),
      exact_nn_(profile.size(), kNoNeighbor),
      processed_(profile.size(), false) {
  if (sparse_.size() != profile_.size() || ub_.ub.size() != profile_.size() ||
      problem_.size() != profile_.size())
    throw std::invalid_argument("phase-2 inputs disagree on the object count");
  stats_.total_pairs = pair_count(profile_.size());
}

bool DeltaRefiner::process(std::size_t i, const StopCondition& stop) {
  if (i == profile_.densest() || processed_[i]) return true;
  const double bound = ub_.ub[i];
  double best = kInf;
  std::size_t arg = kNoNeighbor;
  const std::size_t pos = profile_.rank[i];
  for (std::size_t q = 0; q < pos; ++q) {
    const std::size_t j = profile_.order[q];
    if (problem_.bounds.lower(i, j) > bound) {
      ++stats_.phase2_pruned;
      continue;
    }
    double d;
    if (const auto known = sparse_.get(i, j)) {
      ++stats_.phase2_reused;
      d = *known;
    } else {
      if (stop.budget && stats_.phase2_computed >= *stop.budget) return false;
      if (stop.interrupt && stop.interrupt->load(std::memory_order_relaxed)) {
        interrupted_ = true;
        return false;
      }
      d = problem_.distance(std::min(i, j), std::max(i, j));
      sparse_.set(i, j, d);
      ++stats_.phase2_computed;
    }
    if (d < best || (d == best && j < arg)) {
      best = d;
      arg = j;
    }
  }
  // The object achieving ub_i has lb <= exact <= ub_i, so it is never pruned.
  if (arg == kNoNeighbor) throw std::logic_error("every nearest-neighbour candidate was pruned");
  exact_delta_[i] = best;
  exact_nn_[i] = arg;
  processed_[i] = true;
  ++processed_count_;
  return true;
}

DeltaProfile DeltaRefiner::current_deltas() const {
  const std::size_t n = profile_.size();
  DeltaProfile d{std::vector<double>(n, 0.0), std::vector<std::size_t>(n, kNoNeighbor)};
  for (std::size_t i = 0; i < n; ++i) {
    if (i == profile_.densest()) continue;
    if (processed_[i]) {
      d.delta[i] = exact_delta_[i];
      d.nn[i] = exact_nn_[i];
    } else {
      d.delta[i] = ub_.ub[i];
      d.nn[i] = ub_.source[i];
    }
  }
  assign_densest_delta(d, profile_);
  return d;
}

std::vector<int> DeltaRefiner::current_labels() const {
  const auto d = current_deltas();
  return assign_clusters(select_centers(profile_, d, k_), d, profile_);
}

std::vector<int> DeltaRefiner::labels_with(std::size_t i, double delta, std::size_t nn) const {
  auto d = current_deltas();
  if (i != profile_.densest()) {
    d.delta[i] = delta;
    d.nn[i] = nn;
    assign_densest_delta(d, profile_);
  }
  return assign_clusters(select_centers(profile_, d, k_), d, profile_);
}

Snapshot DeltaRefiner::snapshot() const {
  return {stats_.phase2_computed, processed_count_, current_labels()};
}

ClusterModel DeltaRefiner::model() const {
  return build_cluster_model(profile_, current_deltas(), k_);
}

DeltaPhase pruned_delta(const DistanceProblem& problem, SparseDistanceMatrix sparse,
                        const DensityProfile& profile, UpperBoundVector ub,
                        const std::vector<std::size_t>& order, std::optional<std::size_t> k,
                        const StopCondition& stop) {
  DeltaRefiner refiner(problem, std::move(sparse), profile, std::move(ub), k);
  DeltaPhase out;
  out.trace.snapshots.push_back(refiner.snapshot());
  bool stopped = false;
  for (std::size_t i : order) {
    if (!refiner.process(i, stop)) {
      stopped = true;
      break;
    }
    out.trace.snapshots.push_back(refiner.snapshot());
  }
  out.complete = !stopped && refiner.processed_count() + 1 == profile.size();
  out.interrupted = refiner.interrupted();
  out.deltas = refiner.current_deltas();
  out.stats = refiner.stats();
  out.model = refiner.model();
  out.labels = out.model.labels;
  return out;
}

TadpoleResult tadpole_cluster(const DistanceProblem& problem, const TadpoleOptions& options) {
  auto density = pruned_local_density(problem.bounds, problem.distance, options.dc, options.threads);
  auto ub = nn_upper_bounds(problem.bounds, density.sparse, density.profile);
  const auto order = processing_order(density.profile, ub);
  auto phase2 = pruned_delta(problem, std::move(density.sparse), density.profile, std::move(ub),
                             order, options.k, StopCondition{options.budget, options.interrupt});

  TadpoleResult out;
  out.model = std::move(phase2.model);
  out.stats = density.stats;
  out.stats.phase2_pruned = phase2.stats.phase2_pruned;
  out.stats.phase2_computed = phase2.stats.phase2_computed;
  out.stats.phase2_reused = phase2.stats.phase2_reused;
  out.trace = std::move(phase2.trace);
  out.trace.setup_calls = density.stats.case_d_computed;
  out.complete = phase2.complete;
  out.interrupted = phase2.interrupted;
  return out;
}

TadpoleResult tadpole_cluster(const LabeledDataset& dataset, double window_frac,
                              const TadpoleOptions& options) {
  if (dataset.size() < 2) throw std::invalid_argument("clustering needs at least two series");
  const auto problem = time_series_problem(dataset, window_frac, Measure::dtw, options.threads);
  return tadpole_cluster(problem, options);
}

}  // namespace tadpole
