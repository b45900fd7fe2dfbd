#pragma once

// Pruned, anytime Density Peaks clustering.
//
// The engine only sees an abstract problem: full lower/upper bound matrices
// plus an exact pair distance. Any measure with admissible bounds
// (lower <= exact <= upper for every pair) plugs in; the result with an
// unbounded budget is identical to dp_cluster over the full exact matrix.
//
// Pipeline:
//   1. density phase: each pair is classified against dc from its bounds and
//      only undecidable pairs get an exact distance (kept in a sparse matrix);
//   2. phase 1: per object, an upper bound ub_i on its nearest higher-density
//      distance from known exact values and the upper bound matrix;
//   3. phase 2: objects in descending rho * ub order; candidates whose lower
//      bound exceeds ub_i are skipped, the rest are reused or computed.
// Phase 2 is budgeted in exact-distance calls and can stop after any object;
// every stop yields a clustering over exact deltas for processed objects and
// ub_i for the others.

#include <atomic>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tadpole/density_peaks.hpp"
#include "tadpole/measures.hpp"

namespace tadpole {

enum class PruneCase { identical, within_cutoff, outside_cutoff, unknown };

std::string_view to_string(PruneCase c) noexcept;

/// lb == ub -> identical; ub < dc -> within; lb > dc -> outside; else unknown.
/// Comparisons are strict, so lb == dc or ub == dc is unknown.
PruneCase classify_pair(double lb, double ub, double dc);

/// Exact distances known so far, addressed by unordered pair.
class SparseDistanceMatrix {
 public:
  SparseDistanceMatrix() = default;
  explicit SparseDistanceMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool contains(std::size_t i, std::size_t j) const;
  std::optional<double> get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);
  std::size_t stored() const noexcept { return stored_; }

 private:
  std::size_t n_ = 0;
  std::size_t stored_ = 0;
  std::vector<double> values_;
  std::vector<unsigned char> present_;
};

struct PruneStats {
  std::size_t total_pairs = 0;
  std::size_t case_a = 0;
  std::size_t case_b = 0;
  std::size_t case_c = 0;
  std::size_t case_d_computed = 0;
  std::size_t phase2_pruned = 0;
  std::size_t phase2_computed = 0;
  std::size_t phase2_reused = 0;

  std::size_t exact_calls() const noexcept { return case_d_computed + phase2_computed; }
  bool operator==(const PruneStats&) const = default;
};

/// Exact measure plus admissible bounds over n objects.
struct DistanceProblem {
  BoundMatrices bounds;
  /// Called with i < j only.
  PairDistance distance;

  std::size_t size() const noexcept { return bounds.size(); }
};

/// Real-valued problem: summed per-channel envelope bounds and Euclidean
/// upper bounds, exact multidim DTW (or the Euclidean sum itself).
/// The dataset must outlive the problem.
DistanceProblem time_series_problem(const LabeledDataset& dataset, double window_frac,
                                    Measure measure = Measure::dtw, unsigned threads = 1);

/// Nearest-rank percentile (0 < pct <= 100) of the off-diagonal upper bounds.
double percentile_cutoff(const BoundMatrices& bounds, double pct);

struct DensityPhase {
  DensityProfile profile;
  SparseDistanceMatrix sparse;
  PruneStats stats;
};

/// Density with bound-based pruning. Identical pairs count toward density iff
/// their known distance (the upper bound) is below dc; unknown pairs get one
/// exact call each (evaluated on up to `threads` workers).
DensityPhase pruned_local_density(const BoundMatrices& bounds, const PairDistance& distance,
                                  double dc, unsigned threads = 1);

struct UpperBoundVector {
  /// +inf for the densest object.
  std::vector<double> ub;
  /// Higher-density object achieving ub (ties to the smaller index).
  std::vector<std::size_t> source;
};

UpperBoundVector nn_upper_bounds(const BoundMatrices& bounds, const SparseDistanceMatrix& sparse,
                                 const DensityProfile& profile);

/// Non-densest objects by rho * ub descending, ties to the smaller index.
std::vector<std::size_t> processing_order(const DensityProfile& profile,
                                          const UpperBoundVector& ub);

struct Snapshot {
  /// Phase-2 exact calls made so far (density-phase calls are setup).
  std::size_t exact_calls = 0;
  std::size_t processed = 0;
  std::vector<int> labels;

  bool operator==(const Snapshot&) const = default;
};

struct AnytimeTrace {
  /// Exact calls spent in the density phase before the first snapshot.
  std::size_t setup_calls = 0;
  std::vector<Snapshot> snapshots;

  bool operator==(const AnytimeTrace&) const = default;
};

/// When to stop phase 2 early. A stop only happens right before a new exact call.
struct StopCondition {
  std::optional<std::size_t> budget;
  const std::atomic<bool>* interrupt = nullptr;
};

/// Phase-2 state machine. Objects can be processed in any order; the current
/// hybrid deltas, labels, and model are available at every step.
class DeltaRefiner {
 public:
  DeltaRefiner(const DistanceProblem& problem, SparseDistanceMatrix sparse,
               const DensityProfile& profile, UpperBoundVector ub, std::optional<std::size_t> k);

  /// Computes the exact delta of object i. Returns false (leaving i
  /// unprocessed) if the stop condition fires before a needed exact call.
  /// Processing the densest or an already processed object is a no-op.
  bool process(std::size_t i, const StopCondition& stop = {});

  bool processed(std::size_t i) const { return processed_[i]; }
  std::size_t processed_count() const noexcept { return processed_count_; }
  std::size_t exact_calls() const noexcept { return stats_.phase2_computed; }
  bool interrupted() const noexcept { return interrupted_; }
  const PruneStats& stats() const noexcept { return stats_; }
  const SparseDistanceMatrix& sparse() const noexcept { return sparse_; }
  const UpperBoundVector& upper_bounds() const noexcept { return ub_; }

  /// Exact delta/nn for processed objects, ub_i and its source otherwise.
  DeltaProfile current_deltas() const;
  std::vector<int> current_labels() const;
  /// Labels if object i had delta/nn as given (used by the oracle ordering).
  std::vector<int> labels_with(std::size_t i, double delta, std::size_t nn) const;
  Snapshot snapshot() const;
  ClusterModel model() const;

 private:
  const DistanceProblem& problem_;
  SparseDistanceMatrix sparse_;
  DensityProfile profile_;
  UpperBoundVector ub_;
  std::optional<std::size_t> k_;
  std::vector<double> exact_delta_;
  std::vector<std::size_t> exact_nn_;
  std::vector<bool> processed_;
  std::size_t processed_count_ = 0;
  bool interrupted_ = false;
  PruneStats stats_;
};

struct DeltaPhase {
  DeltaProfile deltas;
  /// Only the phase2_* fields are filled.
  PruneStats stats;
  AnytimeTrace trace;
  std::vector<int> labels;
  ClusterModel model;
  bool complete = false;
  bool interrupted = false;
};

/// Processes objects in `order`, appending a snapshot before the first and
/// after every processed object.
DeltaPhase pruned_delta(const DistanceProblem& problem, SparseDistanceMatrix sparse,
                        const DensityProfile& profile, UpperBoundVector ub,
                        const std::vector<std::size_t>& order, std::optional<std::size_t> k,
                        const StopCondition& stop = {});

struct TadpoleOptions {
  double dc = 0.0;
  std::optional<std::size_t> k;
  /// Phase-2 exact-call budget; empty means unbounded.
  std::optional<std::size_t> budget;
  unsigned threads = 1;
  const std::atomic<bool>* interrupt = nullptr;
};

struct TadpoleResult {
  ClusterModel model;
  PruneStats stats;
  AnytimeTrace trace;
  bool complete = false;
  bool interrupted = false;
};

TadpoleResult tadpole_cluster(const DistanceProblem& problem, const TadpoleOptions& options);
TadpoleResult tadpole_cluster(const LabeledDataset& dataset, double window_frac,
                              const TadpoleOptions& options);

}  // namespace tadpole
