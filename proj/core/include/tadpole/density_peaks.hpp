#pragma once

// Brute-force Density Peaks clustering over a full distance matrix.
//
// Density ties are broken by index: the density order sorts objects by
// (rho descending, index ascending), so it is a strict total order and
// "higher density" always means "earlier in that order". The first object in
// the order is the densest; it has no nearest higher-density neighbour and its
// delta is the maximum of all other deltas.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "tadpole/matrix.hpp"
#include "tadpole/measures.hpp"
#include "tadpole/series.hpp"

namespace tadpole {

inline constexpr std::size_t kNoNeighbor = std::numeric_limits<std::size_t>::max();

struct DensityProfile {
  std::vector<std::size_t> rho;
  /// Objects sorted by (rho descending, index ascending).
  std::vector<std::size_t> order;
  /// rank[i] = position of object i in `order`.
  std::vector<std::size_t> rank;

  std::size_t size() const noexcept { return rho.size(); }
  std::size_t densest() const { return order.front(); }
  /// True when j strictly precedes i in the density order.
  bool higher(std::size_t j, std::size_t i) const { return rank[j] < rank[i]; }
};

/// Builds order and rank from a density vector.
DensityProfile make_density_profile(std::vector<std::size_t> rho);

struct DeltaProfile {
  std::vector<double> delta;
  /// Nearest strictly-higher-density neighbour; kNoNeighbor for the densest object.
  std::vector<std::size_t> nn;
};

/// rho[i] = #{j != i : D(i, j) < dc}. Throws on a non-symmetric matrix,
/// negative entries, a non-zero diagonal, or dc <= 0.
DensityProfile local_density(const SquareMatrix& distances, double dc);

/// Nearest higher-density neighbour per object (argmin ties to the smaller
/// index). Requires n >= 2.
DeltaProfile delta_distances(const SquareMatrix& distances, const DensityProfile& profile);

/// Sets the densest object's delta to the max over all other deltas.
void assign_densest_delta(DeltaProfile& deltas, const DensityProfile& profile);

std::vector<double> gamma_scores(const DensityProfile& profile, const DeltaProfile& deltas);

/// Knee of a descending gamma sequence: the 1-based position i maximizing
/// sorted[i-1] / sorted[i] (ties to the smaller i). x/0 counts as +inf for
/// x > 0 and 0/0 as 1.
std::size_t knee_cluster_count(const std::vector<double>& sorted_desc);

/// Indices of the k largest gamma values (ties to the smaller index), in
/// descending gamma order. Without k the knee rule picks it.
std::vector<std::size_t> select_centers(const DensityProfile& profile, const DeltaProfile& deltas,
                                        std::optional<std::size_t> k);

/// Labels 1..k for the centers in list order, then every other object takes
/// its nearest higher-density neighbour's label, visiting in density order.
std::vector<int> assign_clusters(const std::vector<std::size_t>& centers,
                                 const DeltaProfile& deltas, const DensityProfile& profile);

struct ClusterModel {
  std::vector<std::size_t> centers;
  std::vector<int> labels;
  std::vector<std::size_t> rho;
  std::vector<double> delta;
  std::vector<std::size_t> nn;
  std::vector<double> gamma;

  bool operator==(const ClusterModel&) const = default;
};

/// Center selection plus assignment over finished profiles.
ClusterModel build_cluster_model(const DensityProfile& profile, const DeltaProfile& deltas,
                                 std::optional<std::size_t> k);

/// local_density -> delta_distances -> select_centers -> assign_clusters.
ClusterModel dp_cluster(const SquareMatrix& distances, double dc, std::optional<std::size_t> k);

/// Computes the full exact matrix first (all n(n-1)/2 pairs).
ClusterModel dp_cluster(const LabeledDataset& dataset, Measure measure, double window_frac,
                        double dc, std::optional<std::size_t> k, unsigned threads = 1);

}  // namespace tadpole
