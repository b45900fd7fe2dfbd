#include "tadpole/density_peaks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tadpole {

DensityProfile make_density_profile(std::vector<std::size_t> rho) {
  DensityProfile p;
  p.rho = std::move(rho);
  const std::size_t n = p.rho.size();
  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), std::size_t{0});
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](std::size_t a, std::size_t b) { return p.rho[a] > p.rho[b]; });
  p.rank.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) p.rank[p.order[pos]] = pos;
  return p;
}

DensityProfile local_density(const SquareMatrix& distances, double dc) {
  if (!(dc > 0.0)) throw std::invalid_argument("cutoff distance must be positive");
  const std::size_t n = distances.size();
  std::vector<std::size_t> rho(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (distances(i, i) != 0.0) throw std::invalid_argument("distance matrix diagonal is not zero");
    for (std::size_t j = 0; j < n; ++j) {
      const double d = distances(i, j);
      if (d < 0.0) throw std::invalid_argument("distance matrix has a negative entry");
      if (d != distances(j, i)) throw std::invalid_argument("distance matrix is not symmetric");
      if (i != j && d < dc) ++rho[i];
    }
  }
  return make_density_profile(std::move(rho));
}

void assign_densest_delta(DeltaProfile& deltas, const DensityProfile& profile) {
  const std::size_t top = profile.densest();
  double mx = 0.0;
  for (std::size_t i = 0; i < deltas.delta.size(); ++i) {
    if (i != top) mx = std::max(mx, deltas.delta[i]);
  }
  deltas.delta[top] = mx;
  deltas.nn[top] = kNoNeighbor;
}

DeltaProfile delta_distances(const SquareMatrix& distances, const DensityProfile& profile) {
  const std::size_t n = distances.size();
  if (n < 2) throw std::invalid_argument("delta computation needs at least two objects");
  if (profile.size() != n) throw std::invalid_argument("density profile size mismatch");
  DeltaProfile out{std::vector<double>(n, 0.0), std::vector<std::size_t>(n, kNoNeighbor)};
  for (std::size_t pos = 1; pos < n; ++pos) {
    const std::size_t i = profile.order[pos];
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = kNoNeighbor;
    for (std::size_t q = 0; q < pos; ++q) {
      const std::size_t j = profile.order[q];
      const double d = distances(i, j);
      if (d < best || (d == best && j < arg)) {
        best = d;
        arg = j;
      }
    }
    out.delta[i] = best;
    out.nn[i] = arg;
  }
  assign_densest_delta(out, profile);
  return out;
}

std::vector<double> gamma_scores(const DensityProfile& profile, const DeltaProfile& deltas) {
  std::vector<double> g(profile.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    g[i] = static_cast<double>(profile.rho[i]) * deltas.delta[i];
  return g;
}

std::size_t knee_cluster_count(const std::vector<double>& sorted_desc) {
  if (sorted_desc.size() < 2) return sorted_desc.size();
  const auto ratio = [](double cur, double next) {
    if (next > 0.0) return cur / next;
    return cur > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  };
  std::size_t best_i = 1;
  double best = ratio(sorted_desc[0], sorted_desc[1]);
  for (std::size_t i = 2; i < sorted_desc.size(); ++i) {
    const double r = ratio(sorted_desc[i - 1], sorted_desc[i]);
    if (r > best) {
      best = r;
      best_i = i;
    }
  }
  return best_i;
}

std::vector<std::size_t> select_centers(const DensityProfile& profile, const DeltaProfile& deltas,
                                        std::optional<std::size_t> k) {
  const std::size_t n = profile.size();
  if (k && (*k == 0 || *k > n))
    throw std::invalid_argument("cluster count must be in [1, " + std::to_string(n) + "]");
  const auto g = gamma_scores(profile, deltas);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return g[a] > g[b]; });
  std::size_t count = 0;
  if (k) {
    count = *k;
  } else {
    std::vector<double> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = g[idx[i]];
    count = knee_cluster_count(sorted);
  }
  idx.resize(count);
  return idx;
}

std::vector<int> assign_clusters(const std::vector<std::size_t>& centers,
                                 const DeltaProfile& deltas, const DensityProfile& profile) {
  if (centers.empty()) throw std::invalid_argument("at least one center is required");
  const std::size_t n = profile.size();
  std::vector<int> labels(n, 0);
  for (std::size_t c = 0; c < centers.size(); ++c) labels.at(centers[c]) = static_cast<int>(c + 1);
  for (std::size_t i : profile.order) {
    if (labels[i] != 0) continue;
    const std::size_t nn = deltas.nn[i];
    if (nn == kNoNeighbor)
      throw std::invalid_argument("object " + std::to_string(i) +
                                  " has no higher-density neighbour and is not a center");
    labels[i] = labels[nn];
  }
  return labels;
}

ClusterModel build_cluster_model(const DensityProfile& profile, const DeltaProfile& deltas,
                                 std::optional<std::size_t> k) {
  ClusterModel m;
  m.centers = select_centers(profile, deltas, k);
  m.labels = assign_clusters(m.centers, deltas, profile);
  m.rho = profile.rho;
  m.delta = deltas.delta;
  m.nn = deltas.nn;
  m.gamma = gamma_scores(profile, deltas);
  return m;
}

ClusterModel dp_cluster(const SquareMatrix& distances, double dc, std::optional<std::size_t> k) {
  const auto profile = local_density(distances, dc);
  const auto deltas = delta_distances(distances, profile);
  return build_cluster_model(profile, deltas, k);
}

ClusterModel dp_cluster(const LabeledDataset& dataset, Measure measure, double window_frac,
                        double dc, std::optional<std::size_t> k, unsigned threads) {
  if (dataset.size() < 2) throw std::invalid_argument("clustering needs at least two series");
  const auto d = full_distance_matrix(dataset.size(),
                                      dataset_distance(dataset, measure, window_frac), threads);
  return dp_cluster(d, dc, k);
}

}  // namespace tadpole
