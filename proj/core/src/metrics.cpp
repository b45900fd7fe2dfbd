#include "tadpole/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace tadpole {
namespace {

void require_comparable(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("labelings differ in length");
  if (a.size() < 2) throw std::invalid_argument("labelings need at least two objects");
}

struct Contingency {
  std::map<std::pair<int, int>, std::size_t> joint;
  std::map<int, std::size_t> left;
  std::map<int, std::size_t> right;
};

Contingency tabulate(std::span<const int> a, std::span<const int> b) {
  Contingency t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++t.joint[{a[i], b[i]}];
    ++t.left[a[i]];
    ++t.right[b[i]];
  }
  return t;
}

std::size_t choose2(std::size_t m) { return m * (m - 1) / 2; }

}  // namespace

double rand_index(std::span<const int> a, std::span<const int> b) {
  require_comparable(a, b);
  const auto t = tabulate(a, b);
  std::size_t both_same = 0;
  for (const auto& [key, c] : t.joint) both_same += choose2(c);
  std::size_t same_a = 0;
  for (const auto& [key, c] : t.left) same_a += choose2(c);
  std::size_t same_b = 0;
  for (const auto& [key, c] : t.right) same_b += choose2(c);
  const std::size_t total = choose2(a.size());
  const std::size_t both_diff = total - same_a - same_b + both_same;
  return static_cast<double>(both_same + both_diff) / static_cast<double>(total);
}

double nmi(std::span<const int> a, std::span<const int> b) {
  require_comparable(a, b);
  const auto t = tabulate(a, b);
  const double n = static_cast<double>(a.size());
  const auto entropy = [n](const std::map<int, std::size_t>& counts) {
    double h = 0.0;
    for (const auto& [key, c] : counts) {
      const double p = static_cast<double>(c) / n;
      h -= p * std::log(p);
    }
    return h;
  };
  const double ha = entropy(t.left);
  const double hb = entropy(t.right);
  if (t.left.size() < 2 || t.right.size() < 2) return 0.0;
  double mi = 0.0;
  for (const auto& [key, c] : t.joint) {
    const double pxy = static_cast<double>(c) / n;
    const double px = static_cast<double>(t.left.at(key.first)) / n;
    const double py = static_cast<double>(t.right.at(key.second)) / n;
    mi += pxy * std::log(pxy / (px * py));
  }
  const double v = 2.0 * mi / (ha + hb);
  return std::clamp(v, 0.0, 1.0);
}

std::size_t oracle_computation_count(const SquareMatrix& distances, double dc,
                                     const DensityProfile& profile, const DeltaProfile& deltas) {
  const std::size_t n = distances.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) count += distances(i, j) < dc ? 1 : 0;
  // nn links are oriented toward strictly higher density, so no link is counted twice.
  for (std::size_t i = 0; i < n; ++i) {
    if (i == profile.densest()) continue;
    if (!(distances(i, deltas.nn[i]) < dc)) ++count;
  }
  return count;
}

}  // namespace tadpole
