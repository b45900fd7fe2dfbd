#pragma once

#include <cstddef>
#include <span>

#include "tadpole/density_peaks.hpp"
#include "tadpole/matrix.hpp"

namespace tadpole {

/// Fraction of the n(n-1)/2 pairs on which the labelings agree.
double rand_index(std::span<const int> a, std::span<const int> b);

/// Mutual information over the arithmetic mean of the two entropies; 0 when
/// either labeling has a single cluster.
double nmi(std::span<const int> a, std::span<const int> b);

/// Post-hoc minimum exact-call count: pairs closer than dc plus each
/// (i, nn[i]) link not already among them.
std::size_t oracle_computation_count(const SquareMatrix& distances, double dc,
                                     const DensityProfile& profile, const DeltaProfile& deltas);

}  // namespace tadpole
