#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tadpole/engine.hpp"

namespace tadpole {

/// Phase-2 object orderings compared in convergence traces.
enum class OrderingKind {
  tadpole,  ///< rho * ub descending (the engine default)
  random,   ///< seeded shuffle
  oracle,   ///< greedy: the object whose exact delta maximizes the next Rand Index
};

std::string to_string(OrderingKind kind);
OrderingKind parse_ordering(const std::string& name);

struct OrderingSpec {
  OrderingKind kind = OrderingKind::tadpole;
  std::uint64_t seed = 0;
};

struct OrderingTrace {
  OrderingSpec spec;
  AnytimeTrace trace;
  /// Rand Index of each snapshot against the reference labeling.
  std::vector<double> rand_index;
  std::vector<int> final_labels;
  PruneStats stats;
};

/// Runs the density phase and phase 1 once, then phase 2 in the requested
/// order. Snapshots are scored against `ground_truth`, or against the exact
/// clustering when no ground truth is given. The oracle needs ground truth and
/// evaluates O(n^2) candidate snapshots, so it is for small instances only.
OrderingTrace ordering_trace(const DistanceProblem& problem, double dc,
                             std::optional<std::size_t> k, OrderingSpec spec,
                             std::span<const int> ground_truth = {},
                             std::optional<std::size_t> budget = std::nullopt);

/// Phase-2 calls at the first snapshot whose Rand Index reaches `threshold`.
std::optional<std::size_t> calls_to_reach(const OrderingTrace& trace, double threshold);

/// Scores every snapshot of an engine trace against `reference`.
OrderingTrace score_trace(const AnytimeTrace& trace, std::span<const int> reference);

/// CSV with header exact_calls,processed_count,rand_index.
void write_trace_csv(std::ostream& out, const OrderingTrace& trace);

}  // namespace tadpole
