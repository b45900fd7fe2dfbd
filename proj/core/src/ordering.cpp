#include "tadpole/ordering.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

#include "tadpole/io.hpp"
#include "tadpole/metrics.hpp"

namespace tadpole {

std::string to_string(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::tadpole: return "tadpole";
    case OrderingKind::random: return "random";
    case OrderingKind::oracle: return "oracle";
  }
  return "tadpole";
}

OrderingKind parse_ordering(const std::string& name) {
  if (name == "tadpole") return OrderingKind::tadpole;
  if (name == "random") return OrderingKind::random;
  if (name == "oracle") return OrderingKind::oracle;
  throw std::invalid_argument("unknown ordering '" + name + "'");
}

OrderingTrace ordering_trace(const DistanceProblem& problem, double dc,
                             std::optional<std::size_t> k, OrderingSpec spec,
                             std::span<const int> ground_truth,
                             std::optional<std::size_t> budget) {
  if (spec.kind == OrderingKind::oracle && ground_truth.empty())
    throw std::invalid_argument("oracle ordering requires ground-truth labels");
  if (!ground_truth.empty() && ground_truth.size() != problem.size())
    throw std::invalid_argument("ground truth size does not match the dataset");

  const auto density = pruned_local_density(problem.bounds, problem.distance, dc);
  const auto ub = nn_upper_bounds(problem.bounds, density.sparse, density.profile);
  const auto tadpole_order = processing_order(density.profile, ub);

  // Exact deltas, needed as the reference labeling and by the oracle.
  DeltaRefiner exact(problem, density.sparse, density.profile, ub, k);
  const bool need_exact = ground_truth.empty() || spec.kind == OrderingKind::oracle;
  if (need_exact) {
    for (std::size_t i : tadpole_order) exact.process(i);
  }
  const std::vector<int> reference =
      ground_truth.empty() ? exact.current_labels()
                           : std::vector<int>(ground_truth.begin(), ground_truth.end());

  OrderingTrace out;
  out.spec = spec;
  out.trace.setup_calls = density.stats.case_d_computed;
  DeltaRefiner refiner(problem, density.sparse, density.profile, ub, k);
  const StopCondition stop{budget, nullptr};
  const auto record = [&] {
    auto snap = refiner.snapshot();
    out.rand_index.push_back(rand_index(snap.labels, reference));
    out.trace.snapshots.push_back(std::move(snap));
  };
  record();

  if (spec.kind == OrderingKind::oracle) {
    const auto exact_deltas = exact.current_deltas();
    std::vector<std::size_t> pending = tadpole_order;
    std::sort(pending.begin(), pending.end());
    while (!pending.empty()) {
      std::size_t best_pos = 0;
      double best_ri = -1.0;
      for (std::size_t p = 0; p < pending.size(); ++p) {
        const std::size_t c = pending[p];
        const double ri = rand_index(
            refiner.labels_with(c, exact_deltas.delta[c], exact_deltas.nn[c]), reference);
        if (ri > best_ri) {
          best_ri = ri;
          best_pos = p;
        }
      }
      if (!refiner.process(pending[best_pos], stop)) break;
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best_pos));
      record();
    }
  } else {
    std::vector<std::size_t> order = tadpole_order;
    if (spec.kind == OrderingKind::random) {
      std::sort(order.begin(), order.end());
      std::mt19937_64 rng(spec.seed);
      std::shuffle(order.begin(), order.end(), rng);
    }
    for (std::size_t i : order) {
      if (!refiner.process(i, stop)) break;
      record();
    }
  }

  out.final_labels = refiner.current_labels();
  out.stats = density.stats;
  out.stats.phase2_pruned = refiner.stats().phase2_pruned;
  out.stats.phase2_computed = refiner.stats().phase2_computed;
  out.stats.phase2_reused = refiner.stats().phase2_reused;
  return out;
}

std::optional<std::size_t> calls_to_reach(const OrderingTrace& trace, double threshold) {
  for (std::size_t s = 0; s < trace.rand_index.size(); ++s) {
    if (trace.rand_index[s] >= threshold) return trace.trace.snapshots[s].exact_calls;
  }
  return std::nullopt;
}

OrderingTrace score_trace(const AnytimeTrace& trace, std::span<const int> reference) {
  OrderingTrace out;
  out.trace = trace;
  for (const auto& snap : trace.snapshots) out.rand_index.push_back(rand_index(snap.labels, reference));
  if (!trace.snapshots.empty()) out.final_labels = trace.snapshots.back().labels;
  return out;
}

void write_trace_csv(std::ostream& out, const OrderingTrace& trace) {
  out << "exact_calls,processed_count,rand_index\n";
  for (std::size_t s = 0; s < trace.trace.snapshots.size(); ++s) {
    const auto& snap = trace.trace.snapshots[s];
    out << snap.exact_calls << ',' << snap.processed << ',' << format_double(trace.rand_index[s])
        << '\n';
  }
}

}  // namespace tadpole
