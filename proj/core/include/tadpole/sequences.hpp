#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tadpole/density_peaks.hpp"
#include "tadpole/edit_distance.hpp"
#include "tadpole/engine.hpp"

namespace tadpole {

/// Variable-length sequences over one shared alphabet.
class SequenceDataset {
 public:
  SequenceDataset(std::vector<DiscreteSequence> sequences, Alphabet alphabet,
                  std::optional<std::vector<std::string>> labels = std::nullopt);

  std::size_t size() const noexcept { return sequences_.size(); }
  const DiscreteSequence& operator[](std::size_t i) const { return sequences_[i]; }
  const std::vector<DiscreteSequence>& sequences() const noexcept { return sequences_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

 private:
  std::vector<DiscreteSequence> sequences_;
  Alphabet alphabet_;
  std::optional<std::vector<std::string>> labels_;
};

/// One sequence per line with an optional "label<TAB>" prefix. Labels are
/// kept only if every line has one. Throws DataError naming the row.
SequenceDataset parse_sequences(std::istream& in, const Alphabet& alphabet = Alphabet::uppercase(),
                                const std::string& source = "<stream>");
SequenceDataset load_sequences(const std::filesystem::path& path,
                               const Alphabet& alphabet = Alphabet::uppercase());
void write_sequences(std::ostream& out, const SequenceDataset& ds);

/// Per-pair edit_bounds as a bound-matrix pair.
BoundMatrices sequence_bound_matrices(const SequenceDataset& ds, unsigned threads = 1);

/// Exact edit distance plus edit_bounds. The dataset must outlive the problem.
DistanceProblem sequence_problem(const SequenceDataset& ds, unsigned threads = 1);

TadpoleResult tadpole_cluster_sequences(const SequenceDataset& ds, const TadpoleOptions& options);

/// Brute force over the full edit-distance matrix.
ClusterModel dp_cluster_sequences(const SequenceDataset& ds, double dc,
                                  std::optional<std::size_t> k, unsigned threads = 1);

/// `families` seeded random roots; each member applies independent point
/// substitutions, insertions, or deletions (equally likely) at `mutation_rate`
/// per root position. Labels are "family<i>". mutation_rate in [0, 0.3].
SequenceDataset generate_mutation_families(std::size_t families, std::size_t per_family,
                                           std::size_t length, double mutation_rate,
                                           std::uint64_t seed,
                                           const Alphabet& alphabet = Alphabet::protein());

}  // namespace tadpole
