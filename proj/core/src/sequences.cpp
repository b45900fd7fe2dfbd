#include "tadpole/sequences.hpp"

#include <fstream>
#include <random>
#include <stdexcept>
#include <string_view>

#include "tadpole/parallel.hpp"

namespace tadpole {

SequenceDataset::SequenceDataset(std::vector<DiscreteSequence> sequences, Alphabet alphabet,
                                 std::optional<std::vector<std::string>> labels)
    : sequences_(std::move(sequences)), alphabet_(std::move(alphabet)), labels_(std::move(labels)) {
  if (labels_ && labels_->size() != sequences_.size())
    throw std::invalid_argument("label count does not match sequence count");
  for (const auto& s : sequences_) {
    for (char c : s.view()) {
      if (!alphabet_.contains(c))
        throw std::invalid_argument("sequence symbol outside the dataset alphabet");
    }
  }
}

SequenceDataset parse_sequences(std::istream& in, const Alphabet& alphabet,
                                const std::string& source) {
  std::vector<DiscreteSequence> seqs;
  std::vector<std::string> labels;
  std::size_t labeled = 0;
  std::size_t row = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string label;
    std::string body = line;
    if (const auto tab = line.find('\t'); tab != std::string::npos) {
      label = line.substr(0, tab);
      body = line.substr(tab + 1);
      ++labeled;
    }
    try {
      seqs.emplace_back(std::move(body), alphabet);
    } catch (const std::invalid_argument& e) {
      throw DataError(source + ": row " + std::to_string(row) + ": " + e.what());
    }
    labels.push_back(std::move(label));
  }
  if (seqs.empty()) throw DataError(source + ": empty dataset");
  std::optional<std::vector<std::string>> kept;
  if (labeled == seqs.size()) kept = std::move(labels);
  return SequenceDataset(std::move(seqs), alphabet, std::move(kept));
}

SequenceDataset load_sequences(const std::filesystem::path& path, const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open sequence file: " + path.string());
  return parse_sequences(in, alphabet, path.string());
}

void write_sequences(std::ostream& out, const SequenceDataset& ds) {
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.labels()) out << (*ds.labels())[i] << '\t';
    out << ds[i].str() << '\n';
  }
}

BoundMatrices sequence_bound_matrices(const SequenceDataset& ds, unsigned threads) {
  const std::size_t n = ds.size();
  if (n < 2) throw std::invalid_argument("bound matrices need at least two sequences");
  std::vector<EditBounds> pairs(pair_count(n));
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs[pair_index(n, i, j)] = edit_bounds(ds[i], ds[j]);
  });
  BoundMatrices out{SquareMatrix(n), SquareMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& b = pairs[pair_index(n, i, j)];
      out.lower.set_symmetric(i, j, static_cast<double>(b.lower));
      out.upper.set_symmetric(i, j, static_cast<double>(b.upper));
    }
  }
  return out;
}

DistanceProblem sequence_problem(const SequenceDataset& ds, unsigned threads) {
  return {sequence_bound_matrices(ds, threads), [&ds](std::size_t i, std::size_t j) {
            return static_cast<double>(edit_distance(ds[i], ds[j]));
          }};
}

TadpoleResult tadpole_cluster_sequences(const SequenceDataset& ds, const TadpoleOptions& options) {
  const auto problem = sequence_problem(ds, options.threads);
  return tadpole_cluster(problem, options);
}

ClusterModel dp_cluster_sequences(const SequenceDataset& ds, double dc,
                                  std::optional<std::size_t> k, unsigned threads) {
  if (ds.size() < 2) throw std::invalid_argument("clustering needs at least two sequences");
  const auto d = full_distance_matrix(
      ds.size(),
      [&ds](std::size_t i, std::size_t j) { return static_cast<double>(edit_distance(ds[i], ds[j])); },
      threads);
  return dp_cluster(d, dc, k);
}

SequenceDataset generate_mutation_families(std::size_t families, std::size_t per_family,
                                           std::size_t length, double mutation_rate,
                                           std::uint64_t seed, const Alphabet& alphabet) {
  if (families == 0 || per_family == 0 || length == 0)
    throw std::invalid_argument("family count, family size, and length must be positive");
  if (!(mutation_rate >= 0.0 && mutation_rate <= 0.3))
    throw std::invalid_argument("mutation rate must be in [0, 0.3]");

  const std::string& symbols = alphabet.symbols();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::uniform_int_distribution<int> op(0, 2);
  std::bernoulli_distribution mutate(mutation_rate);

  std::vector<DiscreteSequence> seqs;
  std::vector<std::string> labels;
  for (std::size_t f = 0; f < families; ++f) {
    std::string root(length, ' ');
    for (auto& c : root) c = symbols[pick(rng)];
    for (std::size_t m = 0; m < per_family; ++m) {
      std::string member;
      member.reserve(length + length / 4);
      for (char c : root) {
        if (!mutate(rng)) {
          member.push_back(c);
          continue;
        }
        switch (op(rng)) {
          case 0: {  // substitution
            char s = symbols[pick(rng)];
            if (symbols.size() > 1) {
              while (s == c) s = symbols[pick(rng)];
            }
            member.push_back(s);
            break;
          }
          case 1:  // insertion before the current symbol
            member.push_back(symbols[pick(rng)]);
            member.push_back(c);
            break;
          default:  // deletion
            break;
        }
      }
      seqs.emplace_back(std::move(member), alphabet);
      labels.push_back("family" + std::to_string(f + 1));
    }
  }
  return SequenceDataset(std::move(seqs), alphabet, std::move(labels));
}

}  // namespace tadpole
