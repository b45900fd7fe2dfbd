#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "tadpole/metrics.hpp"
#include "tadpole/sequences.hpp"

using namespace tadpole;

TEST(ParseSequences, LabelsAndValidation) {
  std::istringstream in("a\tACGT\nb\tAGGT\n");
  const auto ds = parse_sequences(in, Alphabet("ACGT"));
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ((*ds.labels())[1], "b");
  EXPECT_EQ(ds[1].str(), "AGGT");

  std::istringstream plain("ACGT\nAC\n");
  EXPECT_FALSE(parse_sequences(plain, Alphabet("ACGT")).labels().has_value());

  std::istringstream bad("ACGT\nACXT\n");
  try {
    parse_sequences(bad, Alphabet("ACGT"));
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
  }
  std::istringstream empty("");
  EXPECT_THROW(parse_sequences(empty), DataError);
}

TEST(WriteSequences, RoundTrip) {
  const auto ds = generate_mutation_families(2, 3, 20, 0.1, 4);
  std::stringstream io;
  write_sequences(io, ds);
  const auto back = parse_sequences(io, Alphabet::protein());
  ASSERT_EQ(back.size(), ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) EXPECT_EQ(back[i], ds[i]);
  EXPECT_EQ(back.labels(), ds.labels());
}

TEST(SequenceBounds, MatrixEntries) {
  const Alphabet a = Alphabet::uppercase();
  const SequenceDataset ds({DiscreteSequence("INDUSTRY", a), DiscreteSequence("INTEREST", a),
                            DiscreteSequence("INDUSTRY", a)},
                           a);
  const auto b = sequence_bound_matrices(ds);
  EXPECT_EQ(b.lower(0, 1), 3.0);
  EXPECT_EQ(b.upper(0, 1), 6.0);
  EXPECT_EQ(b.lower(0, 2), 0.0);
  EXPECT_EQ(b.upper(0, 2), 0.0);
}

TEST(SequenceBounds, SandwichOnRandomPairs) {
  const auto ds = generate_mutation_families(4, 5, 30, 0.3, 8, Alphabet("ACGT"));
  const auto b = sequence_bound_matrices(ds);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j, ++checked) {
      const double d = static_cast<double>(oracle::table_edit_distance(ds[i].str(), ds[j].str()));
      EXPECT_LE(b.lower(i, j), d);
      EXPECT_LE(d, b.upper(i, j));
    }
  EXPECT_GE(checked, 190u);
}

TEST(MutationFamilies, ZeroRateCopiesAndDeterminism) {
  const auto ds = generate_mutation_families(3, 4, 25, 0.0, 1);
  for (std::size_t f = 0; f < 3; ++f)
    for (std::size_t m = 1; m < 4; ++m) EXPECT_EQ(ds[f * 4 + m], ds[f * 4]);
  const auto a = generate_mutation_families(3, 4, 25, 0.1, 2);
  const auto b = generate_mutation_families(3, 4, 25, 0.1, 2);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  EXPECT_THROW(generate_mutation_families(3, 4, 25, 0.5, 2), std::invalid_argument);
}

TEST(MutationFamilies, WithinFamilyCloserThanAcross) {
  const auto ds = generate_mutation_families(3, 10, 80, 0.1, 3);
  const auto& labels = *ds.labels();
  double within = 0.0, across = 0.0;
  std::size_t nw = 0, na = 0;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      const double d = static_cast<double>(oracle::table_edit_distance(ds[i].str(), ds[j].str()));
      if (labels[i] == labels[j]) {
        within += d;
        ++nw;
      } else {
        across += d;
        ++na;
      }
    }
  EXPECT_LT(within / nw, across / na);
}

TEST(SequenceClustering, IdenticalStringsOneClusterNoCalls) {
  const Alphabet a("ACGT");
  std::vector<DiscreteSequence> s(6, DiscreteSequence("ACGTTGCA", a));
  const SequenceDataset ds(s, a);
  const auto r = tadpole_cluster_sequences(ds, TadpoleOptions{1.0, std::nullopt});
  EXPECT_EQ(r.stats.exact_calls(), 0u);
  EXPECT_EQ(r.model.labels, std::vector<int>(6, 1));
}

TEST(SequenceClustering, MatchesBruteForce) {
  const auto ds = generate_mutation_families(3, 12, 60, 0.1, 5);
  const auto truth = encode_labels(*ds.labels());
  for (double dc : {5.0, 10.0, 20.0}) {
    const auto r = tadpole_cluster_sequences(ds, TadpoleOptions{dc, 3});
    const auto brute = dp_cluster_sequences(ds, dc, 3);
    EXPECT_EQ(r.model, brute);
    EXPECT_LE(r.stats.exact_calls(), r.stats.total_pairs);
  }
  const auto r = tadpole_cluster_sequences(ds, TadpoleOptions{20.0, 3});
  EXPECT_GE(rand_index(r.model.labels, truth), 0.95);
}
