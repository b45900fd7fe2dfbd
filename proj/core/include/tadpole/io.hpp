#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tadpole/series.hpp"

namespace tadpole {

enum class Delimiter { tab, comma };

/// Parses "tab"/"tsv" or "comma"/"csv".
Delimiter parse_delimiter(const std::string& name);

/// Reads the labeled row format: one object per line, class token first,
/// then >= 2 real values. Blank lines are ignored. Throws DataError naming the
/// offending row (1-based) for ragged or non-numeric rows.
LabeledDataset load_ucr(const std::filesystem::path& path, Delimiter delimiter = Delimiter::tab);
LabeledDataset parse_ucr(std::istream& in, Delimiter delimiter = Delimiter::tab,
                         const std::string& source = "<stream>");

/// One file per channel, identical row counts and class tokens.
LabeledDataset load_ucr_multichannel(const std::vector<std::filesystem::path>& paths,
                                     Delimiter delimiter = Delimiter::tab);

/// Writes one channel of the dataset in the row format, using shortest
/// round-trip number formatting. Rows without labels get the token "0".
void write_ucr(std::ostream& out, const LabeledDataset& dataset, std::size_t channel = 0,
               Delimiter delimiter = Delimiter::tab);
void save_ucr(const std::filesystem::path& path, const LabeledDataset& dataset,
              std::size_t channel = 0, Delimiter delimiter = Delimiter::tab);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace tadpole
