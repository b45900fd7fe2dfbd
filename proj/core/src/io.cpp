#include "tadpole/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace tadpole {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

char separator(Delimiter d) { return d == Delimiter::tab ? '\t' : ','; }

std::string where(const std::string& source, std::size_t row) {
  return source + ": row " + std::to_string(row);
}

}  // namespace

Delimiter parse_delimiter(const std::string& name) {
  if (name == "tab" || name == "tsv") return Delimiter::tab;
  if (name == "comma" || name == "csv") return Delimiter::comma;
  throw std::invalid_argument("unknown delimiter '" + name + "' (expected tsv or csv)");
}

LabeledDataset parse_ucr(std::istream& in, Delimiter delimiter, const std::string& source) {
  std::vector<TimeSeries> series;
  std::vector<std::string> labels;
  std::size_t width = 0;
  std::size_t row = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto fields = split(trim(line), separator(delimiter));
    if (width == 0) {
      width = fields.size();
      if (width < 3)
        throw DataError(where(source, row) + ": expected a class token and >= 2 values");
    } else if (fields.size() != width) {
      throw DataError(where(source, row) + ": expected " + std::to_string(width) +
                      " fields, found " + std::to_string(fields.size()));
    }
    std::vector<double> values;
    values.reserve(width - 1);
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const auto text = fields[f];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw DataError(where(source, row) + ": field " + std::to_string(f + 1) +
                        " is not a number: '" + std::string(text) + "'");
      values.push_back(v);
    }
    labels.emplace_back(fields.front());
    try {
      series.emplace_back(std::move(values));
    } catch (const std::invalid_argument& e) {
      throw DataError(where(source, row) + ": " + e.what());
    }
  }
  if (series.empty()) throw DataError(source + ": empty dataset");
  return LabeledDataset(std::move(series), std::move(labels));
}

LabeledDataset load_ucr(const std::filesystem::path& path, Delimiter delimiter) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file: " + path.string());
  return parse_ucr(in, delimiter, path.string());
}

LabeledDataset load_ucr_multichannel(const std::vector<std::filesystem::path>& paths,
                                     Delimiter delimiter) {
  if (paths.empty()) throw std::invalid_argument("no input files given");
  std::vector<LabeledDataset> parts;
  parts.reserve(paths.size());
  for (const auto& p : paths) parts.push_back(load_ucr(p, delimiter));
  if (parts.size() == 1) return std::move(parts.front());

  const auto& first = parts.front();
  for (std::size_t c = 1; c < parts.size(); ++c) {
    if (parts[c].size() != first.size())
      throw DataError(paths[c].string() + ": row count " + std::to_string(parts[c].size()) +
                      " differs from " + std::to_string(first.size()) + " in " +
                      paths.front().string());
    if (parts[c].labels() != first.labels())
      throw DataError(paths[c].string() + ": class tokens differ from " + paths.front().string());
  }
  std::vector<TimeSeries> series;
  series.reserve(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    std::vector<std::vector<double>> channels;
    for (const auto& part : parts) channels.push_back(part[i].channels().front());
    series.emplace_back(std::move(channels));
  }
  return LabeledDataset(std::move(series), first.labels());
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

void write_ucr(std::ostream& out, const LabeledDataset& dataset, std::size_t channel,
               Delimiter delimiter) {
  const char sep = separator(delimiter);
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    out << (dataset.labels() ? (*dataset.labels())[i] : std::string("0"));
    for (double v : dataset[i].channel(channel)) out << sep << format_double(v);
    out << '\n';
  }
}

void save_ucr(const std::filesystem::path& path, const LabeledDataset& dataset,
              std::size_t channel, Delimiter delimiter) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write dataset file: " + path.string());
  write_ucr(out, dataset, channel, delimiter);
}

}  // namespace tadpole
