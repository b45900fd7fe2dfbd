#include "tadpole/edit_distance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tadpole {

Alphabet::Alphabet(std::string_view symbols) {
  for (char c : symbols) {
    if (!member_[static_cast<unsigned char>(c)]) {
      member_[static_cast<unsigned char>(c)] = true;
      symbols_.push_back(c);
    }
  }
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
}

Alphabet Alphabet::uppercase() { return Alphabet("ABCDEFGHIJKLMNOPQRSTUVWXYZ"); }

Alphabet Alphabet::protein() { return Alphabet("ACDEFGHIKLMNPQRSTVWY"); }

DiscreteSequence::DiscreteSequence(std::string symbols, const Alphabet& alphabet)
    : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!alphabet.contains(symbols_[i]))
      throw std::invalid_argument("symbol '" + std::string(1, symbols_[i]) + "' at position " +
                                  std::to_string(i) + " is outside the alphabet");
  }
}

std::size_t edit_distance(std::string_view s, std::string_view t) {
  if (s.size() < t.size()) std::swap(s, t);
  std::vector<std::size_t> row(t.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= s.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t sub = diag + (s[i - 1] == t[j - 1] ? 0 : 1);
      row[j] = std::min({up + 1, row[j - 1] + 1, sub});
      diag = up;
    }
  }
  return row[t.size()];
}

std::size_t edit_distance(const DiscreteSequence& s, const DiscreteSequence& t) {
  return edit_distance(s.view(), t.view());
}

EditBounds edit_bounds(std::string_view s, std::string_view t) {
  const std::size_t gap = s.size() > t.size() ? s.size() - t.size() : t.size() - s.size();

  std::array<long, 256> counts{};
  for (char c : s) ++counts[static_cast<unsigned char>(c)];
  for (char c : t) --counts[static_cast<unsigned char>(c)];
  std::size_t surplus_s = 0;
  std::size_t surplus_t = 0;
  for (long c : counts) {
    if (c > 0) surplus_s += static_cast<std::size_t>(c);
    if (c < 0) surplus_t += static_cast<std::size_t>(-c);
  }

  const std::size_t common = std::min(s.size(), t.size());
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < common; ++i) mismatches += s[i] != t[i] ? 1 : 0;

  return {std::max(gap, std::max(surplus_s, surplus_t)), mismatches + gap};
}

EditBounds edit_bounds(const DiscreteSequence& s, const DiscreteSequence& t) {
  return edit_bounds(s.view(), t.view());
}

}  // namespace tadpole
