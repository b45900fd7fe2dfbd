#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace tadpole {

/// A finite symbol set over single-byte characters.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  static Alphabet uppercase();
  /// The twenty standard amino-acid letters.
  static Alphabet protein();

  bool contains(char c) const noexcept { return member_[static_cast<unsigned char>(c)]; }
  const std::string& symbols() const noexcept { return symbols_; }

  bool operator==(const Alphabet& other) const noexcept { return member_ == other.member_; }

 private:
  std::string symbols_;
  std::array<bool, 256> member_{};
};

/// A sequence whose symbols were checked against an alphabet at construction.
class DiscreteSequence {
 public:
  /// Throws std::invalid_argument naming the first symbol outside `alphabet`.
  DiscreteSequence(std::string symbols, const Alphabet& alphabet);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::string_view view() const noexcept { return symbols_; }
  const std::string& str() const noexcept { return symbols_; }

  bool operator==(const DiscreteSequence&) const = default;

 private:
  std::string symbols_;
};

/// Unit-cost Levenshtein distance, O(|s| |t|) time, O(min) space.
std::size_t edit_distance(std::string_view s, std::string_view t);
std::size_t edit_distance(const DiscreteSequence& s, const DiscreteSequence& t);

struct EditBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

/// lower = max(length gap, bag distance of the symbol multisets);
/// upper = mismatches over the common-length prefix + length gap.
EditBounds edit_bounds(std::string_view s, std::string_view t);
EditBounds edit_bounds(const DiscreteSequence& s, const DiscreteSequence& t);

}  // namespace tadpole
