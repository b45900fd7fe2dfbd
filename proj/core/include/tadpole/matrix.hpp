#pragma once

#include <cstddef>
#include <vector>

namespace tadpole {

/// Dense row-major n x n matrix of reals.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Writes v to (i, j) and (j, i).
  void set_symmetric(std::size_t i, std::size_t j, double v) {
    (*this)(i, j) = v;
    (*this)(j, i) = v;
  }

  const std::vector<double>& data() const noexcept { return data_; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Number of unordered pairs among n objects.
constexpr std::size_t pair_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Position of unordered pair (i, j), i != j, in row-major upper-triangle order.
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
  if (i > j) {
    const std::size_t t = i;
    i = j;
    j = t;
  }
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace tadpole
