#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wvkit {

/// Row-major tensor of rank 1 to 3 with positive extents.
class Tensor {
 public:
  Tensor() = default;
  /// Throws DomainError for rank outside 1..3 or a zero extent.
  explicit Tensor(std::vector<std::size_t> shape, double fill = 0.0);
  /// Throws DomainError when values.size() differs from the shape product.
  Tensor(std::vector<std::size_t> shape, std::vector<double> values);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  double& operator()(std::size_t i, std::size_t j) {
    return values_[i * shape_[1] + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * shape_[1] + j];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return values_[(i * shape_[1] + j) * shape_[2] + k];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[(i * shape_[1] + j) * shape_[2] + k];
  }

  /// Same values under a new shape with equal element count.
  Tensor reshaped(std::vector<std::size_t> shape) const;

  void fill(double v);
  bool all_finite() const;

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> values_;
};

/// Rank-1 view of the same values in row-major order.
Tensor flatten(const Tensor& input);

}  // namespace wvkit
