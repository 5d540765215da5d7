#include "wvkit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "wvkit/error.hpp"

namespace wvkit {

namespace {

std::size_t checked_count(const std::vector<std::size_t>& shape) {
  if (shape.empty() || shape.size() > 3) {
    throw DomainError(fmt::format("tensor rank {} not in 1..3", shape.size()));
  }
  if (std::find(shape.begin(), shape.end(), 0u) != shape.end()) {
    throw DomainError(fmt::format("tensor shape {} has a zero extent", shape));
  }
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                         std::multiplies<>());
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape, double fill)
    : shape_(std::move(shape)), values_(checked_count(shape_), fill) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  const std::size_t count = checked_count(shape_);
  if (values_.size() != count) {
    throw DomainError(fmt::format("tensor shape {} needs {} values, got {}",
                                  shape_, count, values_.size()));
  }
}

Tensor Tensor::reshaped(std::vector<std::size_t> shape) const {
  return Tensor(std::move(shape), values_);
}

void Tensor::fill(double v) { std::fill(values_.begin(), values_.end(), v); }

bool Tensor::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

Tensor flatten(const Tensor& input) { return input.reshaped({input.size()}); }

}  // namespace wvkit
