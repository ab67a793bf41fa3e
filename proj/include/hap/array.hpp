#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hap {

using Shape = std::vector<int64_t>;

std::string shape_str(const Shape& s);
int64_t shape_size(const Shape& s);

// Dense row-major f64 tensor. Rank-0 arrays hold one element and act as
// scalars.
class Array {
 public:
  Array() = default;
  explicit Array(Shape shape);
  Array(Shape shape, std::vector<double> data);

  static Array scalar(double v);
  static Array zeros(Shape shape) { return Array(std::move(shape)); }
  static Array full(Shape shape, double v);

  const Shape& shape() const { return shape_; }
  int64_t rank() const { return static_cast<int64_t>(shape_.size()); }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  int64_t dim(int64_t i) const { return shape_[static_cast<size_t>(i)]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<double> span() { return {data_.data(), data_.size()}; }
  std::span<const double> span() const { return {data_.data(), data_.size()}; }

  double scalar_value() const;
  bool same_shape(const Array& o) const { return shape_ == o.shape_; }
  bool all_finite() const;

  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

 private:
  Shape shape_;
  std::vector<double> data_;
};

}  // namespace hap
