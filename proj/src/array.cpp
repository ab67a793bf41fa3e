#include "hap/array.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hap {

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << "]";
  return os.str();
}

int64_t shape_size(const Shape& s) {
  int64_t n = 1;
  for (int64_t d : s) {
    if (d < 0) throw std::invalid_argument("negative dimension in shape " + shape_str(s));
    n *= d;
  }
  return n;
}

Array::Array(Shape shape) : shape_(std::move(shape)) {
  data_.assign(static_cast<size_t>(shape_size(shape_)), 0.0);
}

Array::Array(Shape shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
  if (shape_size(shape_) != static_cast<int64_t>(data_.size()))
    throw std::invalid_argument("data length " + std::to_string(data_.size()) +
                                " does not match shape " + shape_str(shape_));
}

Array Array::scalar(double v) { return Array({}, {v}); }

Array Array::full(Shape shape, double v) {
  Array a(std::move(shape));
  for (auto& x : a.data_) x = v;
  return a;
}

double Array::scalar_value() const {
  if (data_.size() != 1)
    throw std::invalid_argument("scalar_value on non-scalar array of shape " + shape_str(shape_));
  return data_[0];
}

bool Array::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace hap
