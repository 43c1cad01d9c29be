// Copyright 2026 The SGNet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SGNET_CORE_TENSOR_HPP_
#define SGNET_CORE_TENSOR_HPP_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "sgnet/core/error.hpp"

namespace sgnet {

// Dense row-major tensor. Storage is shared between copies; all code in this
// library treats a tensor's contents as frozen once it leaves the function
// that filled it, so the sharing is safe. Use clone() when a private copy is
// really needed.
template <typename T = float>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    store_ = std::make_shared<std::vector<T>>(count(shape_), T(0));
  }

  Tensor(std::vector<int> shape, std::vector<T> values) : shape_(std::move(shape)) {
    if (static_cast<int64_t>(values.size()) != count(shape_))
      throw DimensionMismatch("tensor value count does not match shape");
    store_ = std::make_shared<std::vector<T>>(std::move(values));
  }

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

  static Tensor full(std::vector<int> shape, T value) {
    Tensor t(std::move(shape));
    std::fill(t.store_->begin(), t.store_->end(), value);
    return t;
  }

  static Tensor uniform(std::vector<int> shape, T lo, T hi, std::mt19937_64& rng) {
    Tensor t(std::move(shape));
    std::uniform_real_distribution<double> d(static_cast<double>(lo), static_cast<double>(hi));
    for (auto& v : *t.store_) v = static_cast<T>(d(rng));
    return t;
  }

  static Tensor normal(std::vector<int> shape, T mean, T stddev, std::mt19937_64& rng) {
    Tensor t(std::move(shape));
    std::normal_distribution<double> d(static_cast<double>(mean), static_cast<double>(stddev));
    for (auto& v : *t.store_) v = static_cast<T>(d(rng));
    return t;
  }

  bool defined() const { return static_cast<bool>(store_); }
  const std::vector<int>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int64_t numel() const { return store_ ? static_cast<int64_t>(store_->size()) : 0; }

  T* data() { return store_->data(); }
  const T* data() const { return store_->data(); }

  T& operator[](int64_t i) { return (*store_)[static_cast<size_t>(i)]; }
  const T& operator[](int64_t i) const { return (*store_)[static_cast<size_t>(i)]; }

  // Shares storage.
  Tensor reshape(std::vector<int> shape) const {
    if (count(shape) != numel()) throw DimensionMismatch("reshape changes element count");
    Tensor t;
    t.shape_ = std::move(shape);
    t.store_ = store_;
    return t;
  }

  Tensor clone() const {
    Tensor t;
    t.shape_ = shape_;
    t.store_ = std::make_shared<std::vector<T>>(*store_);
    return t;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> t;
    std::vector<U> vals(store_->size());
    for (size_t i = 0; i < store_->size(); ++i) vals[i] = static_cast<U>((*store_)[i]);
    return Tensor<U>(shape_, std::move(vals));
  }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  T at(std::initializer_list<int> idx) const {
    int64_t off = 0;
    auto it = idx.begin();
    for (int d = 0; d < ndim(); ++d, ++it) off = off * shape_[static_cast<size_t>(d)] + *it;
    return (*store_)[static_cast<size_t>(off)];
  }

  bool all_finite() const {
    for (const auto& v : *store_)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }

  T min() const {
    T m = (*store_)[0];
    for (const auto& v : *store_) m = std::min(m, v);
    return m;
  }

  T max() const {
    T m = (*store_)[0];
    for (const auto& v : *store_) m = std::max(m, v);
    return m;
  }

  double mean() const {
    double s = 0;
    for (const auto& v : *store_) s += static_cast<double>(v);
    return numel() ? s / static_cast<double>(numel()) : 0.0;
  }

  std::string shape_str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < ndim(); ++i) os << (i ? "," : "") << shape_[static_cast<size_t>(i)];
    os << "]";
    return os.str();
  }

  static int64_t count(const std::vector<int>& shape) {
    int64_t n = 1;
    for (int d : shape) {
      if (d < 0) throw DimensionMismatch("negative dimension");
      n *= d;
    }
    return shape.empty() ? 0 : n;
  }

 private:
  template <typename U>
  friend class Tensor;

  std::vector<int> shape_;
  std::shared_ptr<std::vector<T>> store_;
};

}  // namespace sgnet

#endif  // SGNET_CORE_TENSOR_HPP_
