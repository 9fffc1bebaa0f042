#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "malcnn/errors.hpp"

namespace malcnn {

using Shape = std::vector<std::int64_t>;

std::string shape_str(const Shape& s);

// Product of extents; throws ShapeError on empty shape or non-positive
// extent.
std::int64_t shape_numel(const Shape& s);

enum class DType : std::uint8_t { f32 = 0, f64 = 1 };

// Global determinism switch. On (the default, and what every test assumes):
// all kernels run serially with a fixed left-to-right reduction order.
// Off: batch-level loops may fan out across worker threads.
void set_deterministic(bool on) noexcept;
bool deterministic() noexcept;

// Dense n-dimensional array, row-major, value-semantic. The single value
// type for activations, weights and gradients. float for training speed,
// double for gradient checking.
template <typename T>
class Tensor {
  static_assert(std::is_floating_point_v<T>);

 public:
  Tensor() = default;
  explicit Tensor(Shape shape, T fill = T(0));
  Tensor(Shape shape, std::vector<T> values);
  Tensor(Shape shape, std::initializer_list<T> values);

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor full(Shape shape, T v) { return Tensor(std::move(shape), v); }

  const Shape& shape() const noexcept { return shape_; }
  int rank() const noexcept { return static_cast<int>(shape_.size()); }
  std::int64_t numel() const noexcept {
    return static_cast<std::int64_t>(data_.size());
  }
  std::int64_t extent(int axis) const { return shape_.at(axis); }
  bool empty() const noexcept { return data_.empty(); }
  static constexpr DType dtype() noexcept {
    return std::is_same_v<T, float> ? DType::f32 : DType::f64;
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }
  T* ptr() noexcept { return data_.data(); }
  const T* ptr() const noexcept { return data_.data(); }

  T& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
  const T& operator[](std::int64_t i) const {
    return data_[static_cast<std::size_t>(i)];
  }

  template <typename... Ix>
  T& at(Ix... ix) {
    return data_[static_cast<std::size_t>(offset_of(ix...))];
  }
  template <typename... Ix>
  const T& at(Ix... ix) const {
    return data_[static_cast<std::size_t>(offset_of(ix...))];
  }

  // Same data order, new shape; element count must match.
  Tensor reshaped(Shape new_shape) const&;
  Tensor reshaped(Shape new_shape) &&;

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out(shape_);
    for (std::int64_t i = 0; i < numel(); ++i)
      out[i] = static_cast<U>(data_[static_cast<std::size_t>(i)]);
    return out;
  }

  bool all_finite() const noexcept;

  // Exact elementwise equality (bitwise for normal values).
  bool equals(const Tensor& o) const noexcept;

 private:
  template <typename... Ix>
  std::int64_t offset_of(Ix... ix) const {
    static_assert((std::is_convertible_v<Ix, std::int64_t> && ...));
    const std::int64_t idx[] = {static_cast<std::int64_t>(ix)...};
    std::int64_t off = 0;
    for (std::size_t a = 0; a < sizeof...(ix); ++a)
      off = off * shape_[a] + idx[a];
    return off;
  }

  Shape shape_;
  std::vector<T> data_;
};

enum class EwOp { add, sub, mul };
enum class ReduceOp { sum, mean, max };

// Standard matrix product of rank-2 tensors [m,k] x [k,n] -> [m,n].
template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b);

// a^T * b for a [m,p], b [m,q] -> [p,q]. Used by backward passes.
template <typename T>
Tensor<T> matmul_tn(const Tensor<T>& a, const Tensor<T>& b);

// a * b^T for a [m,k], b [n,k] -> [m,n].
template <typename T>
Tensor<T> matmul_nt(const Tensor<T>& a, const Tensor<T>& b);

// Elementwise op. b must either match a's shape exactly or be a rank-1
// tensor matching a's trailing (channel) extent; no other broadcasting.
template <typename T>
Tensor<T> elementwise(EwOp op, const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b) {
  return elementwise(EwOp::add, a, b);
}
template <typename T>
Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b) {
  return elementwise(EwOp::sub, a, b);
}
template <typename T>
Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b) {
  return elementwise(EwOp::mul, a, b);
}

// Reduce over the given axes (duplicates rejected); reduced axes are removed
// from the shape. Reducing over every axis yields shape {1}. An empty axis
// set returns the input unchanged. Sums accumulate in 64-bit in a fixed
// left-to-right order regardless of storage precision.
template <typename T>
Tensor<T> reduce(ReduceOp op, const Tensor<T>& t, const std::vector<int>& axes);

template <typename T>
Tensor<T> transpose2d(const Tensor<T>& a);

}  // namespace malcnn
