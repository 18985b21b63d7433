#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hseq/errors.hpp"

namespace hseq {

// Dense row-major tensor. Scalar type is float in the production path and
// double in gradient-checking mode.
template <typename T>
class TensorT {
public:
    TensorT() = default;

    explicit TensorT(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), values_(element_count(shape_), T{0}) {}

    TensorT(std::vector<std::size_t> shape, std::vector<T> values)
        : shape_(std::move(shape)), values_(std::move(values)) {
        if (values_.size() != element_count(shape_)) {
            throw ShapeError("tensor value count " + std::to_string(values_.size()) +
                             " does not match shape " + shape_string(shape_));
        }
    }

    static TensorT vector_of(std::vector<T> values) {
        std::vector<std::size_t> shape{values.size()};
        return TensorT(std::move(shape), std::move(values));
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    std::size_t extent(std::size_t axis) const { return shape_.at(axis); }

    T* data() { return values_.data(); }
    const T* data() const { return values_.data(); }
    std::vector<T>& values() { return values_; }
    const std::vector<T>& values() const { return values_; }

    T& operator[](std::size_t i) { return values_[i]; }
    const T& operator[](std::size_t i) const { return values_[i]; }

    // Row-major 2-D access.
    T& at2(std::size_t row, std::size_t col) { return values_[row * shape_[1] + col]; }
    const T& at2(std::size_t row, std::size_t col) const { return values_[row * shape_[1] + col]; }

    void fill(T v) { std::fill(values_.begin(), values_.end(), v); }

    bool same_shape(const TensorT& other) const { return shape_ == other.shape_; }

    bool all_finite() const {
        for (const T v : values_) {
            if (!std::isfinite(static_cast<double>(v))) return false;
        }
        return true;
    }

    void require_finite(const std::string& context) const {
        if (!all_finite()) {
            throw DataError("non-finite value in " + context);
        }
    }

    std::string shape_str() const { return shape_string(shape_); }

    static std::size_t element_count(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (std::size_t e : shape) n *= e;
        return shape.empty() ? 0 : n;
    }

    static std::string shape_string(const std::vector<std::size_t>& shape) {
        std::ostringstream out;
        out << "[";
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (i) out << "x";
            out << shape[i];
        }
        out << "]";
        return out.str();
    }

private:
    std::vector<std::size_t> shape_;
    std::vector<T> values_;
};

using Tensor = TensorT<float>;

template <typename T>
void require_same_shape(const TensorT<T>& a, const TensorT<T>& b, const char* op) {
    if (!a.same_shape(b)) {
        throw ShapeError(std::string(op) + ": shape " + a.shape_str() + " vs " + b.shape_str());
    }
}

}  // namespace hseq
