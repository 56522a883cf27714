#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dscm {

using real = double;

/// NCHW extent. Vectors are stored as {n, k, 1, 1}; scalars as {1, 1, 1, 1}.
struct Shape {
    int n = 1;
    int c = 1;
    int h = 1;
    int w = 1;

    std::size_t numel() const {
        return static_cast<std::size_t>(n) * c * h * w;
    }
    std::size_t plane() const { return static_cast<std::size_t>(h) * w; }
    bool operator==(const Shape&) const = default;
    std::string str() const;
};

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void require_same_shape(const Shape& a, const Shape& b, const char* where);

class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape, real fill = 0);
    Tensor(Shape shape, std::vector<real> values);

    const Shape& shape() const { return shape_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    std::span<real> data() { return data_; }
    std::span<const real> data() const { return data_; }
    real* ptr() { return data_.data(); }
    const real* ptr() const { return data_.data(); }
    std::vector<real>& storage() { return data_; }
    const std::vector<real>& storage() const { return data_; }

    real& operator[](std::size_t i) { return data_[i]; }
    real operator[](std::size_t i) const { return data_[i]; }

    real& at(int n, int c, int h, int w) { return data_[index(n, c, h, w)]; }
    real at(int n, int c, int h, int w) const { return data_[index(n, c, h, w)]; }

    void fill(real v);
    /// Same data, new extent with equal element count.
    Tensor reshaped(Shape shape) const;
    /// Copy of batch element `n` as a {1, c, h, w} tensor.
    Tensor sample(int n) const;

private:
    std::size_t index(int n, int c, int h, int w) const {
        return ((static_cast<std::size_t>(n) * shape_.c + c) * shape_.h + h) * shape_.w + w;
    }

    Shape shape_{0, 0, 0, 0};
    std::vector<real> data_;
};

/// Stack single-sample tensors along the batch axis.
Tensor stack_batch(std::span<const Tensor> items);

}  // namespace dscm
