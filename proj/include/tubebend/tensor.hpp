#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tubebend/common.hpp"

namespace tubebend {

// Dense row-major tensor of doubles, rank 1..4.
// Rank-4 layout is [batch, height, width, channels]; rank-2 is [batch, features].
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
        std::size_t n = 1;
        for (std::size_t d : shape_) n *= d;
        data_.assign(n, 0.0);
    }

    Tensor(std::initializer_list<std::size_t> shape)
        : Tensor(std::vector<std::size_t>(shape)) {}

    static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    std::size_t dim(std::size_t i) const { return shape_[i]; }
    const std::vector<std::size_t>& shape() const { return shape_; }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    double& at2(std::size_t b, std::size_t f) { return data_[b * shape_[1] + f]; }
    double at2(std::size_t b, std::size_t f) const { return data_[b * shape_[1] + f]; }

    double& at4(std::size_t b, std::size_t y, std::size_t x, std::size_t c) {
        return data_[((b * shape_[1] + y) * shape_[2] + x) * shape_[3] + c];
    }
    double at4(std::size_t b, std::size_t y, std::size_t x, std::size_t c) const {
        return data_[((b * shape_[1] + y) * shape_[2] + x) * shape_[3] + c];
    }

    void fill(double v) {
        for (double& e : data_) e = v;
    }

    // Same elements, new shape. Element count must match.
    Tensor reshaped(std::vector<std::size_t> shape) const {
        std::size_t n = 1;
        for (std::size_t d : shape) n *= d;
        if (n != data_.size())
            throw DataError("reshape: element count mismatch (" + std::to_string(n) + " vs " +
                            std::to_string(data_.size()) + ")");
        Tensor out;
        out.shape_ = std::move(shape);
        out.data_ = data_;
        return out;
    }

    std::string shape_str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < shape_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(shape_[i]);
        }
        return s + "]";
    }

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

} // namespace tubebend
