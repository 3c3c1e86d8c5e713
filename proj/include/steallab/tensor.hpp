#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "steallab/common.hpp"

namespace steallab {

// Dense row-major tensor of doubles. Batches are (N, ...); images are
// channels-last (N, H, W, C), flat samples are (N, D).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), data_(count(shape_), 0.0) {}
    Tensor(std::vector<std::size_t> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (data_.size() != count(shape_))
            throw ShapeError("tensor data size does not match shape");
    }

    static std::size_t count(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (std::size_t d : shape) n *= d;
        return shape.empty() ? 0 : n;
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t dim(std::size_t i) const { return shape_.at(i); }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    // Leading dimension = number of samples in a batch.
    std::size_t rows() const { return shape_.empty() ? 0 : shape_[0]; }
    // Flattened size of one sample.
    std::size_t row_size() const { return rows() == 0 ? 0 : data_.size() / rows(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& vec() { return data_; }
    const std::vector<double>& vec() const { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    std::span<double> row(std::size_t i) {
        return {data_.data() + i * row_size(), row_size()};
    }
    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * row_size(), row_size()};
    }

    // Same data, new shape (element counts must match).
    Tensor reshaped(std::vector<std::size_t> shape) const {
        if (count(shape) != data_.size()) throw ShapeError("reshape count mismatch");
        return Tensor(std::move(shape), data_);
    }

    // Copies selected rows into a new batch tensor.
    Tensor gather_rows(std::span<const std::size_t> idx) const {
        std::vector<std::size_t> out_shape = shape_;
        out_shape[0] = idx.size();
        Tensor out(out_shape);
        const std::size_t rs = row_size();
        for (std::size_t i = 0; i < idx.size(); ++i) {
            auto src = row(idx[i]);
            std::copy(src.begin(), src.end(), out.data() + i * rs);
        }
        return out;
    }

    // Appends the rows of `other` (same per-row shape required).
    void append_rows(const Tensor& other) {
        if (empty()) {
            *this = other;
            return;
        }
        if (other.row_size() != row_size())
            throw ShapeError("append_rows: row size mismatch");
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        shape_[0] += other.rows();
    }

    std::string shape_str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < shape_.size(); ++i)
            s += (i ? "," : "") + std::to_string(shape_[i]);
        return s + ")";
    }

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

}  // namespace steallab
