#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mdfs {

/// Dense column-major matrix of doubles. Columns are contiguous so that
/// per-feature scans (the dominant access pattern here) are cache-friendly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<double> column(std::size_t c) {
        return {data_.data() + c * rows_, rows_};
    }
    std::span<const double> column(std::size_t c) const {
        return {data_.data() + c * rows_, rows_};
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace mdfs
