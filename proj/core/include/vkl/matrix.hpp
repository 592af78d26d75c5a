#pragma once

#include <cstddef>
#include <vector>

#include "vkl/errors.hpp"

namespace vkl {

/// Dense matrix with value semantics. Entry types are ring elements
/// (RatFun, Quaternion, RingElem); algorithms live with their modules.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }

    /// Submatrix with row r and column c deleted.
    Mat minor_at(std::size_t r, std::size_t c) const {
        Mat m(rows_ - 1, cols_ - 1, a_.front());
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == c) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y, const T& zero) {
    if (x.cols() != y.rows()) throw Error("matrix product: shape mismatch");
    Mat<T> r(x.rows(), y.cols(), zero);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k)
            for (std::size_t j = 0; j < y.cols(); ++j)
                r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
    return r;
}

template <class T>
Mat<T> mat_add(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw Error("matrix sum: shape mismatch");
    Mat<T> r = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
    return r;
}

template <class T>
Mat<T> mat_sub(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw Error("matrix difference: shape mismatch");
    Mat<T> r = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
    return r;
}

template <class T>
Mat<T> mat_identity(std::size_t n, const T& zero, const T& one) {
    Mat<T> r(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) r.at(i, i) = one;
    return r;
}

} // namespace vkl
