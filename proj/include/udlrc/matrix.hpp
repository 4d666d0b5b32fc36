#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "udlrc/error.hpp"

namespace udlrc {

template <class F>
concept FieldLike = requires(const F& f, const typename F::Elem& a) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
};

/// Dense row-major matrix. Entries are plain values; the field they belong to is supplied to
/// every algorithm that needs arithmetic.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<T> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const T> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) noexcept {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    /// Column submatrix G|_T.
    [[nodiscard]] Matrix columns(std::span<const std::size_t> idx) const {
        Matrix out;
        out.rows_ = rows_;
        out.cols_ = idx.size();
        out.data_.reserve(rows_ * idx.size());
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c : idx) {
                if (c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(c));
                out.data_.push_back((*this)(r, c));
            }
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Forward elimination in place with first-nonzero pivoting; returns the rank.
template <FieldLike F>
std::size_t eliminate(const F& field, Matrix<typename F::Elem>& m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && field.is_zero(m(pivot, c))) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(rank, pivot);
        const auto pivot_inv = field.inv(m(rank, c));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (field.is_zero(m(r, c))) continue;
            const auto factor = field.mul(m(r, c), pivot_inv);
            for (std::size_t cc = c; cc < m.cols(); ++cc) {
                if (field.is_zero(m(rank, cc))) continue;
                m(r, cc) = field.sub(m(r, cc), field.mul(factor, m(rank, cc)));
            }
        }
        ++rank;
    }
    return rank;
}

template <FieldLike F>
std::size_t matrix_rank(const F& field, Matrix<typename F::Elem> m) {
    return eliminate(field, m);
}

/// Unique solution of m * x = rhs for square invertible m.
template <FieldLike F>
std::vector<typename F::Elem> solve_linear(const F& field, Matrix<typename F::Elem> m,
                                           std::vector<typename F::Elem> rhs) {
    const std::size_t n = m.rows();
    if (m.cols() != n || rhs.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "solve_linear needs a square system");
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && field.is_zero(m(pivot, c))) ++pivot;
        if (pivot == n) throw Error(ErrorCode::SingularMatrix, "no pivot in column " + std::to_string(c));
        m.swap_rows(c, pivot);
        std::swap(rhs[c], rhs[pivot]);
        const auto pivot_inv = field.inv(m(c, c));
        for (std::size_t cc = c; cc < n; ++cc) m(c, cc) = field.mul(m(c, cc), pivot_inv);
        rhs[c] = field.mul(rhs[c], pivot_inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || field.is_zero(m(r, c))) continue;
            const auto factor = m(r, c);
            for (std::size_t cc = c; cc < n; ++cc) m(r, cc) = field.sub(m(r, cc), field.mul(factor, m(c, cc)));
            rhs[r] = field.sub(rhs[r], field.mul(factor, rhs[c]));
        }
    }
    return rhs;
}

template <FieldLike F>
Matrix<typename F::Elem> inverse(const F& field, const Matrix<typename F::Elem>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorCode::LengthMismatch, "inverse of a non-square matrix");
    Matrix<typename F::Elem> out(n, n, field.zero());
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<typename F::Elem> e(n, field.zero());
        e[c] = field.one();
        auto col = solve_linear(field, m, std::move(e));
        for (std::size_t r = 0; r < n; ++r) out(r, c) = col[r];
    }
    return out;
}

template <FieldLike F>
Matrix<typename F::Elem> multiply(const F& field, const Matrix<typename F::Elem>& a,
                                  const Matrix<typename F::Elem>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::LengthMismatch, "matrix product shape");
    Matrix<typename F::Elem> out(a.rows(), b.cols(), field.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (field.is_zero(a(i, l))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = field.add(out(i, j), field.mul(a(i, l), b(l, j)));
        }
    }
    return out;
}

/// m * v.
template <FieldLike F>
std::vector<typename F::Elem> apply(const F& field, const Matrix<typename F::Elem>& m,
                                    std::span<const typename F::Elem> v) {
    if (m.cols() != v.size()) throw Error(ErrorCode::LengthMismatch, "matrix-vector shape");
    std::vector<typename F::Elem> out(m.rows(), field.zero());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] = field.add(out[r], field.mul(m(r, c), v[c]));
    }
    return out;
}

}  // namespace udlrc
