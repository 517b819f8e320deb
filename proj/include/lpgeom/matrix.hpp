#pragma once

#include "lpgeom/error.hpp"
#include "lpgeom/expression.hpp"
#include "lpgeom/form.hpp"

#include <cstddef>
#include <vector>

namespace lpg {

/// Dense row-major matrix. Small sizes only; no expression templates.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix out(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExprMatrix = Matrix<Expression>;
using FormMatrix = Matrix<DifferentialForm>;

ExprMatrix identity_matrix(std::size_t n, const ChartPtr& chart = nullptr);
// Standard symplectic matrix J = (0, I; -I, 0) of size 2m.
ExprMatrix symplectic_j(std::size_t m, const ChartPtr& chart = nullptr);

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b);
ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b);
ExprMatrix operator-(const ExprMatrix& a);

/// Reduced row echelon form over the rational-function field; returns the
/// pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(ExprMatrix& m);
std::size_t rank(ExprMatrix m);
Expression determinant(ExprMatrix m);
// Gauss-Jordan; throws Degenerate for a singular matrix.
ExprMatrix inverse(const ExprMatrix& m);

FormMatrix zero_forms(std::size_t rows, std::size_t cols, const ChartPtr& chart);
FormMatrix operator+(const FormMatrix& a, const FormMatrix& b);
FormMatrix operator-(const FormMatrix& a, const FormMatrix& b);
FormMatrix operator-(const FormMatrix& a);
FormMatrix scale(const FormMatrix& a, const Expression& s);
/// Matrix product with entries multiplied by ∧.
FormMatrix wedge(const FormMatrix& a, const FormMatrix& b);
FormMatrix wedge(const ExprMatrix& a, const FormMatrix& b);
FormMatrix wedge(const FormMatrix& a, const ExprMatrix& b);
FormMatrix exterior_derivative(const FormMatrix& a);
// Entrywise total differential.
FormMatrix differential(const ExprMatrix& a);
bool is_zero(const FormMatrix& a);

} // namespace lpg
