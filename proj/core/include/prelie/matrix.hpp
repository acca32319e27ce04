#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prelie/scalar.hpp"

namespace prelie {

// Dense row-major matrix over a single field. A matrix with r rows and c
// columns represents a linear map from a c-dimensional space to an
// r-dimensional one; column j is the image of the j-th basis vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_columns(const Field& f, const std::vector<Vec>& cols, std::size_t rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    void set_column(std::size_t c, const Vec& v);

    Vec apply(const Vec& x) const;
    Matrix transpose() const;
    bool is_zero() const;
    // Same entries reinterpreted over Q (residues lifted) or reduced mod p.
    Matrix lifted() const;
    Matrix reduced(const Field& f) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

using LinearMap = Matrix;

struct KernelBasis {
    std::size_t ambient = 0;
    std::vector<Vec> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

// Reduced row echelon form; pivots are chosen as the first nonzero entry in
// column order, so the result depends only on the input.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;
};
Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);
// Basis of the null space: one vector per free column, carrying a 1 there and
// zeros at the other free columns.
KernelBasis kernel(const Matrix& m);
// One solution of a * x = b, or nullopt; throws DimensionMismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
// Exact inverse, or nullopt when singular; throws NotSquare.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace prelie
