#include "prelie/matrix.hpp"

#include "prelie/errors.hpp"

namespace prelie {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw ShapeError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec y = zero_vec(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = at(r, c);
            if (!a.is_zero()) y[r] += a * x[c];
        }
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool Matrix::is_zero() const { return prelie::is_zero(data_); }

Matrix Matrix::lifted() const {
    Matrix m(Field::rationals(), rows_, cols_);
    m.data_ = lift(data_);
    return m;
}

Matrix Matrix::reduced(const Field& f) const {
    Matrix m(f, rows_, cols_);
    m.data_ = reduce(data_, f);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b.at(k, j);
                if (!y.is_zero()) c.at(i, j) += x * y;
            }
        }
    }
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out = m;
    for (auto& x : out.data_) x *= s;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Echelon row_reduce(const Matrix& m) {
    Echelon e{m, {}};
    Matrix& a = e.rref;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(row, c));
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                if (!a.at(row, c).is_zero()) a.at(r, c) -= f * a.at(row, c);
            }
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

KernelBasis kernel(const Matrix& m) {
    Echelon e = row_reduce(m);
    KernelBasis k;
    k.ambient = m.cols();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.field(), m.cols());
        v[free] = m.field().one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref.at(r, free);
        k.basis.push_back(std::move(v));
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: a has " + std::to_string(a.rows()) +
                                                      " rows, b has " + std::to_string(b.rows()));
    Matrix aug(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
    }
    Echelon e = row_reduce(aug);
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::size_t p = e.pivots[r];
        if (p >= a.cols()) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c) x.at(p, c) = e.rref.at(r, a.cols() + c);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("inverse of a " + std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()) + " matrix");
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

}  // namespace prelie
