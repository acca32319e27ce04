#include "prelie/algebra.hpp"

#include "prelie/errors.hpp"

namespace prelie {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols)
        throw ShapeError(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                         ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace

PreLieAlgebra::PreLieAlgebra(const Field& f, std::size_t dim)
    : field_(f), dim_(dim), table_(dim * dim, zero_vec(f, dim)) {}

PreLieAlgebra PreLieAlgebra::from_tensor(const Field& f, const std::vector<std::vector<Vec>>& c) {
    std::size_t n = c.size();
    PreLieAlgebra a(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].size() != n) throw ShapeError("structure tensor is not cubical");
        for (std::size_t j = 0; j < n; ++j) {
            if (c[i][j].size() != n) throw ShapeError("structure tensor is not cubical");
            a.product(i, j) = c[i][j];
        }
    }
    return a;
}

Vec PreLieAlgebra::mul(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("product argument has wrong dimension");
    Vec out = zero_vec(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            axpy(out, x[i] * y[j], product(i, j));
        }
    }
    return out;
}

Vec PreLieAlgebra::commutator(const Vec& x, const Vec& y) const { return mul(x, y) - mul(y, x); }

Matrix PreLieAlgebra::left_matrix(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, mul(x, unit_vec(field_, dim_, j)));
    return m;
}

Matrix PreLieAlgebra::right_matrix(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, mul(unit_vec(field_, dim_, j), x));
    return m;
}

void PreLieAlgebra::set_unit(Vec u) {
    if (u.size() != dim_) throw ShapeError("unit has wrong dimension");
    unit_ = std::move(u);
}

void PreLieAlgebra::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != dim_) throw ShapeError("label count differs from dimension");
    labels_ = std::move(labels);
}

bool PreLieAlgebra::is_zero() const {
    for (const auto& v : table_)
        if (!prelie::is_zero(v)) return false;
    return true;
}

PreLieAlgebra PreLieAlgebra::lifted() const {
    PreLieAlgebra a(Field::rationals(), dim_);
    for (std::size_t k = 0; k < table_.size(); ++k) a.table_[k] = lift(table_[k]);
    if (unit_) a.unit_ = lift(*unit_);
    a.labels_ = labels_;
    return a;
}

PreLieAlgebra PreLieAlgebra::reduced(const Field& f) const {
    PreLieAlgebra a(f, dim_);
    for (std::size_t k = 0; k < table_.size(); ++k) a.table_[k] = reduce(table_[k], f);
    if (unit_) a.unit_ = reduce(*unit_, f);
    a.labels_ = labels_;
    return a;
}

Vec LieBracket::eval(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            if (!y[j].is_zero()) axpy(out, x[i] * y[j], at(i, j));
    }
    return out;
}

Representation::Representation(const Field& f, std::size_t dim_g, std::size_t dim_v)
    : field_(f), dim_v_(dim_v), L_(dim_g, Matrix(f, dim_v, dim_v)), R_(dim_g, Matrix(f, dim_v, dim_v)) {}

Representation::Representation(std::vector<Matrix> left, std::vector<Matrix> right)
    : L_(std::move(left)), R_(std::move(right)) {
    if (L_.size() != R_.size()) throw ShapeError("representation: L and R list lengths differ");
    if (L_.empty()) return;
    field_ = L_.front().field();
    dim_v_ = L_.front().rows();
    for (std::size_t i = 0; i < L_.size(); ++i) {
        require_shape(L_[i], dim_v_, dim_v_, "representation L");
        require_shape(R_[i], dim_v_, dim_v_, "representation R");
    }
}

Vec Representation::left(const Vec& x, const Vec& u) const {
    if (x.size() != dim_g() || u.size() != dim_v_) throw DimensionMismatch("left action argument shape");
    Vec out = zero_vec(field_, dim_v_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) axpy(out, x[i], L_[i].apply(u));
    return out;
}

Vec Representation::right(const Vec& x, const Vec& u) const {
    if (x.size() != dim_g() || u.size() != dim_v_) throw DimensionMismatch("right action argument shape");
    Vec out = zero_vec(field_, dim_v_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) axpy(out, x[i], R_[i].apply(u));
    return out;
}

Matrix Representation::left_matrix(const Vec& x) const {
    Matrix m(field_, dim_v_, dim_v_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m += x[i] * L_[i];
    return m;
}

Matrix Representation::right_matrix(const Vec& x) const {
    Matrix m(field_, dim_v_, dim_v_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m += x[i] * R_[i];
    return m;
}

Representation Representation::lifted() const {
    Representation r(Field::rationals(), dim_g(), dim_v_);
    for (std::size_t i = 0; i < dim_g(); ++i) {
        r.L_[i] = L_[i].lifted();
        r.R_[i] = R_[i].lifted();
    }
    return r;
}

Representation Representation::reduced(const Field& f) const {
    Representation r(f, dim_g(), dim_v_);
    for (std::size_t i = 0; i < dim_g(); ++i) {
        r.L_[i] = L_[i].reduced(f);
        r.R_[i] = R_[i].reduced(f);
    }
    return r;
}

Report check_prelie(const PreLieAlgebra& a) {
    Report rep("prelie");
    const Field& f = a.field();
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vec x = unit_vec(f, n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vec y = unit_vec(f, n, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec z = unit_vec(f, n, k);
                // (x.y).z - x.(y.z) - (y.x).z + y.(x.z)
                Vec r = a.mul(a.product(i, j), z) - a.mul(x, a.product(j, k)) - a.mul(a.product(j, i), z) +
                        a.mul(y, a.product(i, k));
                rep.expect_zero({i, j, k}, std::move(r));
            }
        }
    }
    if (a.unit()) {
        Report unit("unit");
        for (std::size_t i = 0; i < n; ++i) {
            Vec x = unit_vec(f, n, i);
            unit.expect_zero({i}, a.mul(*a.unit(), x) - x);
            unit.expect_zero({i}, a.mul(x, *a.unit()) - x);
        }
        rep.add_part(std::move(unit));
    }
    return rep;
}

Report check_prelie(const Field& f, const std::vector<std::vector<Vec>>& c) {
    return check_prelie(PreLieAlgebra::from_tensor(f, c));
}

LieBracket subadjacent_lie(const PreLieAlgebra& a) {
    LieBracket b{a.field(), a.dim(), {}};
    b.table.reserve(a.dim() * a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) b.table.push_back(a.product(i, j) - a.product(j, i));
    return b;
}

Report check_lie(const LieBracket& b) {
    Report rep("lie");
    std::size_t n = b.dim;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rep.expect_zero({i, j}, b.at(i, j) + b.at(j, i));
            for (std::size_t k = 0; k < n; ++k) {
                Vec r = b.eval(unit_vec(b.field, n, i), b.at(j, k)) + b.eval(unit_vec(b.field, n, j), b.at(k, i)) +
                        b.eval(unit_vec(b.field, n, k), b.at(i, j));
                rep.expect_zero({i, j, k}, std::move(r));
            }
        }
    }
    return rep;
}

Report check_representation(const PreLieAlgebra& a, const Representation& rep) {
    if (rep.dim_g() != a.dim()) throw ShapeError("representation has " + std::to_string(rep.dim_g()) +
                                                 " action matrices for an algebra of dimension " +
                                                 std::to_string(a.dim()));
    Report out("representation");
    Report left("left");
    Report right("right");
    std::size_t n = a.dim();
    std::size_t m = rep.dim_v();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // L_x L_y - L_{x.y} - L_y L_x + L_{y.x}
            Matrix lhs = rep.L(i) * rep.L(j) - rep.left_matrix(a.product(i, j)) - rep.L(j) * rep.L(i) +
                         rep.left_matrix(a.product(j, i));
            // L_x R_y - R_y L_x - R_{x.y} + R_y R_x
            Matrix rhs = rep.L(i) * rep.R(j) - rep.R(j) * rep.L(i) - rep.right_matrix(a.product(i, j)) +
                         rep.R(j) * rep.R(i);
            for (std::size_t u = 0; u < m; ++u) {
                left.expect_zero({i, j, u}, lhs.column(u));
                right.expect_zero({i, j, u}, rhs.column(u));
            }
        }
    }
    out.add_part(std::move(left));
    out.add_part(std::move(right));
    return out;
}

Representation regular_representation(const PreLieAlgebra& a) {
    std::vector<Matrix> L, R;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec x = unit_vec(a.field(), a.dim(), i);
        L.push_back(a.left_matrix(x));
        R.push_back(a.right_matrix(x));
    }
    if (a.dim() == 0) return Representation(a.field(), 0, 0);
    return Representation(std::move(L), std::move(R));
}

Report check_derivation(const PreLieAlgebra& a, const LinearMap& d) {
    require_shape(d, a.dim(), a.dim(), "derivation");
    Report rep("derivation");
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(a.field(), n, i);
            Vec y = unit_vec(a.field(), n, j);
            Vec r = d.apply(a.product(i, j)) - a.mul(d.column(i), y) - a.mul(x, d.column(j));
            rep.expect_zero({i, j}, std::move(r));
        }
    }
    return rep;
}

Report check_morphism(const PreLieAlgebra& a, const PreLieAlgebra& b, const LinearMap& f) {
    require_shape(f, b.dim(), a.dim(), "morphism");
    Report rep("morphism");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            rep.expect_zero({i, j}, f.apply(a.product(i, j)) - b.mul(f.column(i), f.column(j)));
    return rep;
}

void require_prelie(const PreLieAlgebra& a) {
    if (!check_prelie(a)) throw UnverifiedAlgebra("product fails the pre-Lie identity");
}

void require_representation(const PreLieAlgebra& a, const Representation& rep) {
    if (!check_representation(a, rep)) throw UnverifiedRepresentation("actions fail the representation identities");
}

}  // namespace prelie
