#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prelie/matrix.hpp"
#include "prelie/report.hpp"
#include "prelie/scalar.hpp"

namespace prelie {

// Bilinear product on a finite-dimensional space given by structure
// constants: e_i . e_j = sum_k c[i][j][k] e_k. Indices are 0-based in code.
// Values are raw data; the axioms are established by check_prelie.
class PreLieAlgebra {
public:
    PreLieAlgebra() = default;
    PreLieAlgebra(const Field& f, std::size_t dim);
    // Builds from a nested c[i][j][k] tensor; throws ShapeError unless cubical.
    static PreLieAlgebra from_tensor(const Field& f, const std::vector<std::vector<Vec>>& c);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    Vec& product(std::size_t i, std::size_t j) { return table_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) { product(i, j).at(k) = c; }

    Vec mul(const Vec& x, const Vec& y) const;
    Vec commutator(const Vec& x, const Vec& y) const;
    // Matrices of y -> x.y and y -> y.x.
    Matrix left_matrix(const Vec& x) const;
    Matrix right_matrix(const Vec& x) const;

    const std::optional<Vec>& unit() const noexcept { return unit_; }
    void set_unit(Vec u);
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool is_zero() const;
    PreLieAlgebra lifted() const;
    PreLieAlgebra reduced(const Field& f) const;

    friend bool operator==(const PreLieAlgebra& a, const PreLieAlgebra& b) {
        return a.dim_ == b.dim_ && a.field_ == b.field_ && a.table_ == b.table_;
    }

private:
    Field field_;
    std::size_t dim_ = 0;
    std::vector<Vec> table_;
    std::optional<Vec> unit_;
    std::vector<std::string> labels_;
};

// Antisymmetric bracket table [e_i, e_j] = sum_k b[i][j][k] e_k.
struct LieBracket {
    Field field;
    std::size_t dim = 0;
    std::vector<Vec> table;

    const Vec& at(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
    Vec eval(const Vec& x, const Vec& y) const;
};

// A representation (V; L, R) of an algebra of dimension dim_g on V of
// dimension dim_v: one dim_v x dim_v matrix per basis element for each action.
class Representation {
public:
    Representation() = default;
    // Zero representation.
    Representation(const Field& f, std::size_t dim_g, std::size_t dim_v);
    Representation(std::vector<Matrix> left, std::vector<Matrix> right);

    const Field& field() const noexcept { return field_; }
    std::size_t dim_g() const noexcept { return L_.size(); }
    std::size_t dim_v() const noexcept { return dim_v_; }

    const Matrix& L(std::size_t i) const { return L_.at(i); }
    const Matrix& R(std::size_t i) const { return R_.at(i); }
    Matrix& L(std::size_t i) { return L_.at(i); }
    Matrix& R(std::size_t i) { return R_.at(i); }

    // L_x u and R_x u for arbitrary x in g, u in V.
    Vec left(const Vec& x, const Vec& u) const;
    Vec right(const Vec& x, const Vec& u) const;
    Matrix left_matrix(const Vec& x) const;
    Matrix right_matrix(const Vec& x) const;

    Representation lifted() const;
    Representation reduced(const Field& f) const;

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.dim_v_ == b.dim_v_ && a.L_ == b.L_ && a.R_ == b.R_;
    }

private:
    Field field_;
    std::size_t dim_v_ = 0;
    std::vector<Matrix> L_;
    std::vector<Matrix> R_;
};

// Pre-Lie identity on every basis triple; also the unit laws when a unit is set.
Report check_prelie(const PreLieAlgebra& a);
Report check_prelie(const Field& f, const std::vector<std::vector<Vec>>& c);
LieBracket subadjacent_lie(const PreLieAlgebra& a);
Report check_lie(const LieBracket& b);
Report check_representation(const PreLieAlgebra& a, const Representation& rep);
Representation regular_representation(const PreLieAlgebra& a);
Report check_derivation(const PreLieAlgebra& a, const LinearMap& d);
Report check_morphism(const PreLieAlgebra& a, const PreLieAlgebra& b, const LinearMap& f);

// Throw UnverifiedAlgebra / UnverifiedRepresentation when the axioms fail.
void require_prelie(const PreLieAlgebra& a);
void require_representation(const PreLieAlgebra& a, const Representation& rep);

}  // namespace prelie
