#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "prelie/algebra.hpp"
#include "prelie/matrix.hpp"
#include "prelie/report.hpp"
#include "prelie/scalar.hpp"

namespace prelie {

std::uint64_t binomial(std::size_t n, std::size_t k);

// A permutation sigma in S_n that is increasing on each block of the pattern.
// perm[k] = sigma(k+1) - 1, i.e. the argument placed in slot k.
struct Unshuffle {
    std::vector<std::size_t> perm;
    int sign = 1;
};

// All unshuffles of the block pattern in lexicographic order of perm.
// The count is the multinomial coefficient of the pattern.
std::vector<Unshuffle> enumerate_unshuffles(const std::vector<std::size_t>& blocks);

// Sign of the permutation sorting idx, or 0 when idx has a repeated entry.
int sort_with_sign(std::vector<std::size_t>& idx);

// Strictly increasing k-subsets of {0..n-1} in lexicographic order.
class CombinationTable {
public:
    static std::shared_ptr<const CombinationTable> get(std::size_t n, std::size_t k);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    const std::vector<std::size_t>& operator[](std::size_t r) const { return tuples_[r]; }
    // Rank of a strictly increasing tuple.
    std::size_t rank(const std::size_t* tuple) const;

private:
    CombinationTable(std::size_t n, std::size_t k);
    std::size_t n_;
    std::size_t k_;
    std::vector<std::vector<std::size_t>> tuples_;
};

// f in Hom(wedge^{n-1} X (x) X, Y): multilinear in n arguments, antisymmetric in
// the first n-1. Values are stored for strictly increasing first blocks; a
// "slot" is (tuple rank, last index) flattened as rank * dim_source + last.
class Cochain {
public:
    Cochain() = default;
    Cochain(const Field& f, std::size_t degree, std::size_t dim_source, std::size_t dim_target);

    static Cochain from_map(const LinearMap& m);
    LinearMap to_map() const;
    // The j-th element of the canonical basis (slot-major, then target coordinate).
    static Cochain basis_element(const Field& f, std::size_t degree, std::size_t dim_source,
                                 std::size_t dim_target, std::size_t j);

    const Field& field() const noexcept { return field_; }
    std::size_t degree() const noexcept { return degree_; }
    std::size_t dim_source() const noexcept { return dsrc_; }
    std::size_t dim_target() const noexcept { return dtgt_; }

    std::size_t tuple_count() const { return tuples_->size(); }
    std::size_t slot_count() const { return values_.size(); }
    std::size_t flat_size() const { return values_.size() * dtgt_; }
    const std::vector<std::size_t>& tuple(std::size_t r) const { return (*tuples_)[r]; }
    std::size_t slot(const std::vector<std::size_t>& increasing_first, std::size_t last) const;

    const Vec& value(std::size_t slot) const { return values_[slot]; }
    Vec& value(std::size_t slot) { return values_[slot]; }

    // Sets f(first..., last) = v; the first block may be in any order and the
    // antisymmetry sign is applied. Throws ShapeError on a repeated index.
    void set(std::vector<std::size_t> first, std::size_t last, const Vec& v);

    // Value on basis vectors given by (0-based) indices, in any order.
    Vec eval_basis(std::vector<std::size_t> idx) const;
    // Multilinear evaluation on arbitrary coordinate vectors.
    Vec eval(const std::vector<Vec>& args) const;
    void accumulate(const std::vector<Vec>& args, const Scalar& coeff, Vec& out) const;

    Vec flatten() const;
    static Cochain unflatten(const Field& f, std::size_t degree, std::size_t dim_source, std::size_t dim_target,
                             const Vec& flat);

    bool is_zero() const;
    Cochain lifted() const;
    Cochain reduced(const Field& f) const;

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Scalar& s, const Cochain& c);
    friend bool operator==(const Cochain& a, const Cochain& b);
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

private:
    void check_compatible(const Cochain& o) const;
    void accumulate_basis(std::vector<std::size_t>& idx, const Scalar& coeff, Vec& out) const;

    Field field_;
    std::size_t degree_ = 0;
    std::size_t dsrc_ = 0;
    std::size_t dtgt_ = 0;
    std::shared_ptr<const CombinationTable> tuples_;
    std::vector<Vec> values_;
};

struct CohomologyReport {
    std::size_t degree = 0;
    std::size_t dimZ = 0;
    std::size_t dimB = 0;
    std::size_t dimH = 0;
};

// The coboundary of a cochain f in C^n(g, V), term by term:
//   sum_i (-1)^{i+1} L_{x_i} f(.. ^x_i .. x_{n+1})
// + sum_i (-1)^{i+1} R_{x_{n+1}} f(.. ^x_i .. x_n, x_i)
// - sum_i (-1)^{i+1} f(.. ^x_i .. x_n, x_i . x_{n+1})
// + sum_{i<j<=n} (-1)^{i+j} f([x_i, x_j], .. ^x_i .. ^x_j .. x_{n+1}).
Cochain coboundary(const PreLieAlgebra& a, const Representation& rep, const Cochain& f);
// The 2-cocycle identity on basis triples, cross-checked against coboundary(H) = 0.
Report check_two_cocycle(const PreLieAlgebra& a, const Representation& rep, const Cochain& H);
// Matrix of the coboundary C^n -> C^{n+1} in the canonical flattened bases.
Matrix coboundary_matrix(const PreLieAlgebra& a, const Representation& rep, std::size_t degree);
// dim Z^n, dim B^n (zero at n = 1) and dim H^n.
CohomologyReport cohomology(const PreLieAlgebra& a, const Representation& rep, std::size_t degree);

void require_two_cocycle(const PreLieAlgebra& a, const Representation& rep, const Cochain& H);

}  // namespace prelie
