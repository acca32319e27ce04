#include "prelie/cochain.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "prelie/errors.hpp"

namespace prelie {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int sort_with_sign(std::vector<std::size_t>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    return sign;
}

namespace {

int permutation_sign(std::vector<std::size_t> p) {
    int s = sort_with_sign(p);
    return s;
}

void unshuffle_rec(const std::vector<std::size_t>& blocks, std::size_t b, std::vector<bool>& used,
                   std::vector<std::size_t>& perm, std::vector<Unshuffle>& out) {
    if (b == blocks.size()) {
        out.push_back({perm, permutation_sign(perm)});
        return;
    }
    std::vector<std::size_t> avail;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) avail.push_back(i);
    std::size_t k = blocks[b];
    if (k > avail.size()) return;
    // Enumerate k-subsets of avail in lexicographic order.
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        for (std::size_t t = 0; t < k; ++t) {
            used[avail[pick[t]]] = true;
            perm.push_back(avail[pick[t]]);
        }
        unshuffle_rec(blocks, b + 1, used, perm, out);
        for (std::size_t t = 0; t < k; ++t) {
            used[avail[pick[t]]] = false;
            perm.pop_back();
        }
        std::size_t t = k;
        while (t > 0 && pick[t - 1] == avail.size() - k + t - 1) --t;
        if (t == 0) break;
        ++pick[t - 1];
        for (std::size_t u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
    }
}

}  // namespace

std::vector<Unshuffle> enumerate_unshuffles(const std::vector<std::size_t>& blocks) {
    std::size_t n = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
    std::vector<bool> used(n, false);
    std::vector<std::size_t> perm;
    std::vector<Unshuffle> out;
    unshuffle_rec(blocks, 0, used, perm, out);
    return out;
}

CombinationTable::CombinationTable(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k > n) return;
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        tuples_.push_back(c);
        std::size_t t = k;
        while (t > 0 && c[t - 1] == n - k + t - 1) --t;
        if (t == 0) break;
        ++c[t - 1];
        for (std::size_t u = t; u < k; ++u) c[u] = c[u - 1] + 1;
    }
}

std::shared_ptr<const CombinationTable> CombinationTable::get(std::size_t n, std::size_t k) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const CombinationTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, k}];
    if (!slot) slot.reset(new CombinationTable(n, k));
    return slot;
}

std::size_t CombinationTable::rank(const std::size_t* tuple) const {
    std::size_t r = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < k_; ++i) {
        for (std::size_t j = start; j < tuple[i]; ++j) r += binomial(n_ - 1 - j, k_ - 1 - i);
        start = tuple[i] + 1;
    }
    return r;
}

Cochain::Cochain(const Field& f, std::size_t degree, std::size_t dim_source, std::size_t dim_target)
    : field_(f), degree_(degree), dsrc_(dim_source), dtgt_(dim_target) {
    if (degree == 0) throw ShapeError("cochain degree must be at least 1");
    tuples_ = CombinationTable::get(dim_source, degree - 1);
    values_.assign(tuples_->size() * dim_source, zero_vec(f, dim_target));
}

Cochain Cochain::from_map(const LinearMap& m) {
    Cochain c(m.field(), 1, m.cols(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) c.values_[j] = m.column(j);
    return c;
}

LinearMap Cochain::to_map() const {
    if (degree_ != 1) throw ShapeError("only degree-1 cochains are linear maps");
    return Matrix::from_columns(field_, values_, dtgt_);
}

Cochain Cochain::basis_element(const Field& f, std::size_t degree, std::size_t dim_source, std::size_t dim_target,
                               std::size_t j) {
    Cochain c(f, degree, dim_source, dim_target);
    if (j >= c.flat_size()) throw ShapeError("cochain basis index out of range");
    c.values_[j / dim_target][j % dim_target] = f.one();
    return c;
}

std::size_t Cochain::slot(const std::vector<std::size_t>& increasing_first, std::size_t last) const {
    return tuples_->rank(increasing_first.data()) * dsrc_ + last;
}

void Cochain::set(std::vector<std::size_t> first, std::size_t last, const Vec& v) {
    if (first.size() + 1 != degree_) throw ShapeError("wrong number of arguments for cochain value");
    if (v.size() != dtgt_) throw ShapeError("cochain value has wrong dimension");
    if (last >= dsrc_) throw ShapeError("cochain argument index out of range");
    for (auto i : first)
        if (i >= dsrc_) throw ShapeError("cochain argument index out of range");
    int s = sort_with_sign(first);
    if (s == 0) throw ShapeError("repeated index in antisymmetric block");
    values_[slot(first, last)] = s > 0 ? v : -v;
}

void Cochain::accumulate_basis(std::vector<std::size_t>& idx, const Scalar& coeff, Vec& out) const {
    std::size_t last = idx.back();
    idx.pop_back();
    int s = sort_with_sign(idx);
    if (s != 0) {
        const Vec& v = values_[tuples_->rank(idx.data()) * dsrc_ + last];
        axpy(out, s > 0 ? coeff : -coeff, v);
    }
}

Vec Cochain::eval_basis(std::vector<std::size_t> idx) const {
    if (idx.size() != degree_) throw ShapeError("wrong number of cochain arguments");
    Vec out = zero_vec(field_, dtgt_);
    accumulate_basis(idx, field_.one(), out);
    return out;
}

void Cochain::accumulate(const std::vector<Vec>& args, const Scalar& coeff, Vec& out) const {
    if (args.size() != degree_) throw ShapeError("wrong number of cochain arguments");
    std::vector<std::vector<std::size_t>> support(degree_);
    for (std::size_t a = 0; a < degree_; ++a) {
        if (args[a].size() != dsrc_) throw ShapeError("cochain argument has wrong dimension");
        for (std::size_t i = 0; i < dsrc_; ++i)
            if (!args[a][i].is_zero()) support[a].push_back(i);
        if (support[a].empty()) return;
    }
    std::vector<std::size_t> pos(degree_, 0);
    std::vector<std::size_t> idx(degree_);
    while (true) {
        Scalar c = coeff;
        for (std::size_t a = 0; a < degree_; ++a) {
            idx[a] = support[a][pos[a]];
            c *= args[a][idx[a]];
        }
        std::vector<std::size_t> work = idx;
        accumulate_basis(work, c, out);
        std::size_t a = degree_;
        while (a > 0) {
            --a;
            if (++pos[a] < support[a].size()) break;
            pos[a] = 0;
            if (a == 0) return;
        }
        if (degree_ == 0) return;
    }
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
    Vec out = zero_vec(field_, dtgt_);
    accumulate(args, field_.one(), out);
    return out;
}

Vec Cochain::flatten() const {
    Vec flat;
    flat.reserve(flat_size());
    for (const auto& v : values_) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

Cochain Cochain::unflatten(const Field& f, std::size_t degree, std::size_t dim_source, std::size_t dim_target,
                           const Vec& flat) {
    Cochain c(f, degree, dim_source, dim_target);
    if (flat.size() != c.flat_size()) throw ShapeError("flattened cochain has wrong length");
    for (std::size_t s = 0; s < c.values_.size(); ++s)
        for (std::size_t k = 0; k < dim_target; ++k) c.values_[s][k] = flat[s * dim_target + k];
    return c;
}

bool Cochain::is_zero() const {
    for (const auto& v : values_)
        if (!prelie::is_zero(v)) return false;
    return true;
}

Cochain Cochain::lifted() const {
    Cochain c(Field::rationals(), degree_, dsrc_, dtgt_);
    for (std::size_t s = 0; s < values_.size(); ++s) c.values_[s] = lift(values_[s]);
    return c;
}

Cochain Cochain::reduced(const Field& f) const {
    Cochain c(f, degree_, dsrc_, dtgt_);
    for (std::size_t s = 0; s < values_.size(); ++s) c.values_[s] = reduce(values_[s], f);
    return c;
}

void Cochain::check_compatible(const Cochain& o) const {
    if (degree_ != o.degree_ || dsrc_ != o.dsrc_ || dtgt_ != o.dtgt_)
        throw ShapeError("cochains of different shapes");
}

Cochain& Cochain::operator+=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t s = 0; s < values_.size(); ++s)
        for (std::size_t i = 0; i < dtgt_; ++i)
            if (!o.values_[s][i].is_zero()) values_[s][i] += o.values_[s][i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t s = 0; s < values_.size(); ++s)
        for (std::size_t i = 0; i < dtgt_; ++i)
            if (!o.values_[s][i].is_zero()) values_[s][i] -= o.values_[s][i];
    return *this;
}

Cochain operator*(const Scalar& s, const Cochain& c) {
    Cochain out = c;
    if (s.is_one()) return out;
    for (auto& v : out.values_)
        for (auto& x : v)
            if (!x.is_zero()) x *= s;
    return out;
}

bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.dsrc_ == b.dsrc_ && a.dtgt_ == b.dtgt_ && a.field_ == b.field_ &&
           a.values_ == b.values_;
}

namespace {

std::vector<Vec> basis_args(const Field& f, std::size_t d, const std::vector<std::size_t>& idx) {
    std::vector<Vec> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(unit_vec(f, d, i));
    return out;
}

}  // namespace

Cochain coboundary(const PreLieAlgebra& a, const Representation& rep, const Cochain& f) {
    std::size_t d = a.dim();
    std::size_t m = rep.dim_v();
    if (f.dim_source() != d || f.dim_target() != m || rep.dim_g() != d)
        throw ShapeError("coboundary: cochain shape does not match algebra and representation");
    const Field& F = a.field();
    std::size_t n = f.degree();
    Cochain out(F, n + 1, d, m);
    for (std::size_t s = 0; s < out.slot_count(); ++s) {
        std::vector<std::size_t> x = out.tuple(s / d);
        x.push_back(s % d);  // x[0..n-1] first block, x[n] the last argument
        Vec acc = zero_vec(F, m);
        for (std::size_t i = 0; i < n; ++i) {
            Scalar sign = F.from_int(i % 2 == 0 ? 1 : -1);  // (-1)^{(i+1)+1} with 1-based i+1
            std::vector<std::size_t> rest;
            for (std::size_t k = 0; k <= n; ++k)
                if (k != i) rest.push_back(x[k]);
            axpy(acc, sign, rep.L(x[i]).apply(f.eval_basis(rest)));

            std::vector<std::size_t> moved;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) moved.push_back(x[k]);
            moved.push_back(x[i]);
            axpy(acc, sign, rep.R(x[n]).apply(f.eval_basis(moved)));

            std::vector<Vec> args = basis_args(F, d, std::vector<std::size_t>(moved.begin(), moved.end() - 1));
            args.push_back(a.product(x[i], x[n]));
            f.accumulate(args, -sign, acc);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Scalar sign = F.from_int((i + j) % 2 == 0 ? 1 : -1);
                std::vector<Vec> args;
                args.push_back(a.product(x[i], x[j]) - a.product(x[j], x[i]));
                for (std::size_t k = 0; k <= n; ++k)
                    if (k != i && k != j) args.push_back(unit_vec(F, d, x[k]));
                f.accumulate(args, sign, acc);
            }
        }
        out.value(s) = std::move(acc);
    }
    return out;
}

Report check_two_cocycle(const PreLieAlgebra& a, const Representation& rep, const Cochain& H) {
    if (H.degree() != 2 || H.dim_source() != a.dim() || H.dim_target() != rep.dim_v())
        throw ShapeError("2-cocycle must be a bilinear map g x g -> V");
    const Field& F = a.field();
    std::size_t d = a.dim();
    Report explicit_form("identity");
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                Vec x = unit_vec(F, d, i), y = unit_vec(F, d, j), z = unit_vec(F, d, k);
                Vec r = rep.L(i).apply(H.eval_basis({j, k})) - rep.L(j).apply(H.eval_basis({i, k})) +
                        rep.R(k).apply(H.eval_basis({j, i})) - rep.R(k).apply(H.eval_basis({i, j})) -
                        H.eval({y, a.product(i, k)}) + H.eval({x, a.product(j, k)}) -
                        H.eval({a.commutator(x, y), z});
                explicit_form.expect_zero({i, j, k}, std::move(r));
            }
        }
    }
    Report via_coboundary("coboundary");
    Cochain dH = coboundary(a, rep, H);
    for (std::size_t s = 0; s < dH.slot_count(); ++s) {
        std::vector<std::size_t> at = dH.tuple(s / d);
        at.push_back(s % d);
        via_coboundary.expect_zero(at, dH.value(s));
    }
    if (explicit_form.pass != via_coboundary.pass)
        throw std::logic_error("2-cocycle identity and coboundary disagree");
    Report out("cocycle");
    out.add_part(std::move(explicit_form));
    out.add_part(std::move(via_coboundary));
    return out;
}

Matrix coboundary_matrix(const PreLieAlgebra& a, const Representation& rep, std::size_t degree) {
    const Field& F = a.field();
    std::size_t d = a.dim();
    std::size_t m = rep.dim_v();
    Cochain probe(F, degree, d, m);
    Cochain image(F, degree + 1, d, m);
    Matrix M(F, image.flat_size(), probe.flat_size());
    for (std::size_t j = 0; j < probe.flat_size(); ++j)
        M.set_column(j, coboundary(a, rep, Cochain::basis_element(F, degree, d, m, j)).flatten());
    return M;
}

CohomologyReport cohomology(const PreLieAlgebra& a, const Representation& rep, std::size_t degree) {
    if (degree == 0) throw ShapeError("cohomology degree must be at least 1");
    CohomologyReport r;
    r.degree = degree;
    Matrix M = coboundary_matrix(a, rep, degree);
    r.dimZ = M.cols() - rank(M);
    r.dimB = degree == 1 ? 0 : rank(coboundary_matrix(a, rep, degree - 1));
    r.dimH = r.dimZ - r.dimB;
    return r;
}

void require_two_cocycle(const PreLieAlgebra& a, const Representation& rep, const Cochain& H) {
    if (!check_two_cocycle(a, rep, H)) throw UnverifiedCocycle("H fails the 2-cocycle identity");
}

}  // namespace prelie
