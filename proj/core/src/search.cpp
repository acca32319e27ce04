#include "prelie/search.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "parallel.hpp"
#include "prelie/brackets.hpp"
#include "prelie/deformation.hpp"
#include "prelie/errors.hpp"
#include "prelie/generators.hpp"
#include "prelie/nsprelie.hpp"

namespace prelie {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("PRELIE_BUDGET")) {
        std::uint64_t v = 0;
        std::string_view s(env);
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && p == s.data() + s.size()) return v;
    }
    return 10'000'000;
}

std::vector<FixedEntry> parse_fixed_entries(const std::string& text, const Field& f) {
    std::vector<FixedEntry> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto comma = item.find(',');
        auto eq = item.find('=');
        if (comma == std::string::npos || eq == std::string::npos || eq < comma)
            throw ShapeError("fixed entry must look like row,col=value: " + item);
        auto to_index = [&](std::string s) {
            std::size_t v = 0;
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || p != s.data() + s.size() || v == 0)
                throw ShapeError("bad 1-based index in fixed entry: " + item);
            return v - 1;
        };
        FixedEntry e;
        e.row = to_index(item.substr(0, comma));
        e.col = to_index(item.substr(comma + 1, eq - comma - 1));
        std::string value = item.substr(eq + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        value.erase(value.find_last_not_of(" \t") + 1);
        e.value = f.parse_scalar(value);
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

std::pair<std::size_t, std::size_t> operator_shape(const SearchSpec& s) {
    return {s.context.dim_g(), s.context.dim_v()};
}
std::pair<std::size_t, std::size_t> endo_shape(const SearchSpec& s) { return {s.context.dim_g(), s.context.dim_g()}; }
std::pair<std::size_t, std::size_t> vector_shape(const SearchSpec& s) { return {s.context.dim_g(), 1}; }

void no_prepare(const SearchSpec&) {}
void require_cocycle(const SearchSpec& s) {
    validate_shapes(s.context.with_operator(Matrix(s.context.field(), s.context.dim_g(), s.context.dim_v())));
    require_two_cocycle(s.context.g, s.context.rep, s.context.H);
}

}  // namespace

PredicateRegistry::PredicateRegistry() {
    add("rcw-reynolds", {"RCW Reynolds operator V -> g", operator_shape, require_cocycle,
                         [](const SearchSpec& s, const Matrix& K) { return is_rcw_reynolds(s.context.with_operator(K)); }});
    add("maurer-cartan", {"Maurer-Cartan element of the derived brackets", operator_shape, require_cocycle,
                          [](const SearchSpec& s, const Matrix& K) {
                              return check_maurer_cartan(s.context.with_operator(K)).pass;
                          }});
    add("graph-subalgebra", {"graph of K closed in the twisted semidirect product", operator_shape, require_cocycle,
                             [](const SearchSpec& s, const Matrix& K) {
                                 return check_graph_subalgebra(s.context.with_operator(K)).pass;
                             }});
    add("nijenhuis", {"Nijenhuis operator on g", endo_shape, no_prepare,
                      [](const SearchSpec& s, const Matrix& N) { return check_nijenhuis(s.context.g, N).pass; }});
    add("derivation", {"derivation of g", endo_shape, no_prepare,
                       [](const SearchSpec& s, const Matrix& D) { return check_derivation(s.context.g, D).pass; }});
    add("weighted-reynolds", {"weighted Reynolds operator on g (needs lambda)", endo_shape,
                              [](const SearchSpec& s) {
                                  if (!s.lambda) throw ShapeError("weighted-reynolds search needs a lambda");
                              },
                              [](const SearchSpec& s, const Matrix& K) {
                                  return check_weighted_reynolds(s.context.g, K, *s.lambda).pass;
                              }});
    add("nijenhuis-element", {"Nijenhuis element x in g for the context operator", vector_shape,
                              [](const SearchSpec& s) {
                                  validate_shapes(s.context);
                                  if (!is_rcw_reynolds(s.context))
                                      throw UnverifiedOperator("context K fails the RCW Reynolds identity");
                              },
                              [](const SearchSpec& s, const Matrix& x) {
                                  return check_nijenhuis_element(s.context, x.column(0)).pass;
                              }});
}

PredicateRegistry& PredicateRegistry::instance() {
    static PredicateRegistry registry;
    return registry;
}

void PredicateRegistry::add(const std::string& id, PredicateInfo info) {
    for (auto& e : entries_)
        if (e.first == id) {
            e.second = std::move(info);
            return;
        }
    entries_.emplace_back(id, std::move(info));
}

const PredicateInfo& PredicateRegistry::at(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.first == id) return e.second;
    throw ShapeError("unknown predicate: " + id);
}

std::vector<std::string> PredicateRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
}

SearchResult exhaustive_search(const SearchSpec& spec) {
    const PredicateInfo& info = PredicateRegistry::instance().at(spec.predicate);
    auto [rows, cols] = info.shape(spec);
    if (spec.rows != rows || spec.cols != cols)
        throw ShapeError("unknown must be " + std::to_string(rows) + "x" + std::to_string(cols) + " for " +
                         spec.predicate);
    if (spec.domain.empty()) throw ShapeError("search domain is empty");
    const Field& F = spec.context.field();
    for (const auto& s : spec.domain)
        if (s.field() != F) throw FieldMismatch("domain scalars over a different field");

    Matrix base(F, rows, cols);
    std::vector<bool> is_fixed(rows * cols, false);
    for (const auto& e : spec.fixed) {
        if (e.row >= rows || e.col >= cols) throw ShapeError("fixed entry outside the unknown");
        if (e.value.field() != F) throw FieldMismatch("fixed entry over a different field");
        base.at(e.row, e.col) = e.value;
        is_fixed[e.row * cols + e.col] = true;
    }
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < rows * cols; ++k)
        if (!is_fixed[k]) free.push_back(k);

    std::uint64_t q = spec.domain.size();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < free.size(); ++k) {
        if (total > spec.budget / q)
            throw BudgetExceeded("search space exceeds the budget of " + std::to_string(spec.budget));
        total *= q;
    }
    if (total > spec.budget) throw BudgetExceeded("search space exceeds the budget of " + std::to_string(spec.budget));
    info.prepare(spec);

    std::size_t workers = spec.workers == 0 ? detail::default_workers() : spec.workers;
    SearchResult result;
    result.candidates = total;
    result.solutions = detail::parallel_collect<Matrix>(
        total, workers, [&](std::uint64_t begin, std::uint64_t end, std::vector<Matrix>& out) {
            Matrix m = base;
            for (std::uint64_t i = begin; i < end; ++i) {
                std::uint64_t idx = i;
                for (std::size_t k = free.size(); k-- > 0;) {
                    m.at(free[k] / cols, free[k] % cols) = spec.domain[idx % q];
                    idx /= q;
                }
                if (info.test(spec, m)) out.push_back(m);
            }
        });
    return result;
}

std::vector<Scalar> g3_polynomial_system(const Matrix& K) {
    if (K.rows() != 3 || K.cols() != 3) throw ShapeError("the g3 system needs a 3x3 operator");
    const Field& F = K.field();
    auto a = [&](int i, int j) { return K.at(i - 1, j - 1); };
    Scalar two = F.from_int(2);
    Scalar a12 = a(1, 2), a13 = a(1, 3), a22 = a(2, 2), a23 = a(2, 3);
    Scalar a31 = a(3, 1), a32 = a(3, 2), a33 = a(3, 3);
    return {
        a31 * a31 * a13,
        a31 * a31 - a31 * a31 * a23,
        a31 * a31 * a33,
        a32 * a32 * a13,
        a32 * a32 - a32 * a32 * a23,
        a32 * a32 * a33,
        a33 * a33 * a13 + two * a33 * a12,
        a33 * a33 - (a33 * a33 * a23 + two * a33 * a22),
        a33 * a33 * a33 + two * a33 * a32,
        a31 * a32 * a13,
        a31 * a32 - a31 * a32 * a23,
        a31 * a32 * a33,
        a31 * a33 * a13 + a31 * a12,
        a31 * a33 - (a31 * a33 * a23 + a31 * a22),
        a31 * a33 * a33 + a31 * a32,
        a32 * a33 * a13 + a32 * a12,
        a32 * a33 - (a32 * a33 * a23 + a32 * a22),
        a32 * a33 * a33 + a32 * a32,
    };
}

Report verify_polynomial_system(const Field& f, std::uint64_t budget, std::size_t workers) {
    if (f.is_rational()) throw InfiniteField("the polynomial system is verified over prime fields only");
    std::uint64_t p = f.characteristic();
    std::uint64_t total = 1;
    for (int k = 0; k < 9; ++k) {
        if (total > budget / p) throw BudgetExceeded("sweep exceeds the budget of " + std::to_string(budget));
        total *= p;
    }
    ReynoldsData base = g3_data(f, Matrix(f, 3, 3));
    require_two_cocycle(base.g, base.rep, base.H);

    struct Outcome {
        std::uint64_t index;
        bool predicate;
        bool system;
        bool third_row_zero;
    };
    auto outcomes = detail::parallel_collect<Outcome>(
        total, workers == 0 ? detail::default_workers() : workers,
        [&](std::uint64_t begin, std::uint64_t end, std::vector<Outcome>& out) {
            Matrix K(f, 3, 3);
            for (std::uint64_t i = begin; i < end; ++i) {
                std::uint64_t idx = i;
                for (int k = 8; k >= 0; --k) {
                    K.at(k / 3, k % 3) = Scalar(idx % p, p);
                    idx /= p;
                }
                bool pred = is_rcw_reynolds(base.with_operator(K));
                bool sys = true;
                for (const auto& s : g3_polynomial_system(K))
                    if (!s.is_zero()) sys = false;
                bool zero_row = K.at(2, 0).is_zero() && K.at(2, 1).is_zero() && K.at(2, 2).is_zero();
                out.push_back({i, pred, sys, zero_row});
            }
        });

    Report r("polynomial-system");
    Report eq("equivalence"), slice("third-row-zero");
    std::uint64_t solutions = 0, slice_count = 0;
    for (const auto& o : outcomes) {
        solutions += o.predicate;
        if (o.predicate != o.system) {
            std::uint64_t idx = o.index;
            Vec digits(9);
            for (int k = 8; k >= 0; --k) {
                digits[k] = Scalar(idx % p, p);
                idx /= p;
            }
            eq.fail({o.index + 1}, digits);
        }
        if (o.third_row_zero) {
            ++slice_count;
            if (!o.predicate || !o.system) slice.fail({o.index + 1}, {});
        }
    }
    r.add_part(std::move(eq));
    r.add_part(std::move(slice));
    r.detail("field", f.name());
    r.detail("candidates", std::to_string(total));
    r.detail("solutions", std::to_string(solutions));
    r.detail("third_row_zero", std::to_string(slice_count));
    r.detail("equations", "18");
    return r;
}

}  // namespace prelie
