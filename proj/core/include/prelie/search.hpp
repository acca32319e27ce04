#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prelie/matrix.hpp"
#include "prelie/report.hpp"
#include "prelie/reynolds.hpp"

namespace prelie {

// Budget from the PRELIE_BUDGET environment variable, else 10^7.
std::uint64_t default_budget();

struct FixedEntry {
    std::size_t row = 0;  // 0-based
    std::size_t col = 0;
    Scalar value;
};
// Parses "3,1=0;3,2=1/2" (1-based row,col); throws ShapeError on bad syntax.
std::vector<FixedEntry> parse_fixed_entries(const std::string& text, const Field& f);

struct SearchSpec {
    std::string predicate;
    // Algebra, representation and H; K is the operator for predicates that
    // need one (nijenhuis-element) and is ignored otherwise.
    ReynoldsData context;
    std::vector<Scalar> domain;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<FixedEntry> fixed;
    std::optional<Scalar> lambda;  // weighted-reynolds
    std::uint64_t budget = default_budget();
    std::size_t workers = 0;  // 0 = hardware concurrency
};

struct SearchResult {
    std::vector<Matrix> solutions;  // lexicographic order of the enumeration
    std::uint64_t candidates = 0;
    std::uint64_t count() const noexcept { return solutions.size(); }
};

// A searchable predicate: the expected unknown shape for a context and the test.
struct PredicateInfo {
    std::string description;
    std::function<std::pair<std::size_t, std::size_t>(const SearchSpec&)> shape;
    // Called once before the enumeration; throws when the context is unusable.
    std::function<void(const SearchSpec&)> prepare;
    std::function<bool(const SearchSpec&, const Matrix&)> test;
};

class PredicateRegistry {
public:
    static PredicateRegistry& instance();
    void add(const std::string& id, PredicateInfo info);
    const PredicateInfo& at(const std::string& id) const;  // ShapeError if unknown
    std::vector<std::string> ids() const;

private:
    PredicateRegistry();
    std::vector<std::pair<std::string, PredicateInfo>> entries_;
};

// Lexicographic enumeration of all matrices with entries from the domain
// (first free entry in row-major order is the most significant digit).
// Throws BudgetExceeded, ShapeError.
SearchResult exhaustive_search(const SearchSpec& spec);

// The displayed polynomial system for operators on the 3-dimensional algebra
// e3.e3 = e2 with H(e3, e3) = e3 (lhs - rhs of each of its 18 equations).
std::vector<Scalar> g3_polynomial_system(const Matrix& K);
// Exhaustive comparison of the Reynolds predicate with the polynomial system
// over F_p. Parts: "equivalence" and "third-row-zero".
Report verify_polynomial_system(const Field& f, std::uint64_t budget = default_budget(), std::size_t workers = 0);

}  // namespace prelie
