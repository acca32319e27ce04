#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prelie/scalar.hpp"

namespace prelie {

// One failing basis tuple. Indices are 1-based, matching the JSON formats.
struct Violation {
    std::vector<std::size_t> at;
    Vec residual;
};

// Outcome of a checker: verdict, every violated tuple with its residual,
// optional named sub-verdicts and free-form key/value details.
struct Report {
    std::string name;
    bool pass = true;
    std::vector<Violation> violations;
    std::vector<Report> parts;
    std::vector<std::pair<std::string, std::string>> details;

    explicit Report(std::string n = {}) : name(std::move(n)) {}

    void fail(std::vector<std::size_t> at, Vec residual);
    // Records a residual if it is nonzero; indices are 0-based and shifted here.
    void expect_zero(std::initializer_list<std::size_t> at0, Vec residual);
    void expect_zero(const std::vector<std::size_t>& at0, Vec residual);
    // Appends a sub-verdict; when it counts, a failing part fails this report.
    void add_part(Report part, bool counts = true);
    void detail(std::string key, std::string value);

    explicit operator bool() const noexcept { return pass; }
};

}  // namespace prelie
