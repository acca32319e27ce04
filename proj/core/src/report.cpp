#include "prelie/report.hpp"

namespace prelie {

void Report::fail(std::vector<std::size_t> at, Vec residual) {
    pass = false;
    violations.push_back({std::move(at), std::move(residual)});
}

void Report::expect_zero(std::initializer_list<std::size_t> at0, Vec residual) {
    expect_zero(std::vector<std::size_t>(at0), std::move(residual));
}

void Report::expect_zero(const std::vector<std::size_t>& at0, Vec residual) {
    if (is_zero(residual)) return;
    std::vector<std::size_t> at;
    at.reserve(at0.size());
    for (auto i : at0) at.push_back(i + 1);
    fail(std::move(at), std::move(residual));
}

void Report::add_part(Report part, bool counts) {
    if (counts && !part.pass) pass = false;
    parts.push_back(std::move(part));
}

void Report::detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
}

}  // namespace prelie
