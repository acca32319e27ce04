#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prelie/cli/json_io.hpp"
#include "prelie/reynolds.hpp"

namespace prelie::cli {

// A parsed input file. Top-level keys: "field" (required: "q", "f<p>" or
// "generic"), "comment", "algebra", "representation" (alias "rep"),
// "cocycleH" (alias "H"), "operatorK" (alias "K"), and the named sections
// "operators", "vectors", "scalars", "cochains", "nsprelie", "target"
// (a nested bundle) and "series" ({"coefficients": [operator, ...]}).
struct Bundle {
    Field field;
    std::string comment;
    std::optional<PreLieAlgebra> algebra;
    std::optional<Representation> representation;
    std::optional<Cochain> cocycle;
    std::optional<Matrix> operator_k;
    std::map<std::string, Matrix> operators;
    std::map<std::string, Vec> vectors;
    std::map<std::string, Scalar> scalars;
    std::map<std::string, Cochain> cochains;
    std::optional<NSPreLie> ns;
    std::shared_ptr<Bundle> target;
    std::vector<Matrix> series;

    const PreLieAlgebra& require_algebra() const;
    const Representation& require_representation() const;
    const NSPreLie& require_ns() const;
    // Requires algebra and representation; H and K default to zero.
    ReynoldsData data() const;
    const Matrix& require_operator(const std::string& name) const;
    const Vec& require_vector(const std::string& name) const;
    const Scalar& require_scalar(const std::string& name) const;
    const Cochain& require_cochain(const std::string& name) const;
};

// field_override applies to "generic" bundles; a declared field that differs
// from the override is a FieldMismatch.
Bundle parse_bundle(const Json& j, const std::optional<Field>& field_override, const std::string& ptr = "");
Bundle load_bundle(const std::string& path, const std::optional<Field>& field_override);
Json read_json_file(const std::string& path);

}  // namespace prelie::cli
