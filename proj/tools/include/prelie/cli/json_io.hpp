#pragma once

#include <string>

#include <json.hpp>

#include "prelie/algebra.hpp"
#include "prelie/cochain.hpp"
#include "prelie/errors.hpp"
#include "prelie/matrix.hpp"
#include "prelie/nsprelie.hpp"
#include "prelie/report.hpp"

namespace prelie::cli {

using Json = nlohmann::ordered_json;

// Malformed input; the message starts with the JSON pointer of the failure.
class SchemaError : public Error {
public:
    SchemaError(const std::string& pointer, const std::string& what)
        : Error("SchemaError", pointer + ": " + what), pointer_(pointer) {}
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("IoError", what) {}
};

// Accessors that raise SchemaError with the pointer of the offending value.
const Json& require_key(const Json& j, const std::string& key, const std::string& ptr);
std::size_t read_count(const Json& j, const std::string& ptr);
std::string read_string(const Json& j, const std::string& ptr);

Json to_json(const Scalar& s);
Json to_json(const Vec& v);
Scalar scalar_from_json(const Json& j, const Field& f, const std::string& ptr);
Vec vec_from_json(const Json& j, const Field& f, std::size_t dim, const std::string& ptr);

// {"rows": n, "cols": m, "entries": [[...], ...]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& f, const std::string& ptr);

// {"dim": n, "product": [{"i":1,"j":3,"k":2,"c":"1"}, ...], "unit": [...]?, "labels": [...]?}
Json algebra_to_json(const PreLieAlgebra& a);
PreLieAlgebra algebra_from_json(const Json& j, const Field& f, const std::string& ptr);

// "regular", "zero", or {"dim": m, "L": [matrix entries per basis element], "R": [...]}
Json representation_to_json(const Representation& r);
Representation representation_from_json(const Json& j, const Field& f, const PreLieAlgebra* g,
                                        const std::string& ptr);

// {"degree": n, "dim_source": d, "dim_target": m, "values": [{"args": [...], "last": k, "v": [...]}, ...]}
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, const Field& f, const std::string& ptr);

// {"dim": n, "tri": {"i,j": {"k": "c"}}, "trl": {...}, "circ": {...}}
Json ns_to_json(const NSPreLie& ns);
NSPreLie ns_from_json(const Json& j, const Field& f, const std::string& ptr);

Json report_to_json(const Report& r);

}  // namespace prelie::cli
