#include "prelie/cli/bundle.hpp"

#include <fstream>
#include <sstream>

namespace prelie::cli {

namespace {

const Json* find_alias(const Json& j, const char* key, const char* alias, std::string& name) {
    if (j.contains(key)) {
        name = key;
        return &j[key];
    }
    if (j.contains(alias)) {
        name = alias;
        return &j[alias];
    }
    return nullptr;
}

std::string section(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }

}  // namespace

const PreLieAlgebra& Bundle::require_algebra() const {
    if (!algebra) throw SchemaError("/algebra", "missing required section");
    return *algebra;
}

const Representation& Bundle::require_representation() const {
    if (!representation) throw SchemaError("/representation", "missing required section");
    return *representation;
}

const NSPreLie& Bundle::require_ns() const {
    if (!ns) throw SchemaError("/nsprelie", "missing required section");
    return *ns;
}

ReynoldsData Bundle::data() const {
    const PreLieAlgebra& g = require_algebra();
    const Representation& rep = require_representation();
    Cochain H = cocycle ? *cocycle : Cochain(field, 2, g.dim(), rep.dim_v());
    Matrix K = operator_k ? *operator_k : Matrix(field, g.dim(), rep.dim_v());
    return ReynoldsData{g, rep, std::move(H), std::move(K)};
}

const Matrix& Bundle::require_operator(const std::string& name) const {
    if (name == "K" && operator_k) return *operator_k;
    auto it = operators.find(name);
    if (it == operators.end()) throw SchemaError("/operators/" + name, "missing required operator");
    return it->second;
}

const Vec& Bundle::require_vector(const std::string& name) const {
    auto it = vectors.find(name);
    if (it == vectors.end()) throw SchemaError("/vectors/" + name, "missing required vector");
    return it->second;
}

const Scalar& Bundle::require_scalar(const std::string& name) const {
    auto it = scalars.find(name);
    if (it == scalars.end()) throw SchemaError("/scalars/" + name, "missing required scalar");
    return it->second;
}

const Cochain& Bundle::require_cochain(const std::string& name) const {
    auto it = cochains.find(name);
    if (it == cochains.end()) throw SchemaError("/cochains/" + name, "missing required cochain");
    return it->second;
}

Bundle parse_bundle(const Json& j, const std::optional<Field>& field_override, const std::string& ptr) {
    if (!j.is_object()) throw SchemaError(ptr.empty() ? "/" : ptr, "expected an object");
    Bundle b;
    std::string declared = read_string(require_key(j, "field", ptr), section(ptr, "field"));
    if (declared == "generic") {
        b.field = field_override.value_or(Field::rationals());
    } else {
        try {
            b.field = Field::parse(declared);
        } catch (const InvalidScalar& e) {
            throw SchemaError(section(ptr, "field"), e.what());
        }
        if (field_override && *field_override != b.field)
            throw FieldMismatch(section(ptr, "field") + " declares " + b.field.name() + " but --field requests " +
                                field_override->name());
    }
    const Field& F = b.field;
    if (j.contains("comment")) b.comment = read_string(j["comment"], section(ptr, "comment"));
    if (j.contains("algebra")) b.algebra = algebra_from_json(j["algebra"], F, section(ptr, "algebra"));

    std::string name;
    if (const Json* r = find_alias(j, "representation", "rep", name))
        b.representation = representation_from_json(*r, F, b.algebra ? &*b.algebra : nullptr, section(ptr, name));
    if (const Json* h = find_alias(j, "cocycleH", "H", name)) {
        b.cocycle = cochain_from_json(*h, F, section(ptr, name));
        if (b.cocycle->degree() != 2) throw SchemaError(section(ptr, name) + "/degree", "H must have degree 2");
        if (b.algebra && b.cocycle->dim_source() != b.algebra->dim())
            throw FieldMismatch(section(ptr, name) + " has dim_source " + std::to_string(b.cocycle->dim_source()) +
                                " but " + section(ptr, "algebra") + " has dim " + std::to_string(b.algebra->dim()));
        if (b.representation && b.cocycle->dim_target() != b.representation->dim_v())
            throw FieldMismatch(section(ptr, name) + " has dim_target " + std::to_string(b.cocycle->dim_target()) +
                                " but " + section(ptr, "representation") + " has dim " +
                                std::to_string(b.representation->dim_v()));
    }
    if (const Json* k = find_alias(j, "operatorK", "K", name)) {
        b.operator_k = matrix_from_json(*k, F, section(ptr, name));
        if (b.algebra && b.operator_k->rows() != b.algebra->dim())
            throw FieldMismatch(section(ptr, name) + " has " + std::to_string(b.operator_k->rows()) + " rows but " +
                                section(ptr, "algebra") + " has dim " + std::to_string(b.algebra->dim()));
        if (b.representation && b.operator_k->cols() != b.representation->dim_v())
            throw FieldMismatch(section(ptr, name) + " has " + std::to_string(b.operator_k->cols()) + " cols but " +
                                section(ptr, "representation") + " has dim " +
                                std::to_string(b.representation->dim_v()));
    }
    auto named = [&](const char* key, auto&& parse_one) {
        if (!j.contains(key)) return;
        const Json& s = j[key];
        std::string q = section(ptr, key);
        if (!s.is_object()) throw SchemaError(q, "expected an object of named entries");
        for (const auto& [n, v] : s.items()) parse_one(n, v, q + "/" + n);
    };
    named("operators", [&](const std::string& n, const Json& v, const std::string& q) {
        b.operators.emplace(n, matrix_from_json(v, F, q));
    });
    named("vectors", [&](const std::string& n, const Json& v, const std::string& q) {
        if (!v.is_array()) throw SchemaError(q, "expected an array of scalars");
        b.vectors.emplace(n, vec_from_json(v, F, v.size(), q));
    });
    named("scalars", [&](const std::string& n, const Json& v, const std::string& q) {
        b.scalars.emplace(n, scalar_from_json(v, F, q));
    });
    named("cochains", [&](const std::string& n, const Json& v, const std::string& q) {
        b.cochains.emplace(n, cochain_from_json(v, F, q));
    });
    if (j.contains("nsprelie")) b.ns = ns_from_json(j["nsprelie"], F, section(ptr, "nsprelie"));
    if (j.contains("target")) {
        Json t = j["target"];
        if (t.is_object() && !t.contains("field")) t["field"] = F.name();
        b.target = std::make_shared<Bundle>(parse_bundle(t, F, section(ptr, "target")));
    }
    if (j.contains("series")) {
        std::string q = section(ptr, "series");
        const Json& c = require_key(j["series"], "coefficients", q);
        if (!c.is_array()) throw SchemaError(q + "/coefficients", "expected an array of operators");
        for (std::size_t i = 0; i < c.size(); ++i)
            b.series.push_back(matrix_from_json(c[i], F, q + "/coefficients/" + std::to_string(i)));
    }
    return b;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("/", std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

Bundle load_bundle(const std::string& path, const std::optional<Field>& field_override) {
    return parse_bundle(read_json_file(path), field_override);
}

}  // namespace prelie::cli
