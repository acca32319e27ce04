#include "prelie/cli/json_io.hpp"

#include <charconv>

namespace prelie::cli {

const Json& require_key(const Json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_object()) throw SchemaError(ptr.empty() ? "/" : ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(ptr + "/" + key, "missing required key");
    return *it;
}

std::size_t read_count(const Json& j, const std::string& ptr) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw SchemaError(ptr, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::string read_string(const Json& j, const std::string& ptr) {
    if (!j.is_string()) throw SchemaError(ptr, "expected a string");
    return j.get<std::string>();
}

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(to_json(s));
    return a;
}

Scalar scalar_from_json(const Json& j, const Field& f, const std::string& ptr) {
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer())
        text = std::to_string(j.get<long long>());
    else
        throw SchemaError(ptr, "expected a scalar string");
    try {
        return f.parse_scalar(text);
    } catch (const InvalidScalar& e) {
        throw SchemaError(ptr, e.what());
    } catch (const FieldMismatch& e) {
        throw FieldMismatch(ptr + ": " + e.what());
    }
}

Vec vec_from_json(const Json& j, const Field& f, std::size_t dim, const std::string& ptr) {
    if (!j.is_array()) throw SchemaError(ptr, "expected an array of scalars");
    if (j.size() != dim)
        throw SchemaError(ptr, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(j[i], f, ptr + "/" + std::to_string(i)));
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(rows);
    return j;
}

namespace {

Matrix entries_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& ptr) {
    if (!j.is_array()) throw SchemaError(ptr, "expected an array of rows");
    if (j.size() != rows) throw SchemaError(ptr, "expected " + std::to_string(rows) + " rows");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vec row = vec_from_json(j[r], f, cols, ptr + "/" + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

std::size_t read_index(const Json& j, std::size_t dim, const std::string& ptr) {
    std::size_t i = read_count(j, ptr);
    if (i == 0 || i > dim) throw SchemaError(ptr, "index out of range 1.." + std::to_string(dim));
    return i - 1;
}

}  // namespace

Matrix matrix_from_json(const Json& j, const Field& f, const std::string& ptr) {
    std::size_t rows = read_count(require_key(j, "rows", ptr), ptr + "/rows");
    std::size_t cols = read_count(require_key(j, "cols", ptr), ptr + "/cols");
    return entries_from_json(require_key(j, "entries", ptr), f, rows, cols, ptr + "/entries");
}

Json algebra_to_json(const PreLieAlgebra& a) {
    Json prod = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Scalar& c = a.product(i, j)[k];
                if (c.is_zero()) continue;
                Json e;
                e["i"] = i + 1;
                e["j"] = j + 1;
                e["k"] = k + 1;
                e["c"] = to_json(c);
                prod.push_back(std::move(e));
            }
    Json j;
    j["dim"] = a.dim();
    j["product"] = std::move(prod);
    if (a.unit()) j["unit"] = to_json(*a.unit());
    if (!a.labels().empty()) j["labels"] = a.labels();
    return j;
}

PreLieAlgebra algebra_from_json(const Json& j, const Field& f, const std::string& ptr) {
    std::size_t dim = read_count(require_key(j, "dim", ptr), ptr + "/dim");
    PreLieAlgebra a(f, dim);
    if (j.contains("product")) {
        const Json& p = j["product"];
        if (!p.is_array()) throw SchemaError(ptr + "/product", "expected an array");
        for (std::size_t t = 0; t < p.size(); ++t) {
            std::string q = ptr + "/product/" + std::to_string(t);
            std::size_t i = read_index(require_key(p[t], "i", q), dim, q + "/i");
            std::size_t jj = read_index(require_key(p[t], "j", q), dim, q + "/j");
            std::size_t k = read_index(require_key(p[t], "k", q), dim, q + "/k");
            a.product(i, jj)[k] += scalar_from_json(require_key(p[t], "c", q), f, q + "/c");
        }
    }
    if (j.contains("unit")) a.set_unit(vec_from_json(j["unit"], f, dim, ptr + "/unit"));
    if (j.contains("labels")) {
        const Json& l = j["labels"];
        if (!l.is_array() || l.size() != dim) throw SchemaError(ptr + "/labels", "expected one label per basis element");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < dim; ++i) labels.push_back(read_string(l[i], ptr + "/labels/" + std::to_string(i)));
        a.set_labels(std::move(labels));
    }
    return a;
}

Json representation_to_json(const Representation& r) {
    auto side = [&](bool left) {
        Json a = Json::array();
        for (std::size_t i = 0; i < r.dim_g(); ++i) a.push_back(matrix_to_json(left ? r.L(i) : r.R(i))["entries"]);
        return a;
    };
    Json j;
    j["dim"] = r.dim_v();
    j["L"] = side(true);
    j["R"] = side(false);
    return j;
}

Representation representation_from_json(const Json& j, const Field& f, const PreLieAlgebra* g,
                                        const std::string& ptr) {
    if (j.is_string()) {
        std::string kind = j.get<std::string>();
        if (!g) throw SchemaError(ptr, "'" + kind + "' representation needs an algebra section");
        if (kind == "regular") return regular_representation(*g);
        if (kind == "zero") return Representation(f, g->dim(), 0);
        throw SchemaError(ptr, "unknown representation '" + kind + "'");
    }
    std::size_t m = read_count(require_key(j, "dim", ptr), ptr + "/dim");
    auto side = [&](const char* key) {
        std::vector<Matrix> out;
        if (!j.contains(key)) return out;
        const Json& a = j[key];
        std::string q = ptr + "/" + key;
        if (!a.is_array()) throw SchemaError(q, "expected an array of matrices");
        for (std::size_t i = 0; i < a.size(); ++i)
            out.push_back(entries_from_json(a[i], f, m, m, q + "/" + std::to_string(i)));
        return out;
    };
    std::vector<Matrix> L = side("L"), R = side("R");
    std::size_t n = std::max(L.size(), R.size());
    if (g) {
        if (n != 0 && n != g->dim())
            throw FieldMismatch("/representation has " + std::to_string(n) + " action matrices but /algebra has dim " +
                                std::to_string(g->dim()));
        n = g->dim();
    }
    if (L.empty()) L.assign(n, Matrix(f, m, m));
    if (R.empty()) R.assign(n, Matrix(f, m, m));
    if (L.size() != R.size()) throw SchemaError(ptr, "L and R must list the same number of matrices");
    if (n == 0) return Representation(f, 0, m);
    return Representation(std::move(L), std::move(R));
}

Json cochain_to_json(const Cochain& c) {
    Json values = Json::array();
    std::size_t d = c.dim_source();
    for (std::size_t s = 0; s < c.slot_count(); ++s) {
        if (is_zero(c.value(s))) continue;
        Json e;
        Json args = Json::array();
        for (auto i : c.tuple(s / d)) args.push_back(i + 1);
        e["args"] = std::move(args);
        e["last"] = s % d + 1;
        e["v"] = to_json(c.value(s));
        values.push_back(std::move(e));
    }
    Json j;
    j["degree"] = c.degree();
    j["dim_source"] = c.dim_source();
    j["dim_target"] = c.dim_target();
    j["values"] = std::move(values);
    return j;
}

Cochain cochain_from_json(const Json& j, const Field& f, const std::string& ptr) {
    std::size_t n = read_count(require_key(j, "degree", ptr), ptr + "/degree");
    if (n == 0) throw SchemaError(ptr + "/degree", "degree must be at least 1");
    std::size_t ds = read_count(require_key(j, "dim_source", ptr), ptr + "/dim_source");
    std::size_t dt = read_count(require_key(j, "dim_target", ptr), ptr + "/dim_target");
    Cochain c(f, n, ds, dt);
    if (!j.contains("values")) return c;
    const Json& vals = j["values"];
    if (!vals.is_array()) throw SchemaError(ptr + "/values", "expected an array");
    for (std::size_t t = 0; t < vals.size(); ++t) {
        std::string q = ptr + "/values/" + std::to_string(t);
        const Json& args = require_key(vals[t], "args", q);
        if (!args.is_array() || args.size() + 1 != n)
            throw SchemaError(q + "/args", "expected " + std::to_string(n - 1) + " indices");
        std::vector<std::size_t> first;
        for (std::size_t k = 0; k < args.size(); ++k) {
            first.push_back(read_index(args[k], ds, q + "/args/" + std::to_string(k)));
            if (k > 0 && first[k] <= first[k - 1]) throw SchemaError(q + "/args", "indices must be strictly increasing");
        }
        std::size_t last = read_index(require_key(vals[t], "last", q), ds, q + "/last");
        c.set(first, last, vec_from_json(require_key(vals[t], "v", q), f, dt, q + "/v"));
    }
    return c;
}

Json ns_to_json(const NSPreLie& ns) {
    auto table = [&](const PreLieAlgebra& a) {
        Json t = Json::object();
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                Json e = Json::object();
                for (std::size_t k = 0; k < a.dim(); ++k)
                    if (!a.product(i, j)[k].is_zero()) e[std::to_string(k + 1)] = to_json(a.product(i, j)[k]);
                if (!e.empty()) t[std::to_string(i + 1) + "," + std::to_string(j + 1)] = std::move(e);
            }
        return t;
    };
    Json j;
    j["dim"] = ns.dim();
    j["tri"] = table(ns.tri);
    j["trl"] = table(ns.trl);
    j["circ"] = table(ns.circ);
    return j;
}

NSPreLie ns_from_json(const Json& j, const Field& f, const std::string& ptr) {
    std::size_t dim = read_count(require_key(j, "dim", ptr), ptr + "/dim");
    NSPreLie ns(f, dim);
    auto parse_index = [&](const std::string& s, const std::string& q) {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || v == 0 || v > dim)
            throw SchemaError(q, "bad index '" + s + "'");
        return v - 1;
    };
    auto table = [&](const char* key, PreLieAlgebra& a) {
        if (!j.contains(key)) return;
        std::string q = ptr + "/" + key;
        const Json& t = j[key];
        if (!t.is_object()) throw SchemaError(q, "expected an object keyed by \"i,j\"");
        for (const auto& [ij, row] : t.items()) {
            std::string qi = q + "/" + ij;
            auto comma = ij.find(',');
            if (comma == std::string::npos) throw SchemaError(qi, "key must be \"i,j\"");
            std::size_t i = parse_index(ij.substr(0, comma), qi);
            std::size_t jj = parse_index(ij.substr(comma + 1), qi);
            if (!row.is_object()) throw SchemaError(qi, "expected an object keyed by \"k\"");
            for (const auto& [k, c] : row.items())
                a.product(i, jj)[parse_index(k, qi + "/" + k)] = scalar_from_json(c, f, qi + "/" + k);
        }
    };
    table("tri", ns.tri);
    table("trl", ns.trl);
    table("circ", ns.circ);
    return ns;
}

Json report_to_json(const Report& r) {
    Json j;
    j["report"] = r.name;
    j["pass"] = r.pass;
    Json v = Json::array();
    for (const auto& x : r.violations) {
        Json e;
        e["at"] = x.at;
        e["residual"] = to_json(x.residual);
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(report_to_json(p));
    j["parts"] = std::move(parts);
    Json details = Json::object();
    for (const auto& [k, val] : r.details) details[k] = val;
    j["details"] = std::move(details);
    return j;
}

}  // namespace prelie::cli
