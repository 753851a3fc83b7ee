#include "tropsl/json_io.hpp"

#include "tropsl/error.hpp"

namespace tropsl {

namespace {

const Json& require_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected a JSON array");
    return j;
}

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw ParseError("expected a rational string, got " + j.dump());
}

Json vector_to_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rational_to_json(q));
    return out;
}

RationalVector vector_from_json(const Json& j) {
    RationalVector v;
    for (const auto& x : require_array(j, "vector")) v.push_back(rational_from_json(x));
    return v;
}

Json rows_to_json(const std::vector<RationalVector>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(vector_to_json(r));
    return out;
}

std::vector<RationalVector> rows_from_json(const Json& j) {
    std::vector<RationalVector> rows;
    for (const auto& r : require_array(j, "rows")) rows.push_back(vector_from_json(r));
    return rows;
}

Json cone_to_json(const Cone& c) {
    return Json{{"inequalities", rows_to_json(c.inequalities())}, {"equalities", rows_to_json(c.equalities())}};
}

Cone cone_from_json(std::size_t ambient_dim, const Json& j) {
    std::vector<RationalVector> eq;
    if (j.contains("equalities")) eq = rows_from_json(j.at("equalities"));
    return Cone(ambient_dim, rows_from_json(require_field(j, "inequalities")), std::move(eq));
}

Json fan_to_json(const Fan& f) {
    Json cones = Json::array();
    for (const auto& m : f.maximal_cones()) {
        Json c = cone_to_json(m.cone);
        c["label"] = m.label;
        cones.push_back(std::move(c));
    }
    return Json{{"ambient_dim", f.ambient_dim()},
                {"equalities", rows_to_json(f.equalities())},
                {"maximal_cones", std::move(cones)}};
}

Fan fan_from_json(const Json& j) {
    if (j.is_object() && j.contains("fan")) return fan_from_json(j.at("fan"));
    const Json& d = require_field(j, "ambient_dim");
    if (!d.is_number_unsigned()) throw ParseError("ambient_dim must be a nonnegative integer");
    const std::size_t dim = d.get<std::size_t>();
    std::vector<RationalVector> eq;
    if (j.contains("equalities")) eq = rows_from_json(j.at("equalities"));
    std::vector<LabelledCone> cones;
    for (const auto& c : require_array(require_field(j, "maximal_cones"), "maximal_cones")) {
        std::string label = c.contains("label") ? c.at("label").get<std::string>() : std::string();
        cones.push_back({cone_from_json(dim, c), std::move(label)});
    }
    return Fan(dim, std::move(eq), std::move(cones));
}

Json constraints_to_json(const std::vector<LinearConstraint>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(Json{{"a", vector_to_json(c.a)}, {"b", rational_to_json(c.b)}});
    return out;
}

FieldMatrix field_matrix_from_json(const FieldConfig& cfg, const Json& j) {
    const std::size_t n = require_array(j, "matrix").size();
    if (n == 0) throw DimensionError("matrix is empty");
    FieldMatrix g(n, n, make_element(cfg, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = require_array(j[i], "matrix row");
        if (row.size() != n) throw DimensionError("matrix is not square");
        for (std::size_t k = 0; k < n; ++k) {
            if (!row[k].is_string()) throw ParseError("matrix entries must be strings");
            g(i, k) = parse_element(cfg, row[k].get<std::string>());
        }
    }
    return g;
}

Json field_matrix_to_json(const FieldMatrix& g) {
    Json out = Json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(g(i, k).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

TropicalMatrix tropical_matrix_from_json(const Json& j) {
    const std::size_t rows = require_array(j, "matrix").size();
    if (rows == 0) throw DimensionError("matrix is empty");
    const std::size_t cols = require_array(j[0], "matrix row").size();
    TropicalMatrix m(rows, cols, TropicalScalar::bottom());
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = require_array(j[i], "matrix row");
        if (row.size() != cols) throw DimensionError("matrix rows have different lengths");
        for (std::size_t k = 0; k < cols; ++k) {
            if (row[k].is_string()) m(i, k) = TropicalScalar::parse(row[k].get<std::string>());
            else m(i, k) = rational_from_json(row[k]);
        }
    }
    return m;
}

Json tropical_matrix_to_json(const TropicalMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

Json type_to_json(const TypeVector& t) {
    Json out = Json::array();
    for (const auto& tk : t) {
        Json s = Json::array();
        for (auto i : tk) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

TypeVector type_from_json(const Json& j) {
    TypeVector t;
    for (const auto& tk : require_array(j, "type")) {
        std::vector<std::size_t> s;
        for (const auto& i : require_array(tk, "type entry")) {
            if (!i.is_number_integer() || i.get<long long>() < 1) throw ParseError("type indices are integers >= 1");
            s.push_back(static_cast<std::size_t>(i.get<long long>() - 1));
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        t.push_back(std::move(s));
    }
    return t;
}

}  // namespace tropsl
