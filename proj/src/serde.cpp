#include <masscalc/serde.hpp>

namespace masscalc {

namespace {

std::vector<FieldElement> coords_from_json(const Space& space, const Json& j) {
    if (!j.is_array())
        throw SchemaError("expected an array of field-element strings");
    std::vector<FieldElement> coords;
    coords.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_string())
            throw SchemaError("field elements are serialized as strings");
        coords.push_back(space.field().parse(entry.get<std::string>()));
    }
    if (coords.size() != space.dim())
        throw DimensionMismatchError("expected " + std::to_string(space.dim()) +
                                     " coordinates, got " + std::to_string(coords.size()));
    return coords;
}

Json coords_to_json(const std::vector<FieldElement>& coords) {
    Json j = Json::array();
    for (const auto& c : coords) j.push_back(c.str());
    return j;
}

} // namespace

Json point_to_json(const Point& p) { return coords_to_json(p.coords()); }
Json vector_to_json(const FreeVector& v) { return coords_to_json(v.coords()); }

Json set_to_json(const WeightedSet& s) {
    Json j = Json::array();
    for (const auto& [p, mass] : s.entries())
        j.push_back(Json{{"point", point_to_json(p)}, {"mass", mass.str()}});
    return j;
}

Json mass_element_to_json(const MassElement& e) {
    if (e.is_weighty())
        return Json{{"type", "weighty"},
                    {"point", point_to_json(e.point())},
                    {"mass", e.mass().str()}};
    return Json{{"type", "dipole"}, {"vector", vector_to_json(e.vector())}};
}

Json ambient_to_json(const AmbientVector& v) { return coords_to_json(v.coords()); }

Json matrix_to_json(const Matrix& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        j.push_back(std::move(row));
    }
    return j;
}

Point point_from_json(const Space& space, const Json& j) {
    return Point(space, coords_from_json(space, j));
}

FreeVector vector_from_json(const Space& space, const Json& j) {
    return FreeVector(space, coords_from_json(space, j));
}

WeightedSet set_from_json(const Space& space, const Json& j) {
    if (!j.is_array())
        throw SchemaError("a weighted set is an array of {point, mass} records");
    WeightedSet s(space);
    for (const auto& rec : j) {
        if (!rec.is_object() || !rec.contains("point") || !rec.contains("mass"))
            throw SchemaError("weighted-set entries need 'point' and 'mass'");
        if (!rec.at("mass").is_string())
            throw SchemaError("masses are serialized as strings");
        s.add_mass(point_from_json(space, rec.at("point")),
                   space.field().parse(rec.at("mass").get<std::string>()));
    }
    return s;
}

MassElement mass_element_from_json(const Space& space, const Json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw SchemaError("a mass element needs a 'type' tag");
    const std::string type = j.at("type").get<std::string>();
    if (type == "weighty") {
        if (!j.contains("point") || !j.contains("mass") || !j.at("mass").is_string())
            throw SchemaError("a weighty element needs 'point' and string 'mass'");
        return MassElement::weighty(point_from_json(space, j.at("point")),
                                    space.field().parse(j.at("mass").get<std::string>()));
    }
    if (type == "dipole") {
        if (!j.contains("vector"))
            throw SchemaError("a dipole element needs 'vector'");
        return MassElement::dipole(vector_from_json(space, j.at("vector")));
    }
    throw SchemaError("unknown mass element type '" + type + "'");
}

BilinearForm bilinear_form_from_json(const Space& space, const Json& j) {
    if (!j.is_array() || j.size() != space.dim())
        throw SchemaError("a bilinear form is an n x n array of arrays");
    std::vector<FieldElement> entries;
    entries.reserve(space.dim() * space.dim());
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != space.dim())
            throw SchemaError("a bilinear form is an n x n array of arrays");
        for (const auto& cell : row) {
            if (!cell.is_string()) throw SchemaError("form entries are strings");
            entries.push_back(space.field().parse(cell.get<std::string>()));
        }
    }
    Matrix m(space.field(), space.dim(), space.dim(), std::move(entries));
    return BilinearForm(std::move(m)); // validates symmetry and non-degeneracy
}

AffineMap affine_map_from_json(const Space& space, const Json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw SchemaError("an affine map needs 'matrix' (and optional 'translation')");
    const Json& rows = j.at("matrix");
    if (!rows.is_array() || rows.empty())
        throw SchemaError("'matrix' must be a non-empty array of rows");
    std::size_t n_out = rows.size();
    std::vector<FieldElement> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != space.dim())
            throw SchemaError("matrix rows must have one entry per domain coordinate");
        for (const auto& cell : row) {
            if (!cell.is_string()) throw SchemaError("matrix entries are strings");
            entries.push_back(space.field().parse(cell.get<std::string>()));
        }
    }
    Matrix linear(space.field(), n_out, space.dim(), std::move(entries));
    Space codomain(space.field(), n_out);
    FreeVector translation = j.contains("translation")
                                 ? vector_from_json(codomain, j.at("translation"))
                                 : codomain.zero_vector();
    return AffineMap(std::move(linear), std::move(translation));
}

Field field_from_name(const std::string& name) {
    if (name == "rational") return Field::rationals();
    if (name == "float") return Field::real();
    if (name.rfind("fp:", 0) == 0) {
        const std::string digits = name.substr(3);
        if (digits.empty() || digits.size() > 10 ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw SchemaError("invalid field name '" + name + "'");
        return Field::prime(std::stoull(digits));
    }
    throw SchemaError("unknown field '" + name + "' (expected rational, fp:<p> or float)");
}

} // namespace masscalc
