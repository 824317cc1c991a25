#pragma once

#include <masscalc/quadratic.hpp>

#include <json.hpp>

namespace masscalc {

using Json = nlohmann::ordered_json;

// JSON forms used by documents, reports and the Python module:
//   point / free vector     array of field-element strings
//   weighted set            array of {"point": [...], "mass": "..."}
//   mass element            {"type":"weighty","point":[...],"mass":"..."}
//                           or {"type":"dipole","vector":[...]}
//   bilinear form           n x n array of arrays (symmetry validated)
//   ambient vector          (n+1)-array of strings
// All field elements use the field's textual serialization.

Json point_to_json(const Point& p);
Json vector_to_json(const FreeVector& v);
Json set_to_json(const WeightedSet& s);
Json mass_element_to_json(const MassElement& e);
Json ambient_to_json(const AmbientVector& v);
Json matrix_to_json(const Matrix& m);

Point point_from_json(const Space& space, const Json& j);
FreeVector vector_from_json(const Space& space, const Json& j);
WeightedSet set_from_json(const Space& space, const Json& j);
MassElement mass_element_from_json(const Space& space, const Json& j);
BilinearForm bilinear_form_from_json(const Space& space, const Json& j);
AffineMap affine_map_from_json(const Space& space, const Json& j);

/// Parses "rational", "fp:<p>" or "float".
Field field_from_name(const std::string& name);

} // namespace masscalc
