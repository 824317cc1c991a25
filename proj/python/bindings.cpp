// Python bindings for the main operations: fields, points, weighted sets,
// mass elements, the homogeneous lift, quadratic critical points and the
// classical triangle demos. Structured results cross as JSON-compatible
// dicts.

#include <masscalc/document.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace masscalc;

namespace {

Field field_from_spec(const std::string& spec) { return field_from_name(spec); }

std::vector<FieldElement> parse_coords(const Field& field,
                                       const std::vector<std::string>& texts) {
    std::vector<FieldElement> coords;
    coords.reserve(texts.size());
    for (const auto& t : texts) coords.push_back(field.parse(t));
    return coords;
}

py::object json_to_py(const Json& j) {
    switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(json_to_py(item));
        return out;
    }
    case Json::value_t::object: {
        py::dict out;
        for (const auto& [key, value] : j.items())
            out[py::str(key)] = json_to_py(value);
        return out;
    }
    default: return py::none();
    }
}

std::vector<std::string> coord_strings(const std::vector<FieldElement>& coords) {
    std::vector<std::string> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(c.str());
    return out;
}

Triangle make_triangle(const Point& a, const Point& b, const Point& c) {
    return Triangle(a, b, c);
}

} // namespace

PYBIND11_MODULE(_masscalc, m) {
    m.doc() = "Exact center-of-mass calculus: weighty points, mass dipoles and friends.";

    // Translators run newest-first, so the base class goes in first.
    py::register_exception<Error>(m, "MasscalcError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<FieldMismatchError>(m, "FieldMismatchError", PyExc_ValueError);
    py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError",
                                                   PyExc_ValueError);
    py::register_exception<DivisionByZeroError>(m, "DivisionByZeroError",
                                                PyExc_ZeroDivisionError);
    py::register_exception<NonPrimeModulusError>(m, "NonPrimeModulusError", PyExc_ValueError);
    py::register_exception<NoCenterOfMassError>(m, "NoCenterOfMassError", PyExc_ArithmeticError);
    py::register_exception<NoCriticalPointError>(m, "NoCriticalPointError",
                                                 PyExc_ArithmeticError);
    py::register_exception<UnsupportedCharacteristicError>(m, "UnsupportedCharacteristicError",
                                                           PyExc_ArithmeticError);
    py::register_exception<DegenerateConfigurationError>(m, "DegenerateConfigurationError",
                                                         PyExc_ValueError);
    py::register_exception<DegenerateFormError>(m, "DegenerateFormError", PyExc_ValueError);

    py::class_<Field>(m, "Field")
        .def_static("rationals", &Field::rationals)
        .def_static("prime", &Field::prime, py::arg("p"))
        .def_static("real", &Field::real, py::arg("epsilon") = 1e-9)
        .def_static("from_name", &field_from_spec, py::arg("name"))
        .def_property_readonly("characteristic", &Field::characteristic)
        .def("zero", &Field::zero)
        .def("one", &Field::one)
        .def("element", &Field::element, py::arg("n"))
        .def("ratio", &Field::ratio, py::arg("num"), py::arg("den"))
        .def("parse", &Field::parse, py::arg("text"))
        .def("name", &Field::name)
        .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
        .def("__repr__", [](const Field& f) { return "Field(" + f.name() + ")"; });

    py::class_<FieldElement>(m, "FieldElement")
        .def("__add__", [](const FieldElement& a, const FieldElement& b) { return a + b; })
        .def("__sub__", [](const FieldElement& a, const FieldElement& b) { return a - b; })
        .def("__mul__", [](const FieldElement& a, const FieldElement& b) { return a * b; })
        .def("__truediv__", [](const FieldElement& a, const FieldElement& b) { return a / b; })
        .def("__neg__", [](const FieldElement& a) { return -a; })
        .def("__eq__", [](const FieldElement& a, const FieldElement& b) { return a == b; })
        .def("inverse", &FieldElement::inverse)
        .def("is_zero", &FieldElement::is_zero)
        .def_property_readonly("field", &FieldElement::field)
        .def("__str__", &FieldElement::str)
        .def("__repr__", [](const FieldElement& e) { return e.str(); });

    py::class_<Space>(m, "Space")
        .def(py::init<Field, std::size_t>(), py::arg("field"), py::arg("dim"))
        .def_property_readonly("field", &Space::field)
        .def_property_readonly("dim", &Space::dim)
        .def("origin", &Space::origin)
        .def("__eq__", [](const Space& a, const Space& b) { return a == b; });

    py::class_<Point>(m, "Point")
        .def(py::init([](const Space& sp, const std::vector<std::string>& coords) {
                 return Point(sp, parse_coords(sp.field(), coords));
             }),
             py::arg("space"), py::arg("coords"))
        .def_property_readonly("space", &Point::space)
        .def("coords", [](const Point& p) { return coord_strings(p.coords()); })
        .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
        .def("__repr__", [](const Point& p) {
            return json_to_py(point_to_json(p)).attr("__repr__")().cast<std::string>();
        });

    py::class_<FreeVector>(m, "FreeVector")
        .def(py::init([](const Space& sp, const std::vector<std::string>& coords) {
                 return FreeVector(sp, parse_coords(sp.field(), coords));
             }),
             py::arg("space"), py::arg("coords"))
        .def_property_readonly("space", &FreeVector::space)
        .def("coords", [](const FreeVector& v) { return coord_strings(v.coords()); })
        .def("is_zero", &FreeVector::is_zero)
        .def("__add__", [](const FreeVector& a, const FreeVector& b) { return a + b; })
        .def("__eq__", [](const FreeVector& a, const FreeVector& b) { return a == b; });

    m.def("free_vector", &free_vector, py::arg("from_point"), py::arg("to_point"));
    m.def("shift", &shift, py::arg("point"), py::arg("vector"));
    m.def("pairs_equivalent", &pairs_equivalent);

    py::class_<WeightedSet>(m, "WeightedSet")
        .def(py::init<Space>(), py::arg("space"))
        .def_property_readonly("space", &WeightedSet::space)
        .def("add_mass",
             [](WeightedSet& s, const Point& p, const std::string& mass) {
                 s.add_mass(p, s.space().field().parse(mass));
             },
             py::arg("point"), py::arg("mass"))
        .def("size", &WeightedSet::size)
        .def("to_list", [](const WeightedSet& s) { return json_to_py(set_to_json(s)); })
        .def("__eq__", [](const WeightedSet& a, const WeightedSet& b) { return a == b; });

    m.def("total_mass", [](const WeightedSet& s) { return total_mass(s); });
    m.def("moment_about", &moment_about, py::arg("set"), py::arg("pivot"));
    m.def("is_null_set", &is_null_set);
    m.def("sets_equivalent", &sets_equivalent);

    py::class_<MassElement>(m, "MassElement")
        .def_static("weighty",
                    [](const Point& p, const std::string& mass) {
                        return MassElement::weighty(p, p.space().field().parse(mass));
                    },
                    py::arg("point"), py::arg("mass"))
        .def_static("weighty", &MassElement::weighty, py::arg("point"), py::arg("mass"))
        .def_static("dipole", &MassElement::dipole, py::arg("vector"))
        .def_static("zero", &MassElement::zero, py::arg("space"))
        .def("is_weighty", &MassElement::is_weighty)
        .def("is_dipole", &MassElement::is_dipole)
        .def_property_readonly("point", &MassElement::point)
        .def_property_readonly("mass", &MassElement::mass)
        .def_property_readonly("vector", &MassElement::vector)
        .def("__add__", [](const MassElement& a, const MassElement& b) { return add(a, b); })
        .def("__rmul__",
             [](const MassElement& e, const std::string& s) {
                 return scale(e.space().field().parse(s), e);
             })
        .def("scale",
             [](const MassElement& e, const std::string& s) {
                 return scale(e.space().field().parse(s), e);
             })
        .def("__eq__", [](const MassElement& a, const MassElement& b) { return a == b; })
        .def("to_dict", [](const MassElement& e) { return json_to_py(mass_element_to_json(e)); })
        .def("__repr__", [](const MassElement& e) {
            return mass_element_to_json(e).dump();
        });

    m.def("reduce", [](const WeightedSet& s) { return reduce(s); }, py::arg("set"));
    m.def("classical_center_of_mass",
          [](const WeightedSet& s, std::optional<std::uint64_t> seed) {
              if (seed) {
                  std::mt19937_64 rng(*seed);
                  return classical_center_of_mass(s, rng);
              }
              return classical_center_of_mass(s);
          },
          py::arg("set"), py::arg("seed") = std::nullopt);

    m.def("psi_lift", [](const MassElement& e) {
        return coord_strings(psi_lift(e).coords());
    });
    m.def("psi_drop", [](const Space& sp, const std::vector<std::string>& coords) {
        if (coords.size() != sp.dim() + 1)
            throw DimensionMismatchError("ambient vectors have n+1 coordinates");
        return psi_drop(AmbientVector(sp.field(), parse_coords(sp.field(), coords)));
    });
    m.def("kodaira", [](const Point& p) { return coord_strings(kodaira(p).coords()); });

    m.def("kodaira_pairing",
          [](const WeightedSet& s, const std::vector<std::string>& linear,
             const std::string& constant) {
              const Field& k = s.space().field();
              Poly1 f(s.space(), parse_coords(k, linear), k.parse(constant));
              return kodaira_pairing(s, f);
          },
          py::arg("set"), py::arg("linear"), py::arg("constant"));

    m.def("critical_point",
          [](const WeightedSet& s, const std::vector<std::vector<std::string>>& form) {
              const Field& k = s.space().field();
              std::vector<FieldElement> entries;
              for (const auto& row : form)
                  for (const auto& cell : row) entries.push_back(k.parse(cell));
              Matrix mat(k, form.size(), form.empty() ? 0 : form[0].size(),
                         std::move(entries));
              return critical_point(sum_of_shifted_quadratics(s, BilinearForm(mat)));
          },
          py::arg("set"), py::arg("form"));
    m.def("critical_point", [](const WeightedSet& s) {
        return critical_point(
            sum_of_shifted_quadratics(s, BilinearForm::standard(s.space())));
    });

    py::class_<Triangle>(m, "Triangle")
        .def(py::init(&make_triangle), py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("medians_demo", [](const Triangle& t) {
        return json_to_py(medians_demo(t).to_json());
    });
    m.def("orthocenter_demo", [](const Triangle& t) {
        return json_to_py(orthocenter_demo(t, BilinearForm::standard(t.space())).to_json());
    });
    m.def("euler_demo", [](const Triangle& t) {
        return json_to_py(euler_demo(t, BilinearForm::standard(t.space())).to_json());
    });

    m.def("run_document",
          [](const std::string& text) {
              RunResult r = run_document(text);
              return py::make_tuple(static_cast<int>(r.status), json_to_py(r.output));
          },
          py::arg("text"),
          "Executes a JSON document; returns (exit_code, report_dict).");
}
