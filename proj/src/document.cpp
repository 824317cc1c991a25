#include <masscalc/document.hpp>

#include <map>

namespace masscalc {

namespace {

struct DocumentContext {
    Space space;
    std::map<std::string, Point> points;
    std::map<std::string, WeightedSet> sets;
    SvgScene* scene = nullptr;
};

Point resolve_point(const DocumentContext& ctx, const Json& j) {
    if (j.is_string()) {
        auto it = ctx.points.find(j.get<std::string>());
        if (it == ctx.points.end())
            throw SchemaError("unknown point '" + j.get<std::string>() + "'");
        return it->second;
    }
    return point_from_json(ctx.space, j);
}

const WeightedSet& resolve_set(const DocumentContext& ctx, const Json& j) {
    if (!j.is_string()) throw SchemaError("queries refer to sets by name");
    auto it = ctx.sets.find(j.get<std::string>());
    if (it == ctx.sets.end())
        throw SchemaError("unknown set '" + j.get<std::string>() + "'");
    return it->second;
}

Json require(const Json& q, const char* key) {
    if (!q.contains(key))
        throw SchemaError(std::string("query '") + q.value("op", "?") +
                          "' needs '" + key + "'");
    return q.at(key);
}

BilinearForm form_for(const DocumentContext& ctx, const Json& q) {
    if (q.contains("form")) return bilinear_form_from_json(ctx.space, q.at("form"));
    return BilinearForm::standard(ctx.space);
}

Triangle triangle_for(const DocumentContext& ctx, const Json& q) {
    const Json vertices = require(q, "triangle");
    if (!vertices.is_array() || vertices.size() != 3)
        throw SchemaError("'triangle' is an array of three points");
    return Triangle(resolve_point(ctx, vertices[0]), resolve_point(ctx, vertices[1]),
                    resolve_point(ctx, vertices[2]));
}

void sketch_triangle(DocumentContext& ctx, const Triangle& t) {
    if (!ctx.scene) return;
    const char* names[3] = {"A", "B", "C"};
    for (std::size_t i = 0; i < 3; ++i) {
        ctx.scene->add_point(t.vertex(i), names[i]);
        ctx.scene->add_segment(t.vertex(i), t.vertex((i + 1) % 3));
    }
}

// Returns the report body; sets *verdict when the query checks something.
Json run_query(DocumentContext& ctx, const Json& q, std::optional<bool>* verdict) {
    const std::string op = require(q, "op").get<std::string>();

    if (op == "reduce") {
        return Json{{"result", mass_element_to_json(reduce(resolve_set(ctx, require(q, "set"))))}};
    }
    if (op == "add") {
        const Json elems = require(q, "elements");
        if (!elems.is_array() || elems.empty())
            throw SchemaError("'elements' is a non-empty array of mass elements");
        MassElement acc = mass_element_from_json(ctx.space, elems[0]);
        for (std::size_t i = 1; i < elems.size(); ++i)
            acc = add(acc, mass_element_from_json(ctx.space, elems[i]));
        return Json{{"result", mass_element_to_json(acc)}};
    }
    if (op == "scale") {
        FieldElement scalar =
            ctx.space.field().parse(require(q, "scalar").get<std::string>());
        MassElement e = mass_element_from_json(ctx.space, require(q, "element"));
        return Json{{"result", mass_element_to_json(scale(scalar, e))}};
    }
    if (op == "pushforward") {
        AffineMap f = affine_map_from_json(ctx.space, require(q, "map"));
        MassElement e = mass_element_from_json(ctx.space, require(q, "element"));
        return Json{{"result", mass_element_to_json(pushforward(f, e))}};
    }
    if (op == "canonical_form") {
        CanonicalQuadForm cf =
            canonical_form(resolve_set(ctx, require(q, "set")), form_for(ctx, q));
        Json body{{"lambda", cf.lambda.str()}};
        if (cf.is_weighty()) {
            body["center"] = point_to_json(*cf.center);
        } else {
            body["linear"] = Json::array();
            for (const auto& c : cf.residual->linear_coeffs())
                body["linear"].push_back(c.str());
        }
        body["c0"] = cf.c0.str();
        return Json{{"result", std::move(body)}};
    }
    if (op == "medians_demo") {
        Triangle t = triangle_for(ctx, q);
        MediansReport report = medians_demo(t);
        sketch_triangle(ctx, t);
        if (ctx.scene) {
            ctx.scene->add_point(report.centroid, "M", "red");
            for (std::size_t i = 0; i < 3; ++i) {
                const Field& k = ctx.space.field();
                FieldElement half = k.element(2).inverse();
                Point mid = shift(t.vertex((i + 1) % 3),
                                  half * free_vector(t.vertex((i + 1) % 3), t.vertex((i + 2) % 3)));
                ctx.scene->add_segment(t.vertex(i), mid, "steelblue");
            }
        }
        *verdict = report.pass();
        return report.to_json();
    }
    if (op == "euler_demo") {
        Triangle t = triangle_for(ctx, q);
        EulerReport report = euler_demo(t, form_for(ctx, q));
        sketch_triangle(ctx, t);
        if (ctx.scene) {
            ctx.scene->add_point(report.circumcenter, "O", "green");
            ctx.scene->add_point(report.centroid, "M", "red");
            ctx.scene->add_point(report.orthocenter, "H", "purple");
            ctx.scene->add_segment(report.orthocenter, report.circumcenter, "orange");
        }
        *verdict = report.pass();
        return report.to_json();
    }
    if (op == "collinear_check") {
        const Json names = require(q, "points");
        if (!names.is_array() || names.size() < 2)
            throw SchemaError("'points' is an array of at least two points");
        std::vector<Point> pts;
        for (const auto& n : names) pts.push_back(resolve_point(ctx, n));
        bool ok = collinear(pts);
        *verdict = ok;
        return Json{{"collinear", ok}};
    }
    if (op == "ratio_check") {
        Point from = resolve_point(ctx, require(q, "from"));
        Point mid = resolve_point(ctx, require(q, "mid"));
        Point to = resolve_point(ctx, require(q, "to"));
        FieldElement ratio =
            ctx.space.field().parse(require(q, "ratio").get<std::string>());
        bool ok = free_vector(from, mid) == ratio * free_vector(mid, to);
        *verdict = ok;
        return Json{{"holds", ok}};
    }
    throw SchemaError("unknown query op '" + op + "'");
}

} // namespace

RunResult run_document(const std::string& text,
                       const std::optional<Field>& field_override,
                       SvgScene* scene) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        return RunResult{RunStatus::ParseOrSchemaError,
                         Json{{"error", "parse"},
                              {"byte", e.byte},
                              {"message", e.what()}}};
    }

    try {
        if (!doc.is_object()) throw SchemaError("document root must be an object");

        Field field = Field::rationals();
        if (doc.contains("field")) {
            field = field_from_name(doc.at("field").get<std::string>());
            if (field_override && *field_override != field)
                throw FieldMismatchError("--field disagrees with the document's field");
        } else if (field_override) {
            field = *field_override;
        }

        if (!doc.contains("dimension") || !doc.at("dimension").is_number_unsigned())
            throw SchemaError("document needs a non-negative integer 'dimension'");
        const std::size_t dim = doc.at("dimension").get<std::size_t>();
        if (dim > 4096) throw SchemaError("dimension too large for a document");
        Space space(field, dim);

        DocumentContext ctx{space, {}, {}, scene};
        const Json points = doc.value("points", Json::object());
        const Json sets = doc.value("sets", Json::object());
        for (const auto& [name, coords] : points.items())
            ctx.points.emplace(name, point_from_json(space, coords));

        // Declared points are sketchable whenever they have a geometric
        // meaning (2D, ordered coordinates).
        if (scene && space.dim() == 2 && field.kind() != FieldKind::Prime)
            for (const auto& [name, p] : ctx.points) scene->add_point(p, name);
        for (const auto& [name, body] : sets.items()) {
            // Set entries may name declared points instead of giving coordinates.
            WeightedSet s(space);
            if (!body.is_array()) throw SchemaError("sets are arrays of {point, mass}");
            for (const auto& rec : body) {
                if (!rec.is_object() || !rec.contains("point") || !rec.contains("mass") ||
                    !rec.at("mass").is_string())
                    throw SchemaError("weighted-set entries need 'point' and string 'mass'");
                s.add_mass(resolve_point(ctx, rec.at("point")),
                           field.parse(rec.at("mass").get<std::string>()));
            }
            ctx.sets.emplace(name, std::move(s));
        }

        Json reports = Json::array();
        bool all_pass = true;
        for (const auto& q : doc.value("queries", Json::array())) {
            if (!q.is_object()) throw SchemaError("queries are objects");
            Json report{{"op", q.value("op", "?")}};
            std::optional<bool> verdict;
            try {
                Json body = run_query(ctx, q, &verdict);
                report.update(body);
            } catch (const FieldMismatchError&) {
                throw;
            } catch (const DimensionMismatchError&) {
                throw;
            } catch (const SchemaError&) {
                throw;
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                // Domain errors (no center, unsupported characteristic, ...)
                // fail the query's verdict but keep the run going.
                report["error"] = e.what();
                verdict = false;
            }
            if (verdict) {
                report["pass"] = *verdict;
                all_pass = all_pass && *verdict;
            }
            reports.push_back(std::move(report));
        }

        Json output{{"field", field.name()},
                    {"dimension", space.dim()},
                    {"reports", std::move(reports)},
                    {"pass", all_pass}};
        return RunResult{all_pass ? RunStatus::Pass : RunStatus::VerdictFailure,
                         std::move(output)};
    } catch (const FieldMismatchError& e) {
        return RunResult{RunStatus::FieldOrDimensionError,
                         Json{{"error", "field"}, {"message", e.what()}}};
    } catch (const DimensionMismatchError& e) {
        return RunResult{RunStatus::FieldOrDimensionError,
                         Json{{"error", "dimension"}, {"message", e.what()}}};
    } catch (const ParseError& e) {
        return RunResult{RunStatus::ParseOrSchemaError,
                         Json{{"error", "parse"}, {"message", e.what()}}};
    } catch (const SchemaError& e) {
        return RunResult{RunStatus::ParseOrSchemaError,
                         Json{{"error", "schema"}, {"message", e.what()}}};
    } catch (const nlohmann::json::exception& e) {
        return RunResult{RunStatus::ParseOrSchemaError,
                         Json{{"error", "schema"}, {"message", e.what()}}};
    } catch (const Error& e) {
        return RunResult{RunStatus::ParseOrSchemaError,
                         Json{{"error", "schema"}, {"message", e.what()}}};
    }
}

} // namespace masscalc
