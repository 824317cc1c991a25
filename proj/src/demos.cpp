#include <masscalc/demos.hpp>

namespace masscalc {

namespace {

Point midpoint(const Point& a, const Point& b) {
    const Field& k = a.space().field();
    FieldElement half = k.element(2).inverse();
    return shift(a, half * free_vector(a, b));
}

WeightedSet unit_masses(const Triangle& t) {
    const Field& k = t.space().field();
    WeightedSet s(t.space());
    for (std::size_t i = 0; i < 3; ++i) s.add_mass(t.vertex(i), k.one());
    return s;
}

} // namespace

Triangle::Triangle(Point a, Point b, Point c)
    : vertices_{std::move(a), std::move(b), std::move(c)} {
    detail::require_same_space(vertices_[0].space(), vertices_[1].space());
    detail::require_same_space(vertices_[0].space(), vertices_[2].space());
    const Space& sp = vertices_[0].space();
    if (sp.dim() != 2)
        throw DimensionMismatchError("triangle demos run in dimension 2");
    if (sp.field().kind() != FieldKind::Rational)
        throw FieldMismatchError("triangle demos run over the exact rationals");
    FreeVector ab = free_vector(vertices_[0], vertices_[1]);
    FreeVector ac = free_vector(vertices_[0], vertices_[2]);
    FieldElement det = ab[0] * ac[1] - ab[1] * ac[0];
    if (det.is_zero())
        throw DegenerateConfigurationError("triangle vertices are collinear");
}

Point circumcenter(const Triangle& t, const BilinearForm& form) {
    detail::require_same_space(t.space(), form.space());
    // Q(O - A) = Q(O - V) reduces to 2 B(O, V - A) = Q(V) - Q(A).
    const Field& k = t.space().field();
    const FieldElement two = k.element(2);
    Matrix system(k, 2, 2);
    std::vector<FieldElement> rhs;
    for (std::size_t row = 0; row < 2; ++row) {
        const Point& v = t.vertex(row + 1);
        std::vector<FieldElement> coeffs =
            form.matrix() * free_vector(t.a(), v).coords();
        for (std::size_t j = 0; j < 2; ++j) system.at(row, j) = two * coeffs[j];
        rhs.push_back(form.quad(v) - form.quad(t.a()));
    }
    std::vector<FieldElement> center;
    try {
        center = system.solve(rhs);
    } catch (const SingularMatrixError&) {
        throw DegenerateConfigurationError(
            "bisector system is singular for this triangle and form");
    }
    return Point(t.space(), std::move(center));
}

Point altitude_intersection(const Triangle& t, const BilinearForm& form) {
    detail::require_same_space(t.space(), form.space());
    // Altitude from A: B(X - A, C - B) = 0; from B: B(X - B, A - C) = 0.
    const Field& k = t.space().field();
    Matrix system(k, 2, 2);
    std::vector<FieldElement> rhs;
    const std::array<std::pair<const Point*, FreeVector>, 2> conditions = {
        std::make_pair(&t.a(), free_vector(t.b(), t.c())),
        std::make_pair(&t.b(), free_vector(t.c(), t.a())),
    };
    for (std::size_t row = 0; row < 2; ++row) {
        const auto& [foot, edge] = conditions[row];
        std::vector<FieldElement> coeffs = form.matrix() * edge.coords();
        FieldElement dot = k.zero();
        for (std::size_t j = 0; j < 2; ++j) {
            system.at(row, j) = coeffs[j];
            dot += (*foot)[j] * coeffs[j];
        }
        rhs.push_back(dot);
    }
    std::vector<FieldElement> h;
    try {
        h = system.solve(rhs);
    } catch (const SingularMatrixError&) {
        throw DegenerateConfigurationError(
            "altitude system is singular for this triangle and form");
    }
    return Point(t.space(), std::move(h));
}

bool MediansReport::pass() const {
    return median_ratio_ok[0] && median_ratio_ok[1] && median_ratio_ok[2] &&
           combination_orders_agree;
}

Json MediansReport::to_json() const {
    return Json{{"centroid", point_to_json(centroid)},
                {"median_ratio_ok", median_ratio_ok},
                {"combination_orders_agree", combination_orders_agree},
                {"pass", pass()}};
}

MediansReport medians_demo(const Triangle& t) {
    MassElement combined = reduce(unit_masses(t));
    Point centroid = combined.point();

    std::array<bool, 3> ratio_ok{};
    const Field& k = t.space().field();
    const FieldElement two = k.element(2);
    for (std::size_t i = 0; i < 3; ++i) {
        const Point& v = t.vertex(i);
        Point opposite = midpoint(t.vertex((i + 1) % 3), t.vertex((i + 2) % 3));
        ratio_ok[i] = free_vector(v, centroid) == two * free_vector(centroid, opposite);
    }

    // The three two-stage orders: (A+B)+C, (A+C)+B, (B+C)+A.
    auto wp = [&](std::size_t i) { return MassElement::weighty(t.vertex(i), k.one()); };
    MassElement o1 = add(add(wp(0), wp(1)), wp(2));
    MassElement o2 = add(add(wp(0), wp(2)), wp(1));
    MassElement o3 = add(add(wp(1), wp(2)), wp(0));
    bool orders_agree = o1 == o2 && o2 == o3 && o1 == combined;

    return MediansReport{std::move(centroid), ratio_ok, orders_agree};
}

bool OrthocenterReport::pass() const {
    for (bool ok : displacement_ok)
        if (!ok) return false;
    for (bool ok : perpendicularity_ok)
        if (!ok) return false;
    return oracle_agrees;
}

Json OrthocenterReport::to_json() const {
    return Json{{"circumcenter", point_to_json(circumcenter)},
                {"orthocenter", point_to_json(orthocenter)},
                {"displacement_ok", displacement_ok},
                {"perpendicularity_ok", perpendicularity_ok},
                {"oracle_agrees", oracle_agrees},
                {"pass", pass()}};
}

OrthocenterReport orthocenter_demo(const Triangle& t, const BilinearForm& form) {
    const Field& k = t.space().field();
    Point o = circumcenter(t, form);

    WeightedSet weighted = unit_masses(t);
    weighted.add_mass(o, -k.element(2));
    MassElement center = reduce(weighted);
    Point h = center.point(); // total mass 1 + 1 + 1 - 2 = 1

    std::array<bool, 3> displacement_ok{};
    std::array<bool, 3> perpendicular_ok{};
    for (std::size_t i = 0; i < 3; ++i) {
        const Point& v = t.vertex(i);
        const Point& p = t.vertex((i + 1) % 3);
        const Point& q = t.vertex((i + 2) % 3);

        // Complement of V in the weighted set is weightless; its dipole
        // shifts V onto the center (the point-plus-dipole rule).
        WeightedSet complement = weighted;
        complement.add_mass(v, -k.one());
        MassElement residue = reduce(complement);
        displacement_ok[i] =
            residue.is_dipole() &&
            add(MassElement::weighty(v, k.one()), residue) == center &&
            residue.vector() == k.element(2) * free_vector(o, midpoint(p, q));

        perpendicular_ok[i] = form.apply(free_vector(v, h), free_vector(p, q)).is_zero();
    }

    bool oracle_agrees = altitude_intersection(t, form) == h;
    return OrthocenterReport{std::move(o), std::move(h), displacement_ok,
                             perpendicular_ok, oracle_agrees};
}

bool EulerReport::pass() const { return collinear && ratio_identity && oracle_agrees; }

Json EulerReport::to_json() const {
    return Json{{"circumcenter", point_to_json(circumcenter)},
                {"centroid", point_to_json(centroid)},
                {"orthocenter", point_to_json(orthocenter)},
                {"collinear", collinear},
                {"ratio_identity", ratio_identity},
                {"oracle_agrees", oracle_agrees},
                {"pass", pass()}};
}

EulerReport euler_demo(const Triangle& t, const BilinearForm& form) {
    const Field& k = t.space().field();
    Point o = circumcenter(t, form);
    Point m = reduce(unit_masses(t)).point();

    WeightedSet weighted = unit_masses(t);
    weighted.add_mass(o, -k.element(2));
    Point h = reduce(weighted).point();

    bool is_collinear = collinear({h, m, o});
    bool ratio = free_vector(h, m) == k.element(2) * free_vector(m, o);
    bool oracle = altitude_intersection(t, form) == h;
    return EulerReport{std::move(o), std::move(m), std::move(h),
                       is_collinear, ratio, oracle};
}

bool collinear(const std::vector<Point>& points) {
    if (points.size() <= 2) return true;
    const Space& sp = points[0].space();
    Matrix diffs(sp.field(), points.size() - 1, sp.dim());
    for (std::size_t i = 1; i < points.size(); ++i) {
        FreeVector d = free_vector(points[0], points[i]);
        for (std::size_t j = 0; j < sp.dim(); ++j) diffs.at(i - 1, j) = d[j];
    }
    return diffs.rank() <= 1;
}

} // namespace masscalc
