// masscalc: exact mass-point calculus from the command line.
//
//   masscalc run <file> [--field F] [--svg PATH]
//   masscalc demo medians|orthocenter|euler [--triangle x1 y1 x2 y2 x3 y3]
//            [--random N] [--seed S] [--svg PATH]
//
// Exit codes: 0 pass, 1 verdict failure, 2 parse/schema error,
// 3 field/dimension error.

#include <masscalc/document.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace masscalc;

constexpr int kExitPass = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitParse = 2;
constexpr int kExitField = 3;

Point make_point(const Space& space, const std::string& x, const std::string& y) {
    return Point(space, {space.field().parse(x), space.field().parse(y)});
}

Triangle random_triangle(const Space& space, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(-100, 100);
    for (;;) {
        std::vector<Point> pts;
        for (int i = 0; i < 3; ++i)
            pts.push_back(Point(space, {space.field().element(coord(rng)),
                                        space.field().element(coord(rng))}));
        try {
            return Triangle(pts[0], pts[1], pts[2]);
        } catch (const DegenerateConfigurationError&) {
            // collinear sample; retry
        }
    }
}

void sketch_demo(SvgScene& scene, const std::string& which, const Triangle& t,
                 const BilinearForm& form) {
    const char* names[3] = {"A", "B", "C"};
    for (std::size_t i = 0; i < 3; ++i) {
        scene.add_point(t.vertex(i), names[i]);
        scene.add_segment(t.vertex(i), t.vertex((i + 1) % 3));
    }
    const Field& k = t.space().field();
    FieldElement half = k.element(2).inverse();
    auto midpoint = [&](std::size_t i) {
        return shift(t.vertex((i + 1) % 3),
                     half * free_vector(t.vertex((i + 1) % 3), t.vertex((i + 2) % 3)));
    };
    if (which == "medians") {
        MediansReport r = medians_demo(t);
        scene.add_point(r.centroid, "M", "red");
        for (std::size_t i = 0; i < 3; ++i)
            scene.add_segment(t.vertex(i), midpoint(i), "steelblue");
    } else if (which == "orthocenter") {
        OrthocenterReport r = orthocenter_demo(t, form);
        scene.add_point(r.circumcenter, "O", "green");
        scene.add_point(r.orthocenter, "H", "purple");
        for (std::size_t i = 0; i < 3; ++i)
            scene.add_segment(t.vertex(i), r.orthocenter, "steelblue");
    } else {
        EulerReport r = euler_demo(t, form);
        scene.add_point(r.circumcenter, "O", "green");
        scene.add_point(r.centroid, "M", "red");
        scene.add_point(r.orthocenter, "H", "purple");
        scene.add_segment(r.orthocenter, r.circumcenter, "orange");
    }
}

int run_demo(const std::string& which, const std::vector<std::string>& triangle,
             unsigned random_count, std::uint64_t seed, const std::string& svg_path,
             const std::string& field_name) {
    Field field = field_from_name(field_name);
    if (field.kind() != FieldKind::Rational) {
        std::cerr << "demos run over the exact rationals (--field rational)\n";
        return kExitField;
    }
    Space space(field, 2);
    BilinearForm form = BilinearForm::standard(space);

    std::vector<Triangle> triangles;
    if (!triangle.empty()) {
        triangles.push_back(Triangle(make_point(space, triangle[0], triangle[1]),
                                     make_point(space, triangle[2], triangle[3]),
                                     make_point(space, triangle[4], triangle[5])));
    }
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < random_count; ++i)
        triangles.push_back(random_triangle(space, rng));
    if (triangles.empty()) {
        // Default example triangle with circumcenter at the origin.
        triangles.push_back(Triangle(make_point(space, "3", "4"),
                                     make_point(space, "5", "0"),
                                     make_point(space, "-5", "0")));
    }

    Json reports = Json::array();
    bool all_pass = true;
    for (const Triangle& t : triangles) {
        Json entry{{"triangle", Json::array({point_to_json(t.a()), point_to_json(t.b()),
                                             point_to_json(t.c())})}};
        bool pass = false;
        if (which == "medians") {
            MediansReport r = medians_demo(t);
            pass = r.pass();
            entry.update(r.to_json());
        } else if (which == "orthocenter") {
            OrthocenterReport r = orthocenter_demo(t, form);
            pass = r.pass();
            entry.update(r.to_json());
        } else {
            EulerReport r = euler_demo(t, form);
            pass = r.pass();
            entry.update(r.to_json());
        }
        all_pass = all_pass && pass;
        reports.push_back(std::move(entry));
    }

    if (!svg_path.empty()) {
        SvgScene scene;
        sketch_demo(scene, which, triangles.front(), form);
        scene.write(svg_path);
    }

    Json output{{"demo", which}, {"reports", std::move(reports)}, {"pass", all_pass}};
    std::cout << output.dump(2) << "\n";
    return all_pass ? kExitPass : kExitVerdict;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact center-of-mass calculus"};
    app.require_subcommand(1);

    std::string file;
    std::string field_name = "rational";
    std::string svg_path;
    std::string which;
    std::vector<std::string> triangle;
    unsigned random_count = 0;
    std::uint64_t seed = 0;

    CLI::App* run = app.add_subcommand("run", "execute a JSON document");
    run->add_option("file", file, "document path")->required();
    run->add_option("--field", field_name, "rational | fp:<p> | float");
    run->add_option("--svg", svg_path, "write an SVG sketch of demo queries");

    CLI::App* demo = app.add_subcommand("demo", "run a classical theorem demo");
    demo->add_option("name", which, "medians | orthocenter | euler")
        ->required()
        ->check(CLI::IsMember({"medians", "orthocenter", "euler"}));
    demo->add_option("--triangle", triangle, "vertices x1 y1 x2 y2 x3 y3")
        ->expected(6);
    demo->add_option("--random", random_count, "also run N random triangles");
    demo->add_option("--seed", seed, "seed for randomized modes");
    demo->add_option("--field", field_name, "rational | fp:<p> | float");
    demo->add_option("--svg", svg_path, "write an SVG sketch");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "cannot open '" << file << "'\n";
                return kExitParse;
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();

            std::optional<Field> override_field;
            if (run->count("--field")) override_field = field_from_name(field_name);

            SvgScene scene;
            RunResult result = run_document(buffer.str(), override_field,
                                            svg_path.empty() ? nullptr : &scene);
            std::cout << result.output_text();
            if (!svg_path.empty()) scene.write(svg_path);
            return static_cast<int>(result.status);
        }
        return run_demo(which, triangle, random_count, seed, svg_path, field_name);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const SchemaError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const FieldMismatchError& e) {
        std::cerr << e.what() << "\n";
        return kExitField;
    } catch (const DimensionMismatchError& e) {
        std::cerr << e.what() << "\n";
        return kExitField;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitVerdict;
    }
}
