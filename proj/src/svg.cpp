#include <masscalc/svg.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace masscalc {

namespace {

double coord(const Point& p, std::size_t i) { return p[i].to_double(); }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

void SvgScene::add_point(const Point& p, std::string label, std::string color) {
    if (p.space().dim() != 2)
        throw DimensionMismatchError("SVG output is two-dimensional");
    points_.push_back({coord(p, 0), coord(p, 1), std::move(label), std::move(color)});
}

void SvgScene::add_segment(const Point& a, const Point& b, std::string color) {
    if (a.space().dim() != 2 || b.space().dim() != 2)
        throw DimensionMismatchError("SVG output is two-dimensional");
    segments_.push_back({coord(a, 0), coord(a, 1), coord(b, 0), coord(b, 1),
                         std::move(color)});
}

std::string SvgScene::render() const {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (const auto& m : points_) grow(m.x, m.y);
    for (const auto& s : segments_) {
        grow(s.x1, s.y1);
        grow(s.x2, s.y2);
    }
    double width = std::max(max_x - min_x, 1e-9);
    double height = std::max(max_y - min_y, 1e-9);
    double margin = 0.05 * std::max(width, height);
    double r = 0.01 * std::max(width, height);

    // Flip y so the mathematical orientation survives SVG's downward axis.
    auto fy = [&](double y) { return (max_y + margin) + (min_y - margin) - y; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
       << fmt(min_x - margin) << " " << fmt(min_y - margin) << " "
       << fmt(width + 2 * margin) << " " << fmt(height + 2 * margin) << "\">\n";
    for (const auto& s : segments_)
        os << "  <line x1=\"" << fmt(s.x1) << "\" y1=\"" << fmt(fy(s.y1))
           << "\" x2=\"" << fmt(s.x2) << "\" y2=\"" << fmt(fy(s.y2))
           << "\" stroke=\"" << s.color << "\" stroke-width=\"" << fmt(r / 2)
           << "\"/>\n";
    for (const auto& m : points_) {
        os << "  <circle cx=\"" << fmt(m.x) << "\" cy=\"" << fmt(fy(m.y))
           << "\" r=\"" << fmt(r) << "\" fill=\"" << m.color << "\"/>\n";
        if (!m.label.empty())
            os << "  <text x=\"" << fmt(m.x + 1.5 * r) << "\" y=\"" << fmt(fy(m.y) - 1.5 * r)
               << "\" font-size=\"" << fmt(4 * r) << "\">" << m.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void SvgScene::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << render();
}

} // namespace masscalc
