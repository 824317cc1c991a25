#pragma once

#include <masscalc/affine.hpp>

#include <string>
#include <vector>

namespace masscalc {

/// Accumulates labelled points and segments and renders them as plain
/// SVG 1.1, viewBox fitted to content with a 5% margin. Coordinates are
/// converted to float only here.
class SvgScene {
public:
    void add_point(const Point& p, std::string label, std::string color = "black");
    void add_segment(const Point& a, const Point& b, std::string color = "gray");

    bool empty() const { return points_.empty() && segments_.empty(); }
    std::string render() const;
    void write(const std::string& path) const;

private:
    struct Marker {
        double x, y;
        std::string label, color;
    };
    struct Segment {
        double x1, y1, x2, y2;
        std::string color;
    };
    std::vector<Marker> points_;
    std::vector<Segment> segments_;
};

} // namespace masscalc
