#pragma once

#include <masscalc/serde.hpp>

#include <array>

namespace masscalc {

/// A non-degenerate triangle in the rational plane.
class Triangle {
public:
    Triangle(Point a, Point b, Point c);

    const Point& a() const { return vertices_[0]; }
    const Point& b() const { return vertices_[1]; }
    const Point& c() const { return vertices_[2]; }
    const Point& vertex(std::size_t i) const { return vertices_.at(i); }
    const Space& space() const { return vertices_[0].space(); }

private:
    std::array<Point, 3> vertices_;
};

/// The point equidistant from all three vertices under Q_B, from the two
/// equal-norm bisector conditions. Exact over the rationals.
Point circumcenter(const Triangle& t, const BilinearForm& form);

/// Intersection of the altitudes from A and from B; independent of the
/// mass calculus, used to cross-check the orthocenter.
Point altitude_intersection(const Triangle& t, const BilinearForm& form);

struct MediansReport {
    Point centroid;
    std::array<bool, 3> median_ratio_ok; // vertex->centroid = 2 * centroid->midpoint
    bool combination_orders_agree;       // the three two-stage pairings coincide
    bool pass() const;
    Json to_json() const;
};

struct OrthocenterReport {
    Point circumcenter;
    Point orthocenter;
    std::array<bool, 3> displacement_ok;     // H = V + 2 (O -> opposite midpoint)
    std::array<bool, 3> perpendicularity_ok; // B(H - V, opposite edge) = 0
    bool oracle_agrees;                      // two-altitude intersection matches
    bool pass() const;
    Json to_json() const;
};

struct EulerReport {
    Point circumcenter;
    Point centroid;
    Point orthocenter;
    bool collinear;       // exact determinant
    bool ratio_identity;  // H - M = 2 (M - O)
    bool oracle_agrees;   // orthocenter matches the altitude intersection
    bool pass() const;
    Json to_json() const;
};

/// Archimedes' medians: centroid of unit masses, the three exact 2:1
/// divisions, and agreement of the three combination orders.
MediansReport medians_demo(const Triangle& t);

/// The orthocenter as the mass center of {A:1, B:1, C:1, O:-2}, with the
/// per-vertex displacement identity and the three altitude conditions.
OrthocenterReport orthocenter_demo(const Triangle& t, const BilinearForm& form);

/// The Euler line: H, M, O collinear with H - M = 2 (M - O), exactly.
EulerReport euler_demo(const Triangle& t, const BilinearForm& form);

/// Exact collinearity of three or more points (rank of the difference
/// vectors is at most one).
bool collinear(const std::vector<Point>& points);

} // namespace masscalc
