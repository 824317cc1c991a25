#include <masscalc/affine.hpp>

#include <ostream>

namespace masscalc {

namespace detail {

std::vector<FieldElement> checked_coords(const Space& space,
                                         std::vector<FieldElement> coords) {
    if (coords.size() != space.dim())
        throw DimensionMismatchError("expected " + std::to_string(space.dim()) +
                                     " coordinates, got " + std::to_string(coords.size()));
    for (const auto& c : coords)
        if (c.field() != space.field())
            throw FieldMismatchError("coordinate from a different field");
    return coords;
}

void require_same_space(const Space& a, const Space& b) {
    if (a.field() != b.field())
        throw FieldMismatchError("operands from different fields: " + a.field().name() +
                                 " vs " + b.field().name());
    if (a.dim() != b.dim())
        throw DimensionMismatchError("operands from spaces of dimension " +
                                     std::to_string(a.dim()) + " and " +
                                     std::to_string(b.dim()));
}

int compare_coords(const std::vector<FieldElement>& a,
                   const std::vector<FieldElement>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (int c = a[i].compare(b[i]); c != 0) return c;
    return 0;
}

bool coords_equal(const std::vector<FieldElement>& a,
                  const std::vector<FieldElement>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace detail

Point Space::origin() const {
    return Point(*this, std::vector<FieldElement>(dim_, field_.zero()));
}

FreeVector Space::zero_vector() const {
    return FreeVector(*this, std::vector<FieldElement>(dim_, field_.zero()));
}

FreeVector Point::position_vector() const {
    return FreeVector(space_, coords_);
}

bool Point::operator==(const Point& other) const {
    detail::require_same_space(space_, other.space_);
    return detail::coords_equal(coords_, other.coords_);
}

int Point::compare(const Point& other) const {
    detail::require_same_space(space_, other.space_);
    return detail::compare_coords(coords_, other.coords_);
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
    os << "(";
    for (std::size_t i = 0; i < p.coords_.size(); ++i)
        os << (i ? ", " : "") << p.coords_[i];
    return os << ")";
}

bool FreeVector::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

FreeVector FreeVector::operator+(const FreeVector& other) const {
    detail::require_same_space(space_, other.space_);
    std::vector<FieldElement> out;
    out.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out.push_back(coords_[i] + other.coords_[i]);
    return FreeVector(space_, std::move(out));
}

FreeVector FreeVector::operator-(const FreeVector& other) const {
    return *this + (-other);
}

FreeVector FreeVector::operator-() const {
    std::vector<FieldElement> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(-c);
    return FreeVector(space_, std::move(out));
}

bool FreeVector::operator==(const FreeVector& other) const {
    detail::require_same_space(space_, other.space_);
    return detail::coords_equal(coords_, other.coords_);
}

FreeVector operator*(const FieldElement& s, const FreeVector& v) {
    if (s.field() != v.space().field())
        throw FieldMismatchError("scalar from a different field");
    std::vector<FieldElement> out;
    out.reserve(v.coords_.size());
    for (const auto& c : v.coords_) out.push_back(s * c);
    return FreeVector(v.space_, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const FreeVector& v) {
    os << "<";
    for (std::size_t i = 0; i < v.coords_.size(); ++i)
        os << (i ? ", " : "") << v.coords_[i];
    return os << ">";
}

FreeVector free_vector(const Point& from, const Point& to) {
    detail::require_same_space(from.space(), to.space());
    std::vector<FieldElement> out;
    out.reserve(from.coords().size());
    for (std::size_t i = 0; i < from.coords().size(); ++i)
        out.push_back(to[i] - from[i]);
    return FreeVector(from.space(), std::move(out));
}

Point shift(const Point& p, const FreeVector& v) {
    detail::require_same_space(p.space(), v.space());
    std::vector<FieldElement> out;
    out.reserve(p.coords().size());
    for (std::size_t i = 0; i < p.coords().size(); ++i)
        out.push_back(p[i] + v[i]);
    return Point(p.space(), std::move(out));
}

bool pairs_equivalent(const Point& a1, const Point& b1,
                      const Point& a2, const Point& b2) {
    return free_vector(a1, b1) == free_vector(a2, b2);
}

AffineMap::AffineMap(Matrix linear_part, FreeVector translation)
    : linear_(std::move(linear_part)), translation_(std::move(translation)) {
    if (linear_.field() != translation_.space().field())
        throw FieldMismatchError("linear part and translation from different fields");
    if (linear_.rows() != translation_.space().dim())
        throw DimensionMismatchError("linear part rows must match the codomain dimension");
}

AffineMap AffineMap::identity(const Space& space) {
    return AffineMap(Matrix::identity(space.field(), space.dim()), space.zero_vector());
}

Point AffineMap::operator()(const Point& p) const {
    detail::require_same_space(p.space(), domain());
    std::vector<FieldElement> img = linear_ * p.coords();
    for (std::size_t i = 0; i < img.size(); ++i)
        img[i] += translation_[i];
    return Point(codomain(), std::move(img));
}

FreeVector AffineMap::map_vector(const FreeVector& v) const {
    detail::require_same_space(v.space(), domain());
    return FreeVector(codomain(), linear_ * v.coords());
}

Point apply_affine(const AffineMap& f, const Point& p) { return f(p); }

AffineMap compose(const AffineMap& f2, const AffineMap& f1) {
    detail::require_same_space(f2.domain(), f1.codomain());
    // F2(F1 x) = A2 A1 x + (A2 b1 + b2)
    Matrix linear = f2.linear_part() * f1.linear_part();
    FreeVector translation =
        f2.map_vector(f1.translation()) + f2.translation();
    return AffineMap(std::move(linear), std::move(translation));
}

bool is_invertible(const AffineMap& f) { return f.is_invertible(); }

} // namespace masscalc
