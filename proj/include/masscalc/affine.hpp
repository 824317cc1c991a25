#pragma once

#include <masscalc/field.hpp>
#include <masscalc/matrix.hpp>

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace masscalc {

/// The affine space k^n: a field together with a dimension.
class Space {
public:
    Space(Field field, std::size_t dim) : field_(field), dim_(dim) {}

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    bool operator==(const Space& other) const {
        return field_ == other.field_ && dim_ == other.dim_;
    }
    bool operator!=(const Space& other) const { return !(*this == other); }

    class Point origin() const;
    class FreeVector zero_vector() const;

private:
    Field field_;
    std::size_t dim_;
};

namespace detail {
std::vector<FieldElement> checked_coords(const Space& space,
                                         std::vector<FieldElement> coords);
void require_same_space(const Space& a, const Space& b);
int compare_coords(const std::vector<FieldElement>& a,
                   const std::vector<FieldElement>& b);
bool coords_equal(const std::vector<FieldElement>& a,
                  const std::vector<FieldElement>& b);
} // namespace detail

/// A point of k^n. Distinct from FreeVector: points cannot be added or
/// scaled, only shifted by free vectors.
class Point {
public:
    Point(Space space, std::vector<FieldElement> coords)
        : space_(space), coords_(detail::checked_coords(space_, std::move(coords))) {}

    const Space& space() const { return space_; }
    const std::vector<FieldElement>& coords() const { return coords_; }
    const FieldElement& operator[](std::size_t i) const { return coords_[i]; }

    /// The free vector from the coordinate origin to this point.
    FreeVector position_vector() const;

    bool operator==(const Point& other) const;
    bool operator!=(const Point& other) const { return !(*this == other); }

    /// Canonical total order on exact coordinate representations; this is
    /// what merges duplicate points in weighted sets.
    int compare(const Point& other) const;

    friend std::ostream& operator<<(std::ostream& os, const Point& p);

private:
    Space space_;
    std::vector<FieldElement> coords_;
};

/// A translation of k^n (an ordered point pair up to shift).
class FreeVector {
public:
    FreeVector(Space space, std::vector<FieldElement> coords)
        : space_(space), coords_(detail::checked_coords(space_, std::move(coords))) {}

    const Space& space() const { return space_; }
    const std::vector<FieldElement>& coords() const { return coords_; }
    const FieldElement& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;

    FreeVector operator+(const FreeVector& other) const;
    FreeVector operator-(const FreeVector& other) const;
    FreeVector operator-() const;
    FreeVector& operator+=(const FreeVector& other) { return *this = *this + other; }

    bool operator==(const FreeVector& other) const;
    bool operator!=(const FreeVector& other) const { return !(*this == other); }

    friend FreeVector operator*(const FieldElement& s, const FreeVector& v);
    friend std::ostream& operator<<(std::ostream& os, const FreeVector& v);

private:
    Space space_;
    std::vector<FieldElement> coords_;
};

/// The displacement to - from.
FreeVector free_vector(const Point& from, const Point& to);

/// The shift action of free vectors on points.
Point shift(const Point& p, const FreeVector& v);

/// Whether (a1,b1) and (a2,b2) define the same free vector.
bool pairs_equivalent(const Point& a1, const Point& b1,
                      const Point& a2, const Point& b2);

/// An affine map F(x) = A x + b between coordinate spaces. The domain is
/// (field, A.cols()), the codomain the translation's space.
class AffineMap {
public:
    AffineMap(Matrix linear_part, FreeVector translation);

    static AffineMap identity(const Space& space);

    const Matrix& linear_part() const { return linear_; }
    const FreeVector& translation() const { return translation_; }
    Space domain() const { return Space(linear_.field(), linear_.cols()); }
    Space codomain() const { return translation_.space(); }

    Point operator()(const Point& p) const;

    /// The induced map on free vectors (the linear part).
    FreeVector map_vector(const FreeVector& v) const;

    bool is_invertible() const { return linear_.is_invertible(); }

private:
    Matrix linear_;
    FreeVector translation_;
};

Point apply_affine(const AffineMap& f, const Point& p);

/// Composition f2 after f1.
AffineMap compose(const AffineMap& f2, const AffineMap& f1);

bool is_invertible(const AffineMap& f);

} // namespace masscalc
