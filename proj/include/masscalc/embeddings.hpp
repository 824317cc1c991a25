#pragma once

#include <masscalc/mass_element.hpp>

#include <iosfwd>
#include <vector>

namespace masscalc {

/// A polynomial of degree <= 1 on k^n: f(x) = linear . x + constant.
class Poly1 {
public:
    Poly1(Space space, std::vector<FieldElement> linear_coeffs, FieldElement constant);

    static Poly1 constant(const Space& space, const FieldElement& c);
    /// The coordinate function x_i.
    static Poly1 coordinate(const Space& space, std::size_t i);

    const Space& space() const { return space_; }
    const std::vector<FieldElement>& linear_coeffs() const { return linear_; }
    const FieldElement& constant_term() const { return constant_; }

    FieldElement operator()(const Point& p) const;
    /// The linear part applied to a free vector.
    FieldElement linear_part(const FreeVector& v) const;

    Poly1 operator+(const Poly1& other) const;
    friend Poly1 operator*(const FieldElement& s, const Poly1& f);

    friend std::ostream& operator<<(std::ostream& os, const Poly1& f);

private:
    Space space_;
    std::vector<FieldElement> linear_;
    FieldElement constant_;
};

/// A vector of k^(n+1), the ambient space in which k^n sits as the
/// hyperplane {last coordinate = 1}. Coordinates 1..n are the parallel
/// subspace part; the last coordinate is the value of T_L.
class AmbientVector {
public:
    AmbientVector(Field field, std::vector<FieldElement> coords);

    const Field& field() const { return field_; }
    /// Dimension n of the embedded affine space (one less than the length).
    std::size_t base_dim() const { return coords_.size() - 1; }
    const std::vector<FieldElement>& coords() const { return coords_; }
    const FieldElement& operator[](std::size_t i) const { return coords_[i]; }

    const FieldElement& last() const { return coords_.back(); }
    std::vector<FieldElement> first_n() const;

    AmbientVector operator+(const AmbientVector& other) const;
    friend AmbientVector operator*(const FieldElement& s, const AmbientVector& v);

    bool operator==(const AmbientVector& other) const;
    bool operator!=(const AmbientVector& other) const { return !(*this == other); }

    friend std::ostream& operator<<(std::ostream& os, const AmbientVector& v);

private:
    Field field_;
    std::vector<FieldElement> coords_;
};

/// The evaluation embedding of k^n into the dual of degree-<=1 polynomials,
/// written in the basis dual to (x_1, ..., x_n, 1): p |-> (p, 1). Lands on
/// the characteristic hyperplane and separates points.
AmbientVector kodaira(const Point& p);

/// The isomorphism of weighty points and dipoles with k^(n+1):
/// (O, lambda) |-> (lambda O, lambda), dipole v |-> (v, 0).
AmbientVector psi_lift(const MassElement& e);
MassElement psi_drop(const AmbientVector& w);

/// The unique linear extension of an affine map to the ambient spaces:
/// the block matrix [[A, b], [0, 1]]. The characteristic hyperplane and
/// the parallel subspace {last = 0} are invariant.
Matrix extend_affine_to_linear(const AffineMap& f);

/// Coefficients of the unique linear extension of f in the ambient dual:
/// (linear_coeffs, constant). Pairing with kodaira(p) recovers f(p).
AmbientVector extend_poly1_to_linear(const Poly1& f);

/// The dual pairing of extended-polynomial coefficients with an ambient
/// vector (coordinate dot product).
FieldElement ambient_pairing(const AmbientVector& coeffs, const AmbientVector& v);

/// The induced linear map on mass elements: weighty points move by F, the
/// mass unchanged; dipole vectors move by the linear part.
MassElement pushforward(const AffineMap& f, const MassElement& e);

/// The induced map on weighted sets (each support point moved by F).
WeightedSet pushforward(const AffineMap& f, const WeightedSet& s);

/// sum of mass_i * f(A_i). Equals lambda * f(center) for weighty sets and
/// the linear part on the dipole vector for weightless ones.
FieldElement kodaira_pairing(const WeightedSet& s, const Poly1& f);

/// Change of coordinates taking the hyperplane {c . x = 1} (not through
/// the origin, so c != 0) onto the characteristic hyperplane {last = 1}.
Matrix hyperplane_change_of_basis(const Field& field,
                                  const std::vector<FieldElement>& c);

} // namespace masscalc
