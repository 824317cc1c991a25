#pragma once

#include <masscalc/embeddings.hpp>

#include <iosfwd>
#include <optional>

namespace masscalc {

/// A non-degenerate symmetric bilinear form B on k^n, characteristic != 2.
/// The inverse is computed once at construction; it backs the dual-vector
/// solve used by F-gradients (F = -2B).
class BilinearForm {
public:
    explicit BilinearForm(Matrix matrix);

    /// The standard dot product.
    static BilinearForm standard(const Space& space);

    const Matrix& matrix() const { return matrix_; }
    const Matrix& inverse_matrix() const { return inverse_; }
    Space space() const { return Space(matrix_.field(), matrix_.rows()); }

    /// B(u, v).
    FieldElement apply(const FreeVector& u, const FreeVector& v) const;
    /// The quadratic form Q_B(v) = B(v, v).
    FieldElement quad(const FreeVector& v) const;
    /// Q_B of a point's position vector.
    FieldElement quad(const Point& p) const;

    /// The vector b dual to a linear functional l under F = -2B, i.e. the
    /// unique b with -2 B(b, y) = l(y) for all y.
    FreeVector dual_vector(const std::vector<FieldElement>& l) const;

private:
    Matrix matrix_;
    Matrix inverse_;
};

/// A polynomial T(x) = lambda Q_B(x) + l(x) + c on k^n; the space of such
/// polynomials for a fixed B has dimension n + 2.
class QuadPoly {
public:
    QuadPoly(BilinearForm form, FieldElement lambda,
             std::vector<FieldElement> linear_coeffs, FieldElement constant);

    const BilinearForm& form() const { return form_; }
    const FieldElement& lambda() const { return lambda_; }
    const std::vector<FieldElement>& linear_coeffs() const { return linear_; }
    const FieldElement& constant_term() const { return constant_; }
    Space space() const { return form_.space(); }

    friend std::ostream& operator<<(std::ostream& os, const QuadPoly& t);

private:
    BilinearForm form_;
    FieldElement lambda_;
    std::vector<FieldElement> linear_;
    FieldElement constant_;
};

FieldElement evaluate_quad(const QuadPoly& t, const Point& x);

/// The F-gradient of T as a moment-like map, F = -2B: x |-> -lambda x + b
/// with b the F-dual of the linear part. Total mass lambda.
MomentLikeMap f_gradient_map(const QuadPoly& t);

/// The unique critical point of T (the differential vanishes there);
/// requires lambda != 0.
Point critical_point(const QuadPoly& t);

/// Expands T(x) = sum of mass_i * Q_B(x - A_i) into the (lambda, l, c)
/// representation.
QuadPoly sum_of_shifted_quadratics(const WeightedSet& s, const BilinearForm& form);

/// The reduced form of a sum of shifted quadratics: for weighty s,
/// T(x) = lambda Q_B(x - center) + c0; for weightless s, T(x) = residual(x)
/// with residual the degree-<=1 polynomial -2B(d, x) + c0 built from the
/// dipole vector d.
struct CanonicalQuadForm {
    BilinearForm form;
    FieldElement lambda;
    std::optional<Point> center;   // set iff lambda != 0
    std::optional<Poly1> residual; // set iff lambda == 0 (l plus constant)
    FieldElement c0;

    bool is_weighty() const { return center.has_value(); }
    FieldElement evaluate(const Point& x) const;
};

CanonicalQuadForm canonical_form(const WeightedSet& s, const BilinearForm& form);

} // namespace masscalc
