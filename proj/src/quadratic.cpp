#include <masscalc/quadratic.hpp>

#include <ostream>

namespace masscalc {

BilinearForm::BilinearForm(Matrix matrix)
    : matrix_(matrix), inverse_(matrix.field(), 0, 0) {
    if (matrix_.rows() != matrix_.cols())
        throw DimensionMismatchError("bilinear form matrix must be square");
    if (matrix_.field().characteristic() == 2)
        throw UnsupportedCharacteristicError(
            "quadratic-form calculus uses F = -2B and is undefined over characteristic 2");
    if (matrix_ != matrix_.transposed())
        throw DegenerateFormError("bilinear form matrix must be symmetric");
    if (matrix_.determinant().is_zero())
        throw DegenerateFormError("bilinear form must be non-degenerate");
    inverse_ = matrix_.inverse();
}

BilinearForm BilinearForm::standard(const Space& space) {
    return BilinearForm(Matrix::identity(space.field(), space.dim()));
}

FieldElement BilinearForm::apply(const FreeVector& u, const FreeVector& v) const {
    detail::require_same_space(u.space(), space());
    detail::require_same_space(v.space(), space());
    std::vector<FieldElement> mv = matrix_ * v.coords();
    FieldElement acc = matrix_.field().zero();
    for (std::size_t i = 0; i < mv.size(); ++i)
        acc += u[i] * mv[i];
    return acc;
}

FieldElement BilinearForm::quad(const FreeVector& v) const { return apply(v, v); }

FieldElement BilinearForm::quad(const Point& p) const {
    return quad(p.position_vector());
}

FreeVector BilinearForm::dual_vector(const std::vector<FieldElement>& l) const {
    if (l.size() != matrix_.rows())
        throw DimensionMismatchError("functional length must match the form dimension");
    // -2 B b = l  =>  b = -(1/2) B^{-1} l
    const Field& k = matrix_.field();
    FieldElement coeff = -(k.element(2).inverse());
    std::vector<FieldElement> b = inverse_ * l;
    for (auto& c : b) c *= coeff;
    return FreeVector(space(), std::move(b));
}

QuadPoly::QuadPoly(BilinearForm form, FieldElement lambda,
                   std::vector<FieldElement> linear_coeffs, FieldElement constant)
    : form_(std::move(form)), lambda_(std::move(lambda)),
      linear_(std::move(linear_coeffs)), constant_(std::move(constant)) {
    if (linear_.size() != form_.space().dim())
        throw DimensionMismatchError("linear coefficient count must match the dimension");
    const Field k = form_.matrix().field();
    if (lambda_.field() != k || constant_.field() != k)
        throw FieldMismatchError("coefficient from a different field");
    for (const auto& c : linear_)
        if (c.field() != k) throw FieldMismatchError("coefficient from a different field");
}

std::ostream& operator<<(std::ostream& os, const QuadPoly& t) {
    os << "QuadPoly(lambda=" << t.lambda_ << ", l=(";
    for (std::size_t i = 0; i < t.linear_.size(); ++i)
        os << (i ? ", " : "") << t.linear_[i];
    return os << "), c=" << t.constant_ << ")";
}

FieldElement evaluate_quad(const QuadPoly& t, const Point& x) {
    detail::require_same_space(t.space(), x.space());
    FieldElement acc = t.lambda() * t.form().quad(x);
    for (std::size_t i = 0; i < t.linear_coeffs().size(); ++i)
        acc += t.linear_coeffs()[i] * x[i];
    return acc + t.constant_term();
}

MomentLikeMap f_gradient_map(const QuadPoly& t) {
    FreeVector b = t.form().dual_vector(t.linear_coeffs());
    return MomentLikeMap(b, t.lambda());
}

Point critical_point(const QuadPoly& t) {
    if (t.lambda().is_zero())
        throw NoCriticalPointError("polynomial with zero quadratic part has no critical point");
    return center_of_mass(f_gradient_map(t));
}

QuadPoly sum_of_shifted_quadratics(const WeightedSet& s, const BilinearForm& form) {
    detail::require_same_space(s.space(), form.space());
    const Field& k = s.space().field();
    // sum m_i Q(x - A_i) = lambda Q(x) - 2 B(sum m_i A_i, x) + sum m_i Q(A_i)
    FieldElement lambda = total_mass(s);
    FreeVector weighted_sum = s.space().zero_vector();
    FieldElement constant = k.zero();
    for (const auto& [p, mass] : s.entries()) {
        weighted_sum += mass * p.position_vector();
        constant += mass * form.quad(p);
    }
    std::vector<FieldElement> linear = form.matrix() * weighted_sum.coords();
    FieldElement minus_two = -k.element(2);
    for (auto& c : linear) c *= minus_two;
    return QuadPoly(form, lambda, std::move(linear), constant);
}

FieldElement CanonicalQuadForm::evaluate(const Point& x) const {
    if (is_weighty()) {
        FreeVector d = free_vector(*center, x);
        return lambda * form.quad(d) + c0;
    }
    return (*residual)(x);
}

CanonicalQuadForm canonical_form(const WeightedSet& s, const BilinearForm& form) {
    detail::require_same_space(s.space(), form.space());
    const Field& k = s.space().field();
    FieldElement sum_q = k.zero();
    for (const auto& [p, mass] : s.entries()) sum_q += mass * form.quad(p);

    MassElement cls = reduce(s);
    if (cls.is_weighty()) {
        const Point& center = cls.point();
        FieldElement c0 = sum_q - cls.mass() * form.quad(center);
        return CanonicalQuadForm{form, cls.mass(), center, std::nullopt, c0};
    }
    // Weightless: T(x) = -2B(d, x) + c0 with d the dipole vector.
    std::vector<FieldElement> linear = form.matrix() * cls.vector().coords();
    FieldElement minus_two = -k.element(2);
    for (auto& c : linear) c *= minus_two;
    Poly1 residual(s.space(), std::move(linear), sum_q);
    return CanonicalQuadForm{form, k.zero(), std::nullopt, residual, sum_q};
}

} // namespace masscalc
