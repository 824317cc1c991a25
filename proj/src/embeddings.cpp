#include <masscalc/embeddings.hpp>

#include <ostream>

namespace masscalc {

Poly1::Poly1(Space space, std::vector<FieldElement> linear_coeffs, FieldElement constant)
    : space_(space), linear_(std::move(linear_coeffs)), constant_(std::move(constant)) {
    if (linear_.size() != space_.dim())
        throw DimensionMismatchError("polynomial coefficient count must match the dimension");
    for (const auto& c : linear_)
        if (c.field() != space_.field())
            throw FieldMismatchError("coefficient from a different field");
    if (constant_.field() != space_.field())
        throw FieldMismatchError("constant from a different field");
}

Poly1 Poly1::constant(const Space& space, const FieldElement& c) {
    return Poly1(space, std::vector<FieldElement>(space.dim(), space.field().zero()), c);
}

Poly1 Poly1::coordinate(const Space& space, std::size_t i) {
    std::vector<FieldElement> coeffs(space.dim(), space.field().zero());
    coeffs.at(i) = space.field().one();
    return Poly1(space, std::move(coeffs), space.field().zero());
}

FieldElement Poly1::operator()(const Point& p) const {
    detail::require_same_space(p.space(), space_);
    FieldElement acc = constant_;
    for (std::size_t i = 0; i < linear_.size(); ++i)
        acc += linear_[i] * p[i];
    return acc;
}

FieldElement Poly1::linear_part(const FreeVector& v) const {
    detail::require_same_space(v.space(), space_);
    FieldElement acc = space_.field().zero();
    for (std::size_t i = 0; i < linear_.size(); ++i)
        acc += linear_[i] * v[i];
    return acc;
}

Poly1 Poly1::operator+(const Poly1& other) const {
    detail::require_same_space(space_, other.space_);
    std::vector<FieldElement> coeffs;
    coeffs.reserve(linear_.size());
    for (std::size_t i = 0; i < linear_.size(); ++i)
        coeffs.push_back(linear_[i] + other.linear_[i]);
    return Poly1(space_, std::move(coeffs), constant_ + other.constant_);
}

Poly1 operator*(const FieldElement& s, const Poly1& f) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(f.linear_.size());
    for (const auto& c : f.linear_) coeffs.push_back(s * c);
    return Poly1(f.space_, std::move(coeffs), s * f.constant_);
}

std::ostream& operator<<(std::ostream& os, const Poly1& f) {
    os << "Poly1(";
    for (std::size_t i = 0; i < f.linear_.size(); ++i)
        os << (i ? ", " : "") << f.linear_[i];
    return os << " | " << f.constant_ << ")";
}

AmbientVector::AmbientVector(Field field, std::vector<FieldElement> coords)
    : field_(field), coords_(std::move(coords)) {
    if (coords_.empty())
        throw DimensionMismatchError("ambient vector needs at least one coordinate");
    for (const auto& c : coords_)
        if (c.field() != field_)
            throw FieldMismatchError("coordinate from a different field");
}

std::vector<FieldElement> AmbientVector::first_n() const {
    return std::vector<FieldElement>(coords_.begin(), coords_.end() - 1);
}

AmbientVector AmbientVector::operator+(const AmbientVector& other) const {
    if (field_ != other.field_) throw FieldMismatchError("ambient vectors from different fields");
    if (coords_.size() != other.coords_.size())
        throw DimensionMismatchError("ambient vectors of different lengths");
    std::vector<FieldElement> out;
    out.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out.push_back(coords_[i] + other.coords_[i]);
    return AmbientVector(field_, std::move(out));
}

AmbientVector operator*(const FieldElement& s, const AmbientVector& v) {
    std::vector<FieldElement> out;
    out.reserve(v.coords_.size());
    for (const auto& c : v.coords_) out.push_back(s * c);
    return AmbientVector(v.field_, std::move(out));
}

bool AmbientVector::operator==(const AmbientVector& other) const {
    if (field_ != other.field_) throw FieldMismatchError("ambient vectors from different fields");
    if (coords_.size() != other.coords_.size()) return false;
    return detail::coords_equal(coords_, other.coords_);
}

std::ostream& operator<<(std::ostream& os, const AmbientVector& v) {
    os << "[";
    for (std::size_t i = 0; i < v.coords_.size(); ++i)
        os << (i ? ", " : "") << v.coords_[i];
    return os << "]";
}

AmbientVector kodaira(const Point& p) {
    std::vector<FieldElement> coords = p.coords();
    coords.push_back(p.space().field().one());
    return AmbientVector(p.space().field(), std::move(coords));
}

AmbientVector psi_lift(const MassElement& e) {
    const Field& k = e.space().field();
    std::vector<FieldElement> coords;
    coords.reserve(e.space().dim() + 1);
    if (e.is_weighty()) {
        for (const auto& c : e.point().coords()) coords.push_back(e.mass() * c);
        coords.push_back(e.mass());
    } else {
        coords = e.vector().coords();
        coords.push_back(k.zero());
    }
    return AmbientVector(k, std::move(coords));
}

MassElement psi_drop(const AmbientVector& w) {
    Space space(w.field(), w.base_dim());
    const FieldElement& lambda = w.last();
    if (lambda.is_zero())
        return MassElement::dipole(FreeVector(space, w.first_n()));
    FieldElement inv = lambda.inverse();
    std::vector<FieldElement> coords = w.first_n();
    for (auto& c : coords) c *= inv;
    return MassElement::weighty(Point(space, std::move(coords)), lambda);
}

Matrix extend_affine_to_linear(const AffineMap& f) {
    const Field& k = f.linear_part().field();
    std::size_t n_in = f.linear_part().cols();
    std::size_t n_out = f.linear_part().rows();
    Matrix out(k, n_out + 1, n_in + 1);
    for (std::size_t i = 0; i < n_out; ++i) {
        for (std::size_t j = 0; j < n_in; ++j)
            out.at(i, j) = f.linear_part().at(i, j);
        out.at(i, n_in) = f.translation()[i];
    }
    out.at(n_out, n_in) = k.one();
    return out;
}

AmbientVector extend_poly1_to_linear(const Poly1& f) {
    std::vector<FieldElement> coords = f.linear_coeffs();
    coords.push_back(f.constant_term());
    return AmbientVector(f.space().field(), std::move(coords));
}

FieldElement ambient_pairing(const AmbientVector& coeffs, const AmbientVector& v) {
    if (coeffs.field() != v.field())
        throw FieldMismatchError("pairing operands from different fields");
    if (coeffs.coords().size() != v.coords().size())
        throw DimensionMismatchError("pairing operands of different lengths");
    FieldElement acc = coeffs.field().zero();
    for (std::size_t i = 0; i < coeffs.coords().size(); ++i)
        acc += coeffs[i] * v[i];
    return acc;
}

MassElement pushforward(const AffineMap& f, const MassElement& e) {
    detail::require_same_space(f.domain(), e.space());
    if (e.is_weighty()) return MassElement::weighty(f(e.point()), e.mass());
    return MassElement::dipole(f.map_vector(e.vector()));
}

WeightedSet pushforward(const AffineMap& f, const WeightedSet& s) {
    detail::require_same_space(f.domain(), s.space());
    WeightedSet out(f.codomain());
    for (const auto& [p, mass] : s.entries()) out.add_mass(f(p), mass);
    return out;
}

FieldElement kodaira_pairing(const WeightedSet& s, const Poly1& f) {
    detail::require_same_space(s.space(), f.space());
    FieldElement acc = s.space().field().zero();
    for (const auto& [p, mass] : s.entries()) acc += mass * f(p);
    return acc;
}

Matrix hyperplane_change_of_basis(const Field& field,
                                  const std::vector<FieldElement>& c) {
    const std::size_t n = c.size();
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
        if (!c[i].is_zero()) { pivot = i; break; }
    if (pivot == n)
        throw DegenerateConfigurationError("hyperplane functional must be nonzero");
    // Rows: standard basis vectors skipping the pivot axis, then c itself;
    // the determinant is +-c[pivot] != 0.
    Matrix m(field, n, n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == pivot) continue;
        m.at(row++, i) = field.one();
    }
    for (std::size_t j = 0; j < n; ++j) m.at(n - 1, j) = c[j];
    return m;
}

} // namespace masscalc
