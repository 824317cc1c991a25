#include <masscalc/mass_element.hpp>

#include <ostream>
#include <vector>

namespace masscalc {

MassElement MassElement::weighty(const Point& point, const FieldElement& mass) {
    if (mass.field() != point.space().field())
        throw FieldMismatchError("mass from a different field");
    if (mass.is_zero()) return zero(point.space());
    return MassElement(point, mass);
}

MassElement MassElement::dipole(const FreeVector& vector) {
    return MassElement(vector);
}

MassElement MassElement::zero(const Space& space) {
    return MassElement(space.zero_vector());
}

const Space& MassElement::space() const {
    return is_weighty() ? point_->space() : vector_->space();
}

const Point& MassElement::point() const {
    if (!is_weighty()) throw Error("dipole has no point");
    return *point_;
}

const FieldElement& MassElement::mass() const {
    if (!is_weighty()) throw Error("dipole has no mass");
    return *mass_;
}

const FreeVector& MassElement::vector() const {
    if (!is_dipole()) throw Error("weighty point has no dipole vector");
    return *vector_;
}

FieldElement MassElement::total_mass() const {
    return is_weighty() ? *mass_ : space().field().zero();
}

bool MassElement::operator==(const MassElement& other) const {
    detail::require_same_space(space(), other.space());
    if (is_weighty() != other.is_weighty()) return false;
    if (is_weighty()) return *point_ == *other.point_ && *mass_ == *other.mass_;
    return *vector_ == *other.vector_;
}

std::ostream& operator<<(std::ostream& os, const MassElement& e) {
    if (e.is_weighty())
        return os << "Weighty(" << *e.point_ << ", " << *e.mass_ << ")";
    return os << "Dipole(" << *e.vector_ << ")";
}

MomentLikeMap tau(const MassElement& e) {
    if (e.is_dipole())
        return MomentLikeMap(e.vector(), e.space().field().zero());
    // First type: vanishes at the point, mass lambda.
    return MomentLikeMap::from_value_at(e.point(), e.space().zero_vector(), e.mass());
}

MassElement tau_inverse(const MomentLikeMap& p) {
    if (p.total_mass().is_zero()) return MassElement::dipole(p.value_at_origin());
    return MassElement::weighty(center_of_mass(p), p.total_mass());
}

MassElement add(const MassElement& e1, const MassElement& e2) {
    detail::require_same_space(e1.space(), e2.space());

    if (e1.is_weighty() && e2.is_weighty()) {
        const FieldElement mu = e1.mass(), rho = e2.mass();
        const FieldElement lambda = mu + rho;
        if (lambda.is_zero()) {
            // Weightless pair: the dipole vector is mu*A + rho*B = mu*(A - B).
            return MassElement::dipole(mu * free_vector(e2.point(), e1.point()));
        }
        // O = (mu/lambda) A + (rho/lambda) B
        const FieldElement inv = lambda.inverse();
        std::vector<FieldElement> coords;
        coords.reserve(e1.space().dim());
        for (std::size_t i = 0; i < e1.space().dim(); ++i)
            coords.push_back(mu * inv * e1.point()[i] + rho * inv * e2.point()[i]);
        return MassElement::weighty(Point(e1.space(), std::move(coords)), lambda);
    }

    if (e1.is_dipole() && e2.is_dipole())
        return MassElement::dipole(e1.vector() + e2.vector());

    // Weighty point plus dipole: shift the point by lambda^{-1} v.
    const MassElement& wp = e1.is_weighty() ? e1 : e2;
    const MassElement& dp = e1.is_weighty() ? e2 : e1;
    return MassElement::weighty(
        shift(wp.point(), wp.mass().inverse() * dp.vector()), wp.mass());
}

MassElement scale(const FieldElement& mu, const MassElement& e) {
    if (mu.field() != e.space().field())
        throw FieldMismatchError("scalar from a different field");
    if (e.is_dipole()) return MassElement::dipole(mu * e.vector());
    if (mu.is_zero()) return MassElement::zero(e.space());
    return MassElement::weighty(e.point(), mu * e.mass());
}

MassElement reduce(const WeightedSet& s) {
    return tau_inverse(moment_correspondence(s));
}

namespace {

// Center of a weighty pair, with the pair's mass: the replacement step of
// the inductive procedure.
std::pair<Point, FieldElement> two_point_center(const Point& a, const FieldElement& mu,
                                                const Point& b, const FieldElement& rho) {
    const FieldElement lambda = mu + rho;
    const FieldElement inv = lambda.inverse();
    std::vector<FieldElement> coords;
    coords.reserve(a.space().dim());
    for (std::size_t i = 0; i < a.space().dim(); ++i)
        coords.push_back(mu * inv * a[i] + rho * inv * b[i]);
    return {Point(a.space(), std::move(coords)), lambda};
}

Point classical_impl(const WeightedSet& s, std::mt19937_64* rng) {
    if (s.space().field().characteristic() == 2)
        throw UnsupportedCharacteristicError(
            "the classical procedure divides by two; use reduce over characteristic 2");
    if (total_mass(s).is_zero())
        throw NoCenterOfMassError("weightless set has no classical center of mass");

    WeightedSet work = s;
    while (work.size() > 1) {
        std::vector<std::pair<Point, FieldElement>> pts(work.entries().begin(),
                                                        work.entries().end());
        // Over characteristic != 2 a weighty multi-point set always contains
        // a weighty pair (all-pairs-weightless forces 2m = 0).
        std::vector<std::pair<std::size_t, std::size_t>> weighty_pairs;
        for (std::size_t i = 0; i < pts.size() && (rng || weighty_pairs.empty()); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (!(pts[i].second + pts[j].second).is_zero())
                    weighty_pairs.emplace_back(i, j);
        if (weighty_pairs.empty())
            throw Error("no weighty pair found in a weighty set");
        auto [i, j] = rng ? weighty_pairs[(*rng)() % weighty_pairs.size()]
                          : weighty_pairs.front();

        auto [center, lambda] = two_point_center(pts[i].first, pts[i].second,
                                                 pts[j].first, pts[j].second);
        work.add_mass(pts[i].first, -pts[i].second);
        work.add_mass(pts[j].first, -pts[j].second);
        work.add_mass(center, lambda);
    }
    return work.entries().begin()->first;
}

} // namespace

Point classical_center_of_mass(const WeightedSet& s) {
    return classical_impl(s, nullptr);
}

Point classical_center_of_mass(const WeightedSet& s, std::mt19937_64& rng) {
    return classical_impl(s, &rng);
}

} // namespace masscalc
