#include <masscalc/moment_like.hpp>

#include <ostream>

namespace masscalc {

MomentLikeMap::MomentLikeMap(FreeVector value_at_origin, FieldElement total_mass)
    : base_value_(std::move(value_at_origin)), total_mass_(std::move(total_mass)) {
    if (total_mass_.field() != base_value_.space().field())
        throw FieldMismatchError("total mass from a different field");
}

MomentLikeMap MomentLikeMap::from_value_at(const Point& q, const FreeVector& v,
                                           const FieldElement& total_mass) {
    detail::require_same_space(q.space(), v.space());
    // P(origin) = P(q) - lambda (origin - q) = v + lambda * q
    FreeVector at_origin = v + total_mass * q.position_vector();
    return MomentLikeMap(std::move(at_origin), total_mass);
}

MomentLikeMap MomentLikeMap::zero(const Space& space) {
    return MomentLikeMap(space.zero_vector(), space.field().zero());
}

FreeVector MomentLikeMap::evaluate(const Point& q) const {
    detail::require_same_space(q.space(), space());
    return base_value_ - total_mass_ * q.position_vector();
}

MomentLikeMap MomentLikeMap::operator+(const MomentLikeMap& other) const {
    return MomentLikeMap(base_value_ + other.base_value_,
                         total_mass_ + other.total_mass_);
}

MomentLikeMap MomentLikeMap::operator-() const {
    return MomentLikeMap(-base_value_, -total_mass_);
}

MomentLikeMap operator*(const FieldElement& s, const MomentLikeMap& p) {
    return MomentLikeMap(s * p.base_value_, s * p.total_mass_);
}

bool MomentLikeMap::operator==(const MomentLikeMap& other) const {
    return base_value_ == other.base_value_ && total_mass_ == other.total_mass_;
}

std::ostream& operator<<(std::ostream& os, const MomentLikeMap& p) {
    return os << "MomentLikeMap(at_origin=" << p.base_value_
              << ", mass=" << p.total_mass_ << ")";
}

FreeVector evaluate(const MomentLikeMap& p, const Point& q) { return p.evaluate(q); }

Point center_of_mass(const MomentLikeMap& p) {
    if (p.total_mass().is_zero())
        throw NoCenterOfMassError("map with zero total mass has no center of mass");
    // O = origin + lambda^{-1} P(origin)
    FieldElement inv = p.total_mass().inverse();
    return shift(p.space().origin(), inv * p.value_at_origin());
}

MomentLikeMap normalize(const MomentLikeMap& p) {
    if (p.total_mass().is_zero())
        throw NoCenterOfMassError("cannot normalize a map with zero total mass");
    return p.total_mass().inverse() * p;
}

MomentLikeMap moment_correspondence(const WeightedSet& s) {
    return MomentLikeMap(moment_about(s, s.space().origin()), total_mass(s));
}

} // namespace masscalc
