#pragma once

#include <masscalc/weighted_set.hpp>

#include <iosfwd>

namespace masscalc {

/// An affine map P: L -> L-bar whose linear part is -lambda * identity,
/// stored as its value at the coordinate origin together with lambda.
/// Evaluation follows P(Q) = P(origin) - lambda * (Q - origin), so the
/// characteristic identity P(O2) - P(O1) = -lambda (O2 - O1) holds by
/// construction. The space of these maps has dimension n + 1.
class MomentLikeMap {
public:
    MomentLikeMap(FreeVector value_at_origin, FieldElement total_mass);

    /// The unique moment-like map with the given total mass whose value at
    /// q is v.
    static MomentLikeMap from_value_at(const Point& q, const FreeVector& v,
                                       const FieldElement& total_mass);

    static MomentLikeMap zero(const Space& space);

    const Space& space() const { return base_value_.space(); }
    const FreeVector& value_at_origin() const { return base_value_; }
    const FieldElement& total_mass() const { return total_mass_; }

    FreeVector evaluate(const Point& q) const;

    bool is_constant() const { return total_mass_.is_zero(); }

    MomentLikeMap operator+(const MomentLikeMap& other) const;
    MomentLikeMap operator-() const;
    friend MomentLikeMap operator*(const FieldElement& s, const MomentLikeMap& p);

    bool operator==(const MomentLikeMap& other) const;
    bool operator!=(const MomentLikeMap& other) const { return !(*this == other); }

    friend std::ostream& operator<<(std::ostream& os, const MomentLikeMap& p);

private:
    FreeVector base_value_;
    FieldElement total_mass_;
};

FreeVector evaluate(const MomentLikeMap& p, const Point& q);

/// The unique point where p vanishes; requires nonzero total mass.
Point center_of_mass(const MomentLikeMap& p);

/// lambda^{-1} * p: total mass one, same vanishing point.
MomentLikeMap normalize(const MomentLikeMap& p);

/// The moment correspondence D(L) -> M(L): s |-> its moment map.
MomentLikeMap moment_correspondence(const WeightedSet& s);

} // namespace masscalc
