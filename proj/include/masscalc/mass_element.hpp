#pragma once

#include <masscalc/moment_like.hpp>

#include <iosfwd>
#include <optional>
#include <random>

namespace masscalc {

/// An element of the (n+1)-dimensional space of weighty points and mass
/// dipoles: either a point carrying a nonzero mass, or a dipole identified
/// with its free vector. The zero element is the zero dipole.
class MassElement {
public:
    /// Weighty point; zero mass normalizes to the zero dipole.
    static MassElement weighty(const Point& point, const FieldElement& mass);
    static MassElement dipole(const FreeVector& vector);
    static MassElement zero(const Space& space);

    bool is_weighty() const { return mass_.has_value(); }
    bool is_dipole() const { return !mass_.has_value(); }

    const Space& space() const;

    /// Location of a weighty point; throws on dipoles.
    const Point& point() const;
    /// Mass of a weighty point; throws on dipoles.
    const FieldElement& mass() const;
    /// Vector of a dipole; throws on weighty points.
    const FreeVector& vector() const;

    /// Total mass as a linear functional: the mass, or zero for dipoles.
    FieldElement total_mass() const;

    bool operator==(const MassElement& other) const;
    bool operator!=(const MassElement& other) const { return !(*this == other); }

    friend std::ostream& operator<<(std::ostream& os, const MassElement& e);

private:
    MassElement(Point point, FieldElement mass)
        : point_(std::move(point)), mass_(std::move(mass)) {}
    explicit MassElement(FreeVector vector) : vector_(std::move(vector)) {}

    // Exactly one of (point_, mass_) or vector_ is set.
    std::optional<Point> point_;
    std::optional<FieldElement> mass_;
    std::optional<FreeVector> vector_;
};

/// The correspondence with moment-like maps: a weighty point goes to the
/// map with its mass and center, a dipole to the constant map.
MomentLikeMap tau(const MassElement& e);
MassElement tau_inverse(const MomentLikeMap& p);

/// Addition by the four explicit rules (two weighty points with nonzero or
/// zero mass sum, point plus dipole, dipole plus dipole). Always agrees
/// with tau_inverse(tau(e1) + tau(e2)).
MassElement add(const MassElement& e1, const MassElement& e2);

MassElement scale(const FieldElement& mu, const MassElement& e);

/// The class of a weighted set in D(L)/DM(L): its center of mass with its
/// total mass when weighty, its dipole vector otherwise.
MassElement reduce(const WeightedSet& s);

/// The classical inductive procedure: repeatedly replace a weighty pair by
/// its two-point center carrying the pair's mass. Requires nonzero total
/// mass and characteristic != 2. Pair selection is deterministic (first
/// weighty pair in canonical order) unless an rng is supplied.
Point classical_center_of_mass(const WeightedSet& s);
Point classical_center_of_mass(const WeightedSet& s, std::mt19937_64& rng);

} // namespace masscalc
