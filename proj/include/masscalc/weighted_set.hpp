#pragma once

#include <masscalc/affine.hpp>

#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace masscalc {

/// A finite-support mass distribution on k^n: the vector space D(L).
/// Coincident points merge by mass addition and zero-mass entries are
/// dropped, so a WeightedSet is exactly a finite-support function L -> k.
class WeightedSet {
public:
    struct PointOrder {
        bool operator()(const Point& a, const Point& b) const {
            return a.compare(b) < 0;
        }
    };
    using Entries = std::map<Point, FieldElement, PointOrder>;

    explicit WeightedSet(Space space) : space_(space) {}
    WeightedSet(Space space, std::initializer_list<std::pair<Point, FieldElement>> entries);

    const Space& space() const { return space_; }
    const Entries& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Adds mass at a point, merging with any existing entry; an entry
    /// whose mass becomes zero is removed.
    void add_mass(const Point& p, const FieldElement& mass);

    /// The mass at p (zero when p is not in the support).
    FieldElement mass_at(const Point& p) const;

    bool operator==(const WeightedSet& other) const;
    bool operator!=(const WeightedSet& other) const { return !(*this == other); }

    friend std::ostream& operator<<(std::ostream& os, const WeightedSet& s);

private:
    Space space_;
    Entries entries_;
};

/// Sum of all masses; a linear functional on D(L).
FieldElement total_mass(const WeightedSet& s);

/// alpha*s + beta*t as finite-support functions.
WeightedSet linear_combine(const FieldElement& alpha, const WeightedSet& s,
                           const FieldElement& beta, const WeightedSet& t);

/// The moment of s about a pivot: sum of mass_i * (A_i - pivot).
FreeVector moment_about(const WeightedSet& s, const Point& pivot);

/// True iff total mass and moment vanish. One pivot suffices: once the
/// total mass is zero the moment is pivot-independent.
bool is_null_set(const WeightedSet& s);

/// True iff s - t is a null set, i.e. the moments agree about every pivot.
bool sets_equivalent(const WeightedSet& s, const WeightedSet& t);

} // namespace masscalc
