#include <masscalc/weighted_set.hpp>

#include <ostream>

namespace masscalc {

WeightedSet::WeightedSet(Space space,
                         std::initializer_list<std::pair<Point, FieldElement>> entries)
    : space_(space) {
    for (const auto& [p, mass] : entries) add_mass(p, mass);
}

void WeightedSet::add_mass(const Point& p, const FieldElement& mass) {
    detail::require_same_space(p.space(), space_);
    if (mass.field() != space_.field())
        throw FieldMismatchError("mass from a different field");
    auto it = entries_.find(p);
    if (it == entries_.end()) {
        if (!mass.is_zero()) entries_.emplace(p, mass);
        return;
    }
    it->second += mass;
    if (it->second.is_zero()) entries_.erase(it);
}

FieldElement WeightedSet::mass_at(const Point& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? space_.field().zero() : it->second;
}

bool WeightedSet::operator==(const WeightedSet& other) const {
    detail::require_same_space(space_, other.space_);
    if (entries_.size() != other.entries_.size()) return false;
    auto it = other.entries_.begin();
    for (const auto& [p, mass] : entries_) {
        if (p != it->first || mass != it->second) return false;
        ++it;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const WeightedSet& s) {
    os << "{";
    bool first = true;
    for (const auto& [p, mass] : s.entries_) {
        os << (first ? "" : ", ") << p << ": " << mass;
        first = false;
    }
    return os << "}";
}

FieldElement total_mass(const WeightedSet& s) {
    FieldElement sum = s.space().field().zero();
    for (const auto& [p, mass] : s.entries()) sum += mass;
    return sum;
}

WeightedSet linear_combine(const FieldElement& alpha, const WeightedSet& s,
                           const FieldElement& beta, const WeightedSet& t) {
    detail::require_same_space(s.space(), t.space());
    WeightedSet out(s.space());
    for (const auto& [p, mass] : s.entries()) out.add_mass(p, alpha * mass);
    for (const auto& [p, mass] : t.entries()) out.add_mass(p, beta * mass);
    return out;
}

FreeVector moment_about(const WeightedSet& s, const Point& pivot) {
    detail::require_same_space(s.space(), pivot.space());
    FreeVector result = s.space().zero_vector();
    for (const auto& [p, mass] : s.entries())
        result += mass * free_vector(pivot, p);
    return result;
}

bool is_null_set(const WeightedSet& s) {
    if (!total_mass(s).is_zero()) return false;
    return moment_about(s, s.space().origin()).is_zero();
}

bool sets_equivalent(const WeightedSet& s, const WeightedSet& t) {
    const Field& f = s.space().field();
    return is_null_set(linear_combine(f.one(), s, -f.one(), t));
}

} // namespace masscalc
