#pragma once

// Shared generators for the property tests. Everything is seeded, so runs
// are reproducible.

#include <masscalc/embeddings.hpp>
#include <masscalc/weighted_set.hpp>

#include <random>
#include <vector>

namespace masscalc::testing {

inline FieldElement random_element(const Field& field, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-20, 20);
    switch (field.kind()) {
    case FieldKind::Rational: {
        std::uniform_int_distribution<long long> den(1, 12);
        return field.ratio(num(rng), den(rng));
    }
    case FieldKind::Prime: {
        std::uniform_int_distribution<std::uint64_t> residue(0, field.characteristic() - 1);
        return field.parse(std::to_string(residue(rng)));
    }
    case FieldKind::Float: {
        std::uniform_int_distribution<long long> den(1, 12);
        return field.element(num(rng)) / field.element(den(rng));
    }
    }
    return field.zero();
}

inline FieldElement random_nonzero(const Field& field, std::mt19937_64& rng) {
    for (;;) {
        FieldElement e = random_element(field, rng);
        if (!e.is_zero()) return e;
    }
}

inline Point random_point(const Space& space, std::mt19937_64& rng) {
    std::vector<FieldElement> coords;
    coords.reserve(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i)
        coords.push_back(random_element(space.field(), rng));
    return Point(space, std::move(coords));
}

inline FreeVector random_vector(const Space& space, std::mt19937_64& rng) {
    std::vector<FieldElement> coords;
    coords.reserve(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i)
        coords.push_back(random_element(space.field(), rng));
    return FreeVector(space, std::move(coords));
}

inline WeightedSet random_set(const Space& space, std::mt19937_64& rng,
                              std::size_t max_points = 6) {
    std::uniform_int_distribution<std::size_t> count(0, max_points);
    WeightedSet s(space);
    std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i)
        s.add_mass(random_point(space, rng), random_element(space.field(), rng));
    return s;
}

inline WeightedSet random_weighty_set(const Space& space, std::mt19937_64& rng,
                                      std::size_t max_points = 6) {
    for (;;) {
        WeightedSet s = random_set(space, rng, max_points);
        if (!s.empty() && !total_mass(s).is_zero()) return s;
    }
}

inline Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
    std::vector<FieldElement> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i)
        entries.push_back(random_element(field, rng));
    return Matrix(field, rows, cols, std::move(entries));
}

inline Matrix random_invertible_matrix(const Field& field, std::size_t n,
                                       std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(field, n, n, rng);
        if (m.is_invertible()) return m;
    }
}

inline AffineMap random_affine_map(const Space& domain, const Space& codomain,
                                   std::mt19937_64& rng) {
    return AffineMap(random_matrix(domain.field(), codomain.dim(), domain.dim(), rng),
                     random_vector(codomain, rng));
}

inline MassElement random_mass_element(const Space& space, std::mt19937_64& rng) {
    if (rng() % 2 == 0)
        return MassElement::weighty(random_point(space, rng),
                                    random_nonzero(space.field(), rng));
    return MassElement::dipole(random_vector(space, rng));
}

inline Poly1 random_poly1(const Space& space, std::mt19937_64& rng) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i)
        coeffs.push_back(random_element(space.field(), rng));
    return Poly1(space, std::move(coeffs), random_element(space.field(), rng));
}

} // namespace masscalc::testing
