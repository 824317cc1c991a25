#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <masscalc/quadratic.hpp>

#include <cmath>

using namespace masscalc;
namespace mt = masscalc::testing;

namespace {

const Field kQ = Field::rationals();
const Space kPlane(kQ, 2);

Point pt(long long x, long long y) {
    return Point(kPlane, {kQ.element(x), kQ.element(y)});
}

BilinearForm random_form(const Space& sp, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = mt::random_matrix(sp.field(), sp.dim(), sp.dim(), rng);
        Matrix sym = m + m.transposed();
        if (!sym.determinant().is_zero()) return BilinearForm(sym);
    }
}

// Term-by-term oracle for T(x) = lambda B(x,x) + l(x) + c.
FieldElement evaluate_oracle(const QuadPoly& t, const Point& x) {
    const Field& k = x.space().field();
    FieldElement quad = k.zero();
    for (std::size_t i = 0; i < x.coords().size(); ++i)
        for (std::size_t j = 0; j < x.coords().size(); ++j)
            quad += x[i] * t.form().matrix().at(i, j) * x[j];
    FieldElement lin = k.zero();
    for (std::size_t i = 0; i < x.coords().size(); ++i)
        lin += t.linear_coeffs()[i] * x[i];
    return t.lambda() * quad + lin + t.constant_term();
}

// Raw sum oracle: sum of mass_i Q_B(x - A_i) without expansion.
FieldElement raw_sum(const WeightedSet& s, const BilinearForm& form, const Point& x) {
    FieldElement acc = s.space().field().zero();
    for (const auto& [a, mass] : s.entries())
        acc += mass * form.quad(free_vector(a, x));
    return acc;
}

} // namespace

TEST_CASE("bilinear form validation") {
    CHECK_THROWS_AS(BilinearForm(Matrix(kQ, 2, 2,
                                        {kQ.element(1), kQ.element(2),
                                         kQ.element(3), kQ.element(4)})),
                    DegenerateFormError); // not symmetric
    CHECK_THROWS_AS(BilinearForm(Matrix(kQ, 2, 2,
                                        {kQ.element(1), kQ.element(1),
                                         kQ.element(1), kQ.element(1)})),
                    DegenerateFormError); // singular
    Field f2 = Field::prime(2);
    CHECK_THROWS_AS(BilinearForm(Matrix::identity(f2, 2)),
                    UnsupportedCharacteristicError);
    CHECK_NOTHROW(BilinearForm(Matrix::identity(Field::prime(3), 2)));
}

TEST_CASE("quadratic evaluation") {
    BilinearForm dot = BilinearForm::standard(kPlane);
    QuadPoly q(dot, kQ.one(), {kQ.zero(), kQ.zero()}, kQ.zero());
    CHECK(evaluate_quad(q, pt(3, 4)) == kQ.element(25));

    QuadPoly affine_only(dot, kQ.zero(), {kQ.element(2), kQ.element(-1)}, kQ.element(5));
    CHECK(evaluate_quad(affine_only, pt(3, 4)) == kQ.element(7));
    Poly1 same(kPlane, {kQ.element(2), kQ.element(-1)}, kQ.element(5));
    CHECK(evaluate_quad(affine_only, pt(3, 4)) == same(pt(3, 4)));

    std::mt19937_64 rng(81);
    for (int i = 0; i < 200; ++i) {
        BilinearForm b = random_form(kPlane, rng);
        QuadPoly t(b, mt::random_element(kQ, rng),
                   {mt::random_element(kQ, rng), mt::random_element(kQ, rng)},
                   mt::random_element(kQ, rng));
        Point x = mt::random_point(kPlane, rng);
        CHECK(evaluate_quad(t, x) == evaluate_oracle(t, x));
    }
}

TEST_CASE("F-gradient map") {
    BilinearForm dot = BilinearForm::standard(kPlane);

    // T = Q_B: gradient map is x |-> -x, critical at the origin.
    QuadPoly q(dot, kQ.one(), {kQ.zero(), kQ.zero()}, kQ.zero());
    MomentLikeMap g = f_gradient_map(q);
    CHECK(g.total_mass().is_one());
    CHECK(center_of_mass(g) == pt(0, 0));
    CHECK(g.evaluate(pt(2, 5)) == free_vector(pt(2, 5), pt(0, 0)));

    // T = 2 Q_B(x - (1,0)) expands to lambda=2, l = -4 x1, c = 2.
    QuadPoly shifted(dot, kQ.element(2), {kQ.element(-4), kQ.zero()}, kQ.element(2));
    MomentLikeMap gs = f_gradient_map(shifted);
    CHECK(gs.total_mass() == kQ.element(2));
    CHECK(center_of_mass(gs) == pt(1, 0));

    // lambda = 0, l = 4 x1: constant map with -2(b.y) = 4 y1, so b = (-2, 0).
    QuadPoly linear(dot, kQ.zero(), {kQ.element(4), kQ.zero()}, kQ.zero());
    MomentLikeMap gl = f_gradient_map(linear);
    CHECK(gl.total_mass().is_zero());
    CHECK(gl.value_at_origin() == FreeVector(kPlane, {kQ.element(-2), kQ.zero()}));
}

TEST_CASE("gradient correspondence is linear with kernel the constants") {
    std::mt19937_64 rng(82);
    BilinearForm b = random_form(kPlane, rng);
    for (int i = 0; i < 200; ++i) {
        auto random_poly = [&](const BilinearForm& form) {
            return QuadPoly(form, mt::random_element(kQ, rng),
                            {mt::random_element(kQ, rng), mt::random_element(kQ, rng)},
                            mt::random_element(kQ, rng));
        };
        QuadPoly t1 = random_poly(b);
        QuadPoly t2 = random_poly(b);
        // Sum of polynomials maps to sum of gradients.
        QuadPoly sum(b, t1.lambda() + t2.lambda(),
                     {t1.linear_coeffs()[0] + t2.linear_coeffs()[0],
                      t1.linear_coeffs()[1] + t2.linear_coeffs()[1]},
                     t1.constant_term() + t2.constant_term());
        CHECK(f_gradient_map(sum) == f_gradient_map(t1) + f_gradient_map(t2));

        // Same (lambda, l), different constants: same gradient.
        QuadPoly shifted_const(b, t1.lambda(),
                               {t1.linear_coeffs()[0], t1.linear_coeffs()[1]},
                               t1.constant_term() + kQ.element(7));
        CHECK(f_gradient_map(shifted_const) == f_gradient_map(t1));

        // Restricted to (lambda, l) the map is a bijection onto M(L):
        // rebuild the polynomial from the gradient and compare.
        MomentLikeMap g = f_gradient_map(t1);
        // l(y) = -2B(b, y) where b is the value at the origin.
        std::vector<FieldElement> l = b.matrix() * g.value_at_origin().coords();
        for (auto& c : l) c *= -kQ.element(2);
        CHECK(l[0] == t1.linear_coeffs()[0]);
        CHECK(l[1] == t1.linear_coeffs()[1]);
        CHECK(g.total_mass() == t1.lambda());
    }
}

TEST_CASE("critical points") {
    BilinearForm dot = BilinearForm::standard(kPlane);
    // T = Q_B(x - (1,0)) : lambda=1, l = -2 x1, c = 1.
    QuadPoly t(dot, kQ.one(), {kQ.element(-2), kQ.zero()}, kQ.one());
    CHECK(critical_point(t) == pt(1, 0));

    // The differential 2 lambda B(x, y) + l(y) vanishes identically in y at
    // the critical point; a linear functional vanishing on a basis is zero.
    std::mt19937_64 rng(83);
    for (int i = 0; i < 100; ++i) {
        BilinearForm b = random_form(kPlane, rng);
        QuadPoly r(b, mt::random_nonzero(kQ, rng),
                   {mt::random_element(kQ, rng), mt::random_element(kQ, rng)},
                   mt::random_element(kQ, rng));
        Point x0 = critical_point(r);
        Poly1 l(kPlane, r.linear_coeffs(), kQ.zero());
        for (std::size_t axis = 0; axis < 2; ++axis) {
            std::vector<FieldElement> e(2, kQ.zero());
            e[axis] = kQ.one();
            FreeVector y(kPlane, std::move(e));
            FieldElement differential =
                kQ.element(2) * r.lambda() * b.apply(x0.position_vector(), y) +
                l.linear_part(y);
            CHECK(differential.is_zero());
        }
    }

    QuadPoly degenerate(dot, kQ.zero(), {kQ.one(), kQ.zero()}, kQ.zero());
    CHECK_THROWS_AS(critical_point(degenerate), NoCriticalPointError);
}

TEST_CASE("sum of shifted quadratics") {
    BilinearForm dot = BilinearForm::standard(kPlane);
    WeightedSet s(kPlane, {{pt(0, 0), kQ.one()}, {pt(2, 0), kQ.one()}});
    QuadPoly t = sum_of_shifted_quadratics(s, dot);
    CHECK(t.lambda() == kQ.element(2));
    CHECK(t.linear_coeffs()[0] == kQ.element(-4));
    CHECK(t.linear_coeffs()[1] == kQ.zero());
    CHECK(t.constant_term() == kQ.element(4));

    QuadPoly empty = sum_of_shifted_quadratics(WeightedSet(kPlane), dot);
    CHECK(empty.lambda().is_zero());
    CHECK(empty.constant_term().is_zero());
    CHECK(evaluate_quad(empty, pt(3, 7)).is_zero());

    WeightedSet single(kPlane, {{pt(2, -1), kQ.one()}});
    QuadPoly q = sum_of_shifted_quadratics(single, dot);
    std::mt19937_64 rng(84);
    for (int i = 0; i < 50; ++i) {
        Point x = mt::random_point(kPlane, rng);
        CHECK(evaluate_quad(q, x) == dot.quad(free_vector(pt(2, -1), x)));
    }
}

TEST_CASE("expansion matches the raw sum everywhere") {
    std::mt19937_64 rng(85);
    for (const Field& k : {Field::rationals(), Field::prime(7)}) {
        Space sp(k, 2);
        for (int i = 0; i < 150; ++i) {
            BilinearForm b = random_form(sp, rng);
            WeightedSet s = mt::random_set(sp, rng);
            QuadPoly t = sum_of_shifted_quadratics(s, b);
            for (int j = 0; j < 5; ++j) {
                Point x = mt::random_point(sp, rng);
                CHECK(evaluate_quad(t, x) == raw_sum(s, b, x));
            }
        }
    }
}

TEST_CASE("canonical form, weighty case") {
    BilinearForm dot = BilinearForm::standard(kPlane);
    WeightedSet s(kPlane, {{pt(0, 0), kQ.one()}, {pt(2, 0), kQ.one()}});
    CanonicalQuadForm cf = canonical_form(s, dot);
    REQUIRE(cf.is_weighty());
    CHECK(*cf.center == pt(1, 0));
    CHECK(cf.lambda == kQ.element(2));
    CHECK(cf.c0 == kQ.element(2));
    CHECK(cf.evaluate(pt(0, 0)) == kQ.element(4));

    std::mt19937_64 rng(86);
    for (int i = 0; i < 100; ++i) {
        Point x = mt::random_point(kPlane, rng);
        CHECK(cf.evaluate(x) == raw_sum(s, dot, x));
    }
}

TEST_CASE("canonical form, weightless case") {
    BilinearForm dot = BilinearForm::standard(kPlane);
    WeightedSet s(kPlane, {{pt(0, 0), kQ.one()}, {pt(2, 0), kQ.element(-1)}});
    CanonicalQuadForm cf = canonical_form(s, dot);
    REQUIRE_FALSE(cf.is_weighty());
    CHECK(cf.residual->linear_coeffs()[0] == kQ.element(4));
    CHECK(cf.residual->linear_coeffs()[1] == kQ.zero());
    CHECK(cf.c0 == kQ.element(-4));

    std::mt19937_64 rng(87);
    for (int i = 0; i < 100; ++i) {
        Point x = mt::random_point(kPlane, rng);
        CHECK(cf.evaluate(x) == raw_sum(s, dot, x));
    }

    // A single weighty point is its own canonical form with c0 = 0.
    WeightedSet single(kPlane, {{pt(3, 1), kQ.element(5)}});
    CanonicalQuadForm cs = canonical_form(single, dot);
    REQUIRE(cs.is_weighty());
    CHECK(*cs.center == pt(3, 1));
    CHECK(cs.c0.is_zero());
}

TEST_CASE("canonical form equivalence on random sets and forms") {
    std::mt19937_64 rng(88);
    for (int form_i = 0; form_i < 5; ++form_i) {
        BilinearForm b = random_form(kPlane, rng);
        for (int i = 0; i < 60; ++i) {
            WeightedSet s = mt::random_set(kPlane, rng);
            CanonicalQuadForm cf = canonical_form(s, b);
            QuadPoly t = sum_of_shifted_quadratics(s, b);
            for (int j = 0; j < 10; ++j) {
                Point x = mt::random_point(kPlane, rng);
                FieldElement expected = raw_sum(s, b, x);
                CHECK(cf.evaluate(x) == expected);
                CHECK(evaluate_quad(t, x) == expected);
            }
        }
    }
}

TEST_CASE("critical point equals the center of mass, any form") {
    std::mt19937_64 rng(89);
    for (int i = 0; i < 60; ++i) {
        WeightedSet s = mt::random_weighty_set(kPlane, rng);
        Point expected = reduce(s).point();
        for (int form_i = 0; form_i < 5; ++form_i) {
            BilinearForm b = random_form(kPlane, rng);
            CHECK(critical_point(sum_of_shifted_quadratics(s, b)) == expected);
        }
    }
}

TEST_CASE("float gradient agrees with central finite differences") {
    Field f = Field::real();
    Space sp(f, 2);
    std::mt19937_64 rng(90);
    const double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
        BilinearForm b = random_form(sp, rng);
        QuadPoly t(b, mt::random_element(f, rng),
                   {mt::random_element(f, rng), mt::random_element(f, rng)},
                   mt::random_element(f, rng));
        Point x = mt::random_point(sp, rng);
        MomentLikeMap g = f_gradient_map(t);
        FreeVector grad = g.evaluate(x);

        // d_i ~ DT_x(e_i); recover the F-gradient by solving -2B g = d.
        std::vector<FieldElement> diff;
        for (std::size_t axis = 0; axis < 2; ++axis) {
            auto moved = [&](double delta) {
                std::vector<FieldElement> coords = x.coords();
                coords[axis] = coords[axis] + f.from_double(delta);
                return Point(sp, std::move(coords));
            };
            double plus = evaluate_quad(t, moved(h)).to_double();
            double minus = evaluate_quad(t, moved(-h)).to_double();
            diff.push_back(f.from_double((plus - minus) / (2 * h)));
        }
        FreeVector fd = b.dual_vector(diff);
        for (std::size_t axis = 0; axis < 2; ++axis)
            CHECK(std::fabs(grad[axis].to_double() - fd[axis].to_double()) < 1e-6);
    }
}
