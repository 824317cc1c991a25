"""Smoke tests for the Python module."""

import pytest

import masscalc as mc


@pytest.fixture
def plane():
    return mc.Space(mc.Field.rationals(), 2)


def point(plane, x, y):
    return mc.Point(plane, [x, y])


def test_rational_arithmetic_is_exact():
    q = mc.Field.rationals()
    assert str(q.parse("1/2") + q.parse("1/3")) == "5/6"
    assert str(q.parse("2/3").inverse()) == "3/2"
    assert (q.parse("1/3") * q.element(3) - q.one()).is_zero()


def test_prime_field():
    f5 = mc.Field.prime(5)
    assert str(f5.element(3) + f5.element(4)) == "2"
    assert f5.characteristic == 5
    with pytest.raises(ValueError):
        mc.Field.prime(6)
    with pytest.raises(ZeroDivisionError):
        f5.zero().inverse()


def test_field_mismatch_raises():
    q = mc.Field.rationals()
    f5 = mc.Field.prime(5)
    with pytest.raises(ValueError):
        q.one() + f5.one()


def test_reduce_gives_the_centroid(plane):
    s = mc.WeightedSet(plane)
    for x, y in [("0", "0"), ("1", "0"), ("0", "1")]:
        s.add_mass(point(plane, x, y), "1")
    e = mc.reduce(s)
    assert e.is_weighty()
    assert e.point.coords() == ["1/3", "1/3"]
    assert str(e.mass) == "3"
    assert mc.classical_center_of_mass(s).coords() == ["1/3", "1/3"]
    assert mc.classical_center_of_mass(s, seed=7).coords() == ["1/3", "1/3"]


def test_mass_element_addition(plane):
    a = mc.MassElement.weighty(point(plane, "0", "0"), "1")
    b = mc.MassElement.weighty(point(plane, "6", "0"), "2")
    combined = a + b
    assert combined.point.coords() == ["4", "0"]
    assert str(combined.mass) == "3"
    # Order independence on a small sum.
    c = mc.MassElement.dipole(mc.FreeVector(plane, ["3", "0"]))
    assert (a + b) + c == a + (b + c)
    assert (a + b) + c == (c + a) + b


def test_weightless_sum_is_a_dipole(plane):
    a = mc.MassElement.weighty(point(plane, "0", "0"), "3")
    b = mc.MassElement.weighty(point(plane, "2", "1"), "-3")
    d = a + b
    assert d.is_dipole()
    assert d.vector.coords() == ["-6", "-3"]


def test_psi_roundtrip(plane):
    e = mc.MassElement.weighty(point(plane, "4", "0"), "3")
    lifted = mc.psi_lift(e)
    assert lifted == ["12", "0", "3"]
    assert mc.psi_drop(plane, lifted) == e


def test_classical_rejects_characteristic_two():
    f2 = mc.Field.prime(2)
    plane2 = mc.Space(f2, 2)
    s = mc.WeightedSet(plane2)
    s.add_mass(mc.Point(plane2, ["1", "0"]), "1")
    with pytest.raises(mc.UnsupportedCharacteristicError):
        mc.classical_center_of_mass(s)
    assert mc.reduce(s).is_weighty()


def test_critical_point_equals_center(plane):
    s = mc.WeightedSet(plane)
    s.add_mass(point(plane, "0", "0"), "1")
    s.add_mass(point(plane, "2", "0"), "1")
    assert mc.critical_point(s).coords() == ["1", "0"]
    assert mc.critical_point(s, [["2", "1"], ["1", "3"]]).coords() == ["1", "0"]


def test_euler_demo(plane):
    t = mc.Triangle(point(plane, "3", "4"), point(plane, "5", "0"),
                    point(plane, "-5", "0"))
    report = mc.euler_demo(t)
    assert report["pass"] is True
    assert report["circumcenter"] == ["0", "0"]
    assert report["orthocenter"] == ["3", "4"]
    assert mc.medians_demo(t)["pass"] is True
    assert mc.orthocenter_demo(t)["pass"] is True


def test_run_document():
    code, output = mc.run_document(
        '{"field": "rational", "dimension": 2,'
        ' "points": {"A": ["3","4"], "B": ["5","0"], "C": ["-5","0"]},'
        ' "queries": [{"op": "euler_demo", "triangle": ["A","B","C"]}]}'
    )
    assert code == 0
    assert output["pass"] is True
    assert output["reports"][0]["orthocenter"] == ["3", "4"]

    code, output = mc.run_document("not json")
    assert code == 2
    assert output["error"] == "parse"


def test_degenerate_triangle_rejected(plane):
    with pytest.raises(ValueError):
        mc.Triangle(point(plane, "0", "0"), point(plane, "1", "1"),
                    point(plane, "2", "2"))
