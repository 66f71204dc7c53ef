"""Catalog constructors reproduce the closed-form structure equations."""

import random
from fractions import Fraction

import pytest

from liefam.algebra import basis_bracket, specialize, verify_jacobi
from liefam.errors import UnsupportedFamily
from liefam.families import (
    CATALOG,
    by_name,
    d_infinity,
    d_line,
    elliptic,
    formal_family,
    nodal,
    three_point,
    virasoro,
    w1_subalgebra,
    witt,
)
from liefam.poly import ParamPoly


def coeffs(family, n, m):
    return {k: v for k, v in basis_bracket(family, n, m).components.items()}


def test_elliptic_structure_rows():
    e = elliptic()
    params = e.params
    e1 = ParamPoly.var(params, "e1")
    e2 = ParamPoly.var(params, "e2")
    q = (e1 - e2) * (e1 * 2 + e2)
    assert coeffs(e, 1, 3) == {4: ParamPoly.const(params, 2)}
    got = coeffs(e, 2, 4)
    assert got[6] == 2 and got[4] == e1 * 6 and got[2] == q * 2
    got = coeffs(e, 1, 4)
    assert got[5] == 3 and got[3] == e1 * 6 and got[1] == q


def test_d_line_coefficients():
    ds = d_line(Fraction(-1, 2))
    e1 = ParamPoly.var(("e1",), "e1")
    got = coeffs(ds, 2, 4)
    assert got[2] == e1 * e1 * Fraction(9, 2)  # (9/4)*(m-n) at m-n = 2
    assert coeffs(d_line(1), 2, 4).get(2) is None  # (1-s) = 0 kills shift -4
    got = coeffs(d_infinity(), 2, 4)
    e2 = ParamPoly.var(("e2",), "e2")
    assert got == {6: ParamPoly.const(("e2",), 2), 2: -(e2 * e2) * 2}


def test_three_point_rows():
    tp = three_point()
    a2 = ParamPoly.var(("alpha2",), "alpha2")
    assert coeffs(tp, 1, 2) == {3: ParamPoly.const(("alpha2",), 1)}
    got = coeffs(tp, 2, 4)
    assert got == {6: ParamPoly.const(("alpha2",), 2), 4: a2 * 2}
    assert coeffs(tp, 1, 3) == {4: ParamPoly.const(("alpha2",), 2)}


def test_nodal_rows():
    nd = nodal()
    a2 = ParamPoly.var(("alpha2",), "alpha2")
    assert coeffs(nd, 1, 3) == {4: ParamPoly.const(("alpha2",), 2)}
    got = coeffs(nd, 2, 4)
    assert got[6] == 2 and got[4] == a2 * -4 and got[2] == a2 * a2 * 2


def test_nodal_substitution_reaches_the_fixed_line():
    # alpha2 -> -(3/2) e1 turns the nodal rule into the s = -1/2 line rule
    nd = nodal()
    ds = d_line(Fraction(-1, 2))
    both = ("alpha2", "e1")
    image = {"alpha2": ParamPoly.var(both, "e1") * Fraction(-3, 2)}
    for cls in ("even-even", "odd-even", "odd-odd"):
        got = {
            t.shift: tuple(
                x.lift(both).substitute(image).drop_params(["alpha2"])
                for x in (t.a, t.b, t.d)
            )
            for t in nd.rule[cls]
        }
        want = {t.shift: (t.a, t.b, t.d) for t in ds.rule[cls]}
        assert got == want


def test_formal_family_rows():
    f1 = formal_family(1)
    t = ParamPoly.var(("t",), "t")
    got = coeffs(f1, 1, 2)
    assert got[3] == 1 and got[2] == t
    f3 = formal_family(3)
    got = coeffs(f3, 2, 5)
    assert got[7] == 3 and got[5] == t * 5
    f2 = formal_family(2)
    assert coeffs(f2, 3, 4) == {7: ParamPoly.const(("t",), 1)}
    got = coeffs(f2, 1, 5)
    assert got[6] == 4 and got[5] == t * 5
    # antisymmetric extension of the exceptional row
    got = coeffs(f2, 2, 1)
    assert got[3] == -1 and got[2] == t * -2
    with pytest.raises(UnsupportedFamily):
        formal_family(4)


def test_catalog_jacobi_symbolic():
    for name in CATALOG:
        fam = by_name(name, s=3) if name == "d-line" else by_name(name)
        window = range(1, 17) if fam.lower_bound == 1 else range(-8, 9)
        assert verify_jacobi(fam, window).passed, name


def test_specialize_elliptic_origin_is_witt():
    sp = specialize(elliptic(), {"e1": 0, "e2": 0})
    assert sp.rule_signature()[1:] == witt().rule_signature()[1:]


def test_d_line_matches_elliptic_specialization():
    rng = random.Random(5)
    for _ in range(10):
        a = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
        s = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
        left = specialize(d_line(s), {"e1": a})
        right = specialize(elliptic(), {"e1": a, "e2": s * a})
        assert left.rule_signature()[1:] == right.rule_signature()[1:]


def test_shift4_coefficient_line_symmetry():
    s = ParamPoly.var(("s",), "s")
    g = (1 - s) * (2 + s)
    assert g.substitute({"s": -1 - s}) == g


def test_w1_is_positive_part_of_three_point():
    w1 = w1_subalgebra()
    assert w1.lower_bound == 1
    assert w1.rule_signature()[1] == three_point().rule_signature()[1]


def test_by_name_errors():
    with pytest.raises(UnsupportedFamily):
        by_name("unknown")
    with pytest.raises(UnsupportedFamily):
        by_name("d-line")  # missing slope


def test_virasoro_values_on_the_diagonal():
    v = virasoro()
    for n in range(-6, 7):
        got = basis_bracket(v, n, -n)
        expected = Fraction(n**3 - n, 12) * -1  # (1/12)(m^3 - m) at m = -n
        if n == 0:
            assert got.is_zero
            continue
        assert got.coefficient("c") == expected
