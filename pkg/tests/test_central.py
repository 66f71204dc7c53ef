"""Residue pairings: values, bilinearity, cocycle law, extensions."""

import random
from fractions import Fraction

import pytest

from liefam.algebra import verify_jacobi
from liefam.central import (
    attach_central,
    central_table_from_residues,
    class_independence,
    finite_residue_sum,
    kn_cocycle,
    locality_bound,
    pairing_table,
    residue,
    residue_rational,
)
from liefam.errors import UpperBoundViolated
from liefam.families import three_point, virasoro, witt
from liefam.geometry import (
    FactoredLaurent,
    LaurentPoly,
    Poly,
    RationalFunc,
    VectorField,
    realize,
)
from liefam.poly import ParamPoly


def test_residue_basics():
    assert residue(LaurentPoly.monomial((), -1), 0) == 1
    assert residue(LaurentPoly.monomial((), 3), 0) == 0
    assert residue(LaurentPoly.monomial((), -1), 5) == 0
    # 1/(z^2-1) = (1/2)/(z-1) - (1/2)/(z+1)  (partial fractions oracle)
    rf = RationalFunc(Poly([1]), Poly([-1, 0, 1]))
    assert residue_rational(rf, 1) == Fraction(1, 2)
    assert residue_rational(rf, -1) == Fraction(-1, 2)
    assert residue_rational(rf, 3) == 0
    # double pole: z/(z-2)^2 has residue 1 at 2
    rf = RationalFunc(Poly([0, 1]), Poly([4, -4, 1]))
    assert residue_rational(rf, 2) == 1


def test_finite_residue_sum_cross_check():
    # for Laurent fields the finite residue sum is the z^-1 coefficient
    rng = random.Random(6)
    for _ in range(20):
        poly = LaurentPoly.from_items(
            (), [(rng.randint(-6, 6), rng.randint(-5, 5)) for _ in range(4)]
        )
        fl = FactoredLaurent(poly, ParamPoly.const((), 0), 0)
        assert finite_residue_sum(fl) == poly.coefficient(-1)
    # against pointwise residues for a factored field with rational beta
    beta = ParamPoly.const((), 4)
    fl = FactoredLaurent(LaurentPoly.monomial((), 1), beta, -2)
    total = finite_residue_sum(fl)
    by_points = residue(fl, 2) + residue(fl, -2) + residue(fl, 0)
    assert total == by_points


def test_witt_pairing_values():
    table = pairing_table("witt", range(-10, 11))
    assert all(n + m == 0 for n, m in table)
    for (n, m), value in table.items():
        assert value == Fraction(n**3 - n)
    assert (-1, 1) not in table  # n^3 - n vanishes there
    assert table[(-5, 5)] == -120


def test_witt_pairing_is_minus_twelve_times_central_rule():
    vir = virasoro().central
    table = pairing_table("witt", range(-10, 11))
    for (n, m), value in table.items():
        assert value == Fraction(-12) * vir.value(n, m)


def test_locality_bounds():
    assert locality_bound("witt", range(-10, 11)).lower == 0
    shifted = locality_bound(
        "witt", range(-8, 9), connection=LaurentPoly.monomial((), -2)
    )
    assert shifted.lower == 0
    constant = locality_bound(
        "witt", range(-8, 9), connection=LaurentPoly.monomial((), 0)
    )
    assert constant.lower == -2  # the connection term adds support at n+m = -2


def test_three_point_pairing_exceeds_degree_zero():
    """The symmetric-points basis spreads the pairing above n+m = 0.

    gamma(V_-6, V_8) = -672 alpha2 (cross-checked against an independent
    computer-algebra residue computation), so the upper-bound guard
    fires; the two-point realizations are the ones with bound 0.
    """
    a2 = ParamPoly.var(("alpha2",), "alpha2")
    e = realize("three-point", -6)
    f = realize("three-point", 8)
    assert kn_cocycle(e, f) == a2 * -672
    with pytest.raises(UpperBoundViolated):
        locality_bound("three-point", range(-8, 9))


def test_pairing_bilinearity_and_antisymmetry():
    rng = random.Random(8)
    fields = {n: realize("witt", n) for n in range(-6, 7)}
    for _ in range(20):
        n, m = rng.randint(-6, 6), rng.randint(-6, 6)
        gnm = kn_cocycle(fields[n], fields[m])
        gmn = kn_cocycle(fields[m], fields[n])
        assert (gnm + gmn).is_zero
    # bilinearity over a random combination
    comb = FactoredLaurent(
        fields[2].coeff.poly.scale(3) + fields[-4].coeff.as_laurent(0).scale(-2),
        fields[2].coeff.beta,
        0,
    )
    lhs = kn_cocycle(VectorField(comb), fields[-2])
    rhs = kn_cocycle(fields[2], fields[-2]) * 3 + kn_cocycle(fields[-4], fields[-2]) * -2
    assert lhs == rhs


def test_two_cocycle_condition_on_random_triples():
    from liefam.algebra import basis_bracket

    w = witt()
    fields = {n: realize("witt", n) for n in range(-9, 10)}

    def gamma_elem(elem, k):
        total = ParamPoly.const((), 0)
        for idx, coeff in elem.components.items():
            total = total + kn_cocycle(fields[idx], fields[k]) * coeff
        return total

    rng = random.Random(10)
    for _ in range(15):
        n, m, k = (rng.randint(-4, 4) for _ in range(3))
        total = (
            gamma_elem(basis_bracket(w, n, m), k)
            + gamma_elem(basis_bracket(w, m, k), n)
            + gamma_elem(basis_bracket(w, k, n), m)
        )
        assert total.is_zero, (n, m, k)


def test_class_independence_witnesses():
    zero = LaurentPoly.zero(())
    lam, report = class_independence(zero, zero, range(-10, 11))
    assert report.passed and lam == {}
    lam, report = class_independence(
        LaurentPoly.monomial((), 0), zero, range(-10, 11)
    )
    assert report.passed and lam == {-2: 1}
    lam, report = class_independence(
        LaurentPoly.monomial((), -1), zero, range(-10, 11)
    )
    assert report.passed and lam == {-1: 1}


def test_central_extension_assembly_preserves_jacobi():
    table = central_table_from_residues("witt", -20, 20)
    extended = attach_central(witt(), table)
    assert verify_jacobi(extended, range(-8, 9)).passed
    # symbolic three-point extension
    table3 = central_table_from_residues("three-point", -18, 18)
    extended3 = attach_central(three_point(), table3)
    assert verify_jacobi(extended3, range(-8, 9)).passed


def test_central_table_serialization():
    table = central_table_from_residues("witt", -4, 4)
    data = table.to_json()
    assert data["kind"] == "table"
    assert [-4, 4, "-60"] in data["entries"]
