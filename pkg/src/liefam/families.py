"""Constructors for every algebra family in the catalog.

All rules are stored in the canonical normal form of `algebra.FamilySpec`:
per parity class a list of (degree shift, affine coefficient) pairs, plus
exceptional rows for the two formal families whose deformation touches a
single row.  Parameters enter only through the polynomial combinations
that actually appear (alpha2 stands for the square of the double point
coordinate; alpha never occurs alone).
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import CentralDelta, FamilySpec, restricted, term
from .errors import UnsupportedFamily
from .poly import ParamPoly, rat


def _mn_terms(params, shifts_factors):
    """Terms with coefficient factor*(m - n) at the given shifts."""
    out = []
    for shift, factor in shifts_factors:
        out.append(term(params, shift, a=-factor, b=factor, d=0))
    return tuple(out)


def witt() -> FamilySpec:
    """[v_n, v_m] = (m - n) v_{n+m} on all integer indices."""
    t = _mn_terms((), [(0, ParamPoly.const((), 1))])
    return FamilySpec(
        name="witt",
        params=(),
        rule={"odd-odd": t, "even-even": t, "odd-even": t},
    )


def virasoro() -> FamilySpec:
    """Witt rule plus the central pairing (1/12)(m^3 - m) on n + m = 0."""
    base = witt()
    return FamilySpec(
        name="virasoro",
        params=(),
        rule=base.rule,
        central=CentralDelta(
            (Fraction(0), Fraction(-1, 12), Fraction(0), Fraction(1, 12))
        ),
    )


def elliptic() -> FamilySpec:
    """Two-parameter family of vector fields on the plane cubic.

    Shifts 0, -2, -4 with coefficients 1, 3*e1, (e1-e2)(2*e1+e2); the
    third root is eliminated via e3 = -(e1+e2) so the coefficient ring is
    Q[e1, e2].  The mixed-parity row replaces (m-n) by (m-n-1), (m-n-2)
    on the shifted components.
    """
    params = ("e1", "e2")
    e1 = ParamPoly.var(params, "e1")
    e2 = ParamPoly.var(params, "e2")
    one = ParamPoly.const(params, 1)
    q = (e1 - e2) * (e1 * 2 + e2)
    same = _mn_terms(params, [(0, one), (-2, e1 * 3), (-4, q)])
    mixed = (
        term(params, 0, a=-1, b=1, d=0),
        term(params, -2, a=-(e1 * 3), b=e1 * 3, d=-(e1 * 3)),
        term(params, -4, a=-q, b=q, d=q * -2),
    )
    return FamilySpec(
        name="elliptic",
        params=params,
        rule={"odd-odd": _mn_terms(params, [(0, one)]), "even-even": same, "odd-even": mixed},
    )


def d_line(s) -> FamilySpec:
    """Restriction of the elliptic family to the line e2 = s*e1.

    One parameter e1; the shift -4 coefficient becomes e1^2 (1-s)(2+s).
    """
    s = rat(s)
    params = ("e1",)
    e1 = ParamPoly.var(params, "e1")
    one = ParamPoly.const(params, 1)
    g = (1 - s) * (2 + s)
    q = e1 * e1 * g
    same = _mn_terms(params, [(0, one), (-2, e1 * 3), (-4, q)])
    mixed = (
        term(params, 0, a=-1, b=1, d=0),
        term(params, -2, a=-(e1 * 3), b=e1 * 3, d=-(e1 * 3)),
        term(params, -4, a=-q, b=q, d=q * -2),
    )
    return FamilySpec(
        name=f"d-line(s={s})",
        params=params,
        rule={"odd-odd": _mn_terms(params, [(0, one)]), "even-even": same, "odd-even": mixed},
    )


def d_infinity() -> FamilySpec:
    """The vertical line e1 = 0: shift -4 coefficient -e2^2, no shift -2."""
    params = ("e2",)
    e2 = ParamPoly.var(params, "e2")
    one = ParamPoly.const(params, 1)
    q = -(e2 * e2)
    same = _mn_terms(params, [(0, one), (-4, q)])
    mixed = (
        term(params, 0, a=-1, b=1, d=0),
        term(params, -4, a=-q, b=q, d=q * -2),
    )
    return FamilySpec(
        name="d-infinity",
        params=params,
        rule={"odd-odd": _mn_terms(params, [(0, one)]), "even-even": same, "odd-even": mixed},
    )


def three_point() -> FamilySpec:
    """Genus-zero algebra with poles at two symmetric points and infinity."""
    params = ("alpha2",)
    a2 = ParamPoly.var(params, "alpha2")
    one = ParamPoly.const(params, 1)
    same = _mn_terms(params, [(0, one), (-2, a2)])
    mixed = (
        term(params, 0, a=-1, b=1, d=0),
        term(params, -2, a=-a2, b=a2, d=-a2),
    )
    return FamilySpec(
        name="three-point",
        params=params,
        rule={"odd-odd": _mn_terms(params, [(0, one)]), "even-even": same, "odd-even": mixed},
    )


def nodal() -> FamilySpec:
    """Witt subalgebra of fields vanishing at the two symmetric points.

    The shifted coefficients are -2*alpha2 and alpha2^2, as forced by the
    realization v_{2k} = l_{2k} - 2*alpha2*l_{2k-2} + alpha2^2*l_{2k-4}
    (the geometry module re-derives them from the vector fields).
    """
    params = ("alpha2",)
    a2 = ParamPoly.var(params, "alpha2")
    one = ParamPoly.const(params, 1)
    c2 = a2 * -2
    c4 = a2 * a2
    same = _mn_terms(params, [(0, one), (-2, c2), (-4, c4)])
    mixed = (
        term(params, 0, a=-1, b=1, d=0),
        term(params, -2, a=-c2, b=c2, d=-c2),
        term(params, -4, a=-c4, b=c4, d=c4 * -2),
    )
    return FamilySpec(
        name="nodal",
        params=params,
        rule={"odd-odd": _mn_terms(params, [(0, one)]), "even-even": same, "odd-even": mixed},
    )


def l1_subalgebra() -> FamilySpec:
    """Witt vectors of index >= 1 (fields vanishing to order >= 2 at 0)."""
    return restricted(witt(), 1, name="l1")


def w1_subalgebra() -> FamilySpec:
    """Positive part of the three-point algebra (indices >= 1)."""
    return restricted(three_point(), 1, name="w1")


def formal_family(i: int) -> FamilySpec:
    """The three one-parameter deformations of the index >= 1 subalgebra.

    Family 1 shifts every row by t*(m-n) at degree -1; families 2 and 3
    deform only the row of index 1 resp. 2 by t*m at the matching shift.
    """
    params = ("t",)
    t_var = ParamPoly.var(params, "t")
    one = ParamPoly.const(params, 1)
    plain = _mn_terms(params, [(0, one)])
    if i == 1:
        rule_terms = _mn_terms(params, [(0, one), (-1, t_var)])
        return FamilySpec(
            name="formal-1",
            params=params,
            rule={cls: rule_terms for cls in ("odd-odd", "even-even", "odd-even")},
            lower_bound=1,
        )
    if i == 2:
        row = (term(params, 0, a=-1, b=1, d=0), term(params, -1, b=t_var))
        return FamilySpec(
            name="formal-2",
            params=params,
            rule={cls: plain for cls in ("odd-odd", "even-even", "odd-even")},
            exceptional={1: row},
            lower_bound=1,
        )
    if i == 3:
        row = (term(params, 0, a=-1, b=1, d=0), term(params, -2, b=t_var))
        return FamilySpec(
            name="formal-3",
            params=params,
            rule={cls: plain for cls in ("odd-odd", "even-even", "odd-even")},
            exceptional={2: row},
            lower_bound=1,
        )
    raise UnsupportedFamily(f"formal family index must be 1, 2 or 3, got {i}")


#: Catalog: name -> (constructor, names of required constructor arguments).
CATALOG = {
    "witt": (witt, ()),
    "virasoro": (virasoro, ()),
    "elliptic": (elliptic, ()),
    "d-line": (d_line, ("s",)),
    "d-infinity": (d_infinity, ()),
    "three-point": (three_point, ()),
    "nodal": (nodal, ()),
    "l1": (l1_subalgebra, ()),
    "w1": (w1_subalgebra, ()),
    "formal-1": (lambda: formal_family(1), ()),
    "formal-2": (lambda: formal_family(2), ()),
    "formal-3": (lambda: formal_family(3), ()),
}


def by_name(name: str, **kwargs) -> FamilySpec:
    if name not in CATALOG:
        raise UnsupportedFamily(
            f"unknown family {name!r}; known: {', '.join(sorted(CATALOG))}"
        )
    ctor, required = CATALOG[name]
    missing = [a for a in required if a not in kwargs]
    if missing:
        raise UnsupportedFamily(f"family {name!r} needs arguments {missing}")
    return ctor(**{k: kwargs[k] for k in required})
