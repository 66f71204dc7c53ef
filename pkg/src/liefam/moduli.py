"""Parameter geometry of the cubic family: invariants, fibers, rescalings.

A point (e1, e2) determines the cubic Y^2 = 4(X-e1)(X-e2)(X-e3) with
e3 = -(e1+e2).  Fibers degenerate exactly on the three lines e2 = s*e1
with s in {1, -2, -1/2} (node) and at the origin (cusp).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import FamilySpec, RuleTerm
from .errors import DegenerateLine, OddShiftNotRescalable
from .poly import ParamPoly, rat, rat_str

#: Slope of the vertical line e1 = 0.
INFINITE_SLOPE = "inf"


@dataclass(frozen=True)
class CurveParams:
    """An (e1, e2) point with derived modular quantities."""

    e1: Fraction
    e2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "e1", rat(self.e1))
        object.__setattr__(self, "e2", rat(self.e2))

    @property
    def e3(self) -> Fraction:
        return -self.e1 - self.e2

    @property
    def g2(self) -> Fraction:
        e1, e2, e3 = self.e1, self.e2, self.e3
        return -4 * (e1 * e2 + e1 * e3 + e2 * e3)

    @property
    def g3(self) -> Fraction:
        return 4 * self.e1 * self.e2 * self.e3

    @property
    def discriminant(self) -> Fraction:
        e1, e2, e3 = self.e1, self.e2, self.e3
        return 16 * (e1 - e2) ** 2 * (e1 - e3) ** 2 * (e2 - e3) ** 2

    @property
    def j(self) -> Fraction:
        disc = self.discriminant
        if disc == 0:
            raise DegenerateLine("j is defined on smooth fibers only")
        return 1728 * self.g2**3 / disc

    def to_json(self):
        data = {
            "e1": rat_str(self.e1),
            "e2": rat_str(self.e2),
            "e3": rat_str(self.e3),
            "g2": rat_str(self.g2),
            "g3": rat_str(self.g3),
            "discriminant": rat_str(self.discriminant),
        }
        if self.discriminant != 0:
            data["j"] = rat_str(self.j)
        return data


@dataclass(frozen=True)
class FiberClass:
    kind: str  # "smooth" | "nodal" | "cuspidal"
    subcase: str | None = None  # "IIa" | "IIb" for nodal fibers
    j: Fraction | None = None

    def to_json(self):
        data = {"kind": self.kind}
        if self.subcase:
            data["subcase"] = self.subcase
        if self.j is not None:
            data["j"] = rat_str(self.j)
        return data


def classify_fiber(e1, e2) -> FiberClass:
    """Cusp at the origin; node when exactly two roots meet; else smooth.

    Subcase IIa: the marked point stays away from the node (e2 = e3);
    subcase IIb: the node swallows the marked point (e1 = e2 or e1 = e3).
    """
    p = CurveParams(rat(e1), rat(e2))
    if p.e1 == 0 and p.e2 == 0:
        return FiberClass(kind="cuspidal")
    if p.e2 == p.e3 and p.e1 != p.e2:
        return FiberClass(kind="nodal", subcase="IIa")
    if p.e1 == p.e2 or p.e1 == p.e3:
        return FiberClass(kind="nodal", subcase="IIb")
    return FiberClass(kind="smooth", j=p.j)


def j_of_line(s) -> Fraction:
    """Modular parameter of the (constant-j) line e2 = s*e1.

    j(s) = 1728 * 4 (1+s+s^2)^3 / ((1-s)^2 (2+s)^2 (1+2s)^2); the
    vertical line has j = 1728 by the closed form, not by a limit.
    """
    if s == INFINITE_SLOPE:
        return Fraction(1728)
    s = rat(s)
    if s in (Fraction(1), Fraction(-2), Fraction(-1, 2)):
        raise DegenerateLine(f"slope {s} lies on a degenerate line")
    num = 1728 * 4 * (1 + s + s * s) ** 3
    den = ((1 - s) * (2 + s) * (1 + 2 * s)) ** 2
    return num / den


def line_partner(s):
    """The unique partner slope with the same shift -4 coefficient.

    (1-s)(2+s) is invariant under s -> -1-s; the vertical line and
    s = -1/2 are the fixed points.
    """
    if s == INFINITE_SLOPE:
        return INFINITE_SLOPE
    return -1 - rat(s)


def symbolic_invariants() -> tuple[ParamPoly, ParamPoly, ParamPoly]:
    """(g2, g3, discriminant) as polynomials in (e1, e2), e3 eliminated."""
    params = ("e1", "e2")
    e1 = ParamPoly.var(params, "e1")
    e2 = ParamPoly.var(params, "e2")
    e3 = -(e1 + e2)
    g2 = (e1 * e2 + e1 * e3 + e2 * e3) * -4
    g3 = e1 * e2 * e3 * 4
    disc = ((e1 - e2) ** 2) * ((e1 - e3) ** 2) * ((e2 - e3) ** 2) * 16
    return g2, g3, disc


def rescale(family: FamilySpec, lam2) -> FamilySpec:
    """Conjugate by v_n -> (lam^-n) v_n at the rule level.

    The coefficient at degree shift w picks up the factor lam2^(-w/2);
    only even shifts are reachable without a square root of lam2.
    """
    lam2 = rat(lam2)
    if lam2 == 0:
        raise ValueError("rescaling factor must be nonzero")

    def conv(terms):
        out = []
        for t in terms:
            if t.shift % 2:
                raise OddShiftNotRescalable(
                    f"shift {t.shift} in {family.name} needs a square root"
                )
            factor = lam2 ** (-t.shift // 2)
            out.append(RuleTerm(t.shift, t.a * factor, t.b * factor, t.d * factor))
        return tuple(out)

    central = family.central
    if central is not None and not central.is_zero:
        from .algebra import CentralDelta, CentralTable

        if isinstance(central, CentralTable):
            entries = {}
            for (n, m), v in central.entries.items():
                if (n + m) % 2:
                    raise OddShiftNotRescalable(
                        f"central support at odd total degree {n + m}"
                    )
                entries[(n, m)] = v * lam2 ** ((n + m) // 2)
            central = CentralTable(entries, central.lo, central.hi)
        # a delta rule sits at total degree 0 and is unchanged

    return FamilySpec(
        name=f"{family.name}~lam2={rat_str(lam2)}",
        params=family.params,
        rule={cls: conv(ts) for cls, ts in family.rule.items()},
        exceptional={n: conv(ts) for n, ts in family.exceptional.items()},
        lower_bound=family.lower_bound,
        central=central,
    )
