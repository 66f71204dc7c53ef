"""Residue-based pairings on genus-zero vector fields.

The pairing of two fields e, f (written as functions of the quasi-global
coordinate) is the residue sum over the in-points of
    (1/2)(e''' f - e f''') - R (e' f - e f')
with R a Laurent-polynomial quadratic-differential representative.  The
integration cycle separating the in-points from infinity is
operationalized as "sum of residues at all finite poles", i.e. minus the
residue at infinity, which stays exact even with a symbolic double-point
parameter.  No normalization factor is applied; proportionality constants
against closed-form central rules are reported, not fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import CentralTable, CheckReport, FamilySpec
from .errors import (
    DivisionByZeroFunction,
    EssentialOrUndefined,
    ParameterMismatch,
    UpperBoundViolated,
)
from .geometry import (
    FactoredLaurent,
    LaurentPoly,
    Poly,
    RationalFunc,
    VectorField,
    realize,
)
from .linalg import LinearSystem
from .poly import ParamPoly, rat, rat_str

#: Sentinel: take residues at every finite pole (minus the residue at infinity).
ALL_FINITE = "all-finite"


def _binomial(e: int, i: int) -> Fraction:
    """Generalized binomial coefficient for integer (possibly negative) e."""
    out = Fraction(1)
    for j in range(i):
        out *= Fraction(e - j, j + 1)
    return out


def finite_residue_sum(field: FactoredLaurent) -> ParamPoly:
    """Sum of residues of `field dz` over all finite points.

    Equal to the coefficient of 1/z in the expansion at infinity (the
    global residue sum of a rational differential vanishes).  Exact for a
    symbolic quadratic factor: (z^2-beta)^e expands binomially at
    infinity and only one term can hit 1/z per monomial.
    """
    params = field.poly.params
    total = ParamPoly.const(params, 0)
    e = field.exp
    for d, coeff in field.poly.coeffs.items():
        num = d + 2 * e + 1
        if num % 2 or num < 0:
            continue
        i = num // 2
        total = total + coeff * _binomial(e, i) * ((-field.beta) ** i)
    return total


def factored_to_rational(field: FactoredLaurent) -> RationalFunc:
    """Constant-parameter factored field as a reduced rational function."""
    if any(not c.is_constant for c in field.poly.coeffs.values()) or (
        not field.beta.is_constant
    ):
        raise ParameterMismatch("pointwise residues need rational coefficients")
    shift = min(0, min(field.poly.coeffs, default=0))
    dense = {d - shift: c.constant_value() for d, c in field.poly.coeffs.items()}
    num = Poly([dense.get(k, Fraction(0)) for k in range(max(dense, default=0) + 1)])
    den = Poly.x_power(-shift)
    beta = field.beta.constant_value()
    base = Poly([-beta, 0, 1])
    if field.exp >= 0:
        for _ in range(field.exp):
            num = num * base
    else:
        for _ in range(-field.exp):
            den = den * base
    return RationalFunc(num, den)


def residue_rational(func: RationalFunc, point) -> Fraction:
    """Residue of `func dz` at a finite rational point (Taylor division)."""
    point = rat(point)
    if func.den.is_zero:
        raise DivisionByZeroFunction("zero denominator")
    den_shifted = func.den.shift_origin(point)
    order = 0
    while order < len(den_shifted.coeffs) and den_shifted.coeffs[order] == 0:
        order += 1
    if order == 0:
        return Fraction(0)
    if order >= len(den_shifted.coeffs):
        raise EssentialOrUndefined("denominator vanishes identically")
    num_shifted = func.num.shift_origin(point)
    q = den_shifted.coeffs[order:]
    n = list(num_shifted.coeffs) + [Fraction(0)] * order
    series = []
    for i in range(order):
        value = (n[i] if i < len(n) else Fraction(0)) - sum(
            (series[j] * q[i - j] for j in range(i) if i - j < len(q)), Fraction(0)
        )
        series.append(value / q[0])
    return series[order - 1]


def residue(func, point) -> Fraction | ParamPoly:
    """Coefficient of 1/(z - point) in the local expansion of `func`."""
    if isinstance(func, LaurentPoly):
        point = rat(point)
        if point == 0:
            return func.coefficient(-1)
        return ParamPoly.const(func.params, 0)
    if isinstance(func, RationalFunc):
        return residue_rational(func, point)
    if isinstance(func, FactoredLaurent):
        return residue_rational(factored_to_rational(func), point)
    raise EssentialOrUndefined(f"no residue for {type(func).__name__}")


# ---------------------------------------------------------------------------
# the pairing
# ---------------------------------------------------------------------------


def kn_cocycle(
    e: VectorField,
    f: VectorField,
    connection: LaurentPoly | None = None,
    in_points=ALL_FINITE,
):
    """Residue pairing of two genus-zero fields, with connection term R."""
    ef, ff = e.coeff, f.coeff
    if not isinstance(ef, FactoredLaurent) or not isinstance(ff, FactoredLaurent):
        raise ParameterMismatch("the residue pairing works on genus-zero fields")
    e3 = ef.derivative().derivative().derivative()
    f3 = ff.derivative().derivative().derivative()
    integrand = (e3 * ff - ef * f3).scale(Fraction(1, 2))
    if connection is not None and not connection.is_zero:
        first = ef.derivative() * ff - ef * ff.derivative()
        rterm = FactoredLaurent(
            connection.lift_params(ef.poly.params), ef.beta, 0
        ) * first
        integrand = integrand - rterm
    if in_points == ALL_FINITE:
        return finite_residue_sum(integrand)
    rf = factored_to_rational(integrand)
    total = Fraction(0)
    for p in in_points:
        total += residue_rational(rf, p)
    return ParamPoly.const((), total)


def pairing_table(
    family: str,
    window,
    connection: LaurentPoly | None = None,
    alpha2=None,
    in_points=ALL_FINITE,
) -> dict:
    """gamma(v_n, v_m) for all n < m in the window (zeros omitted)."""
    indices = sorted(window)
    fields = {n: realize(family, n, alpha2=alpha2) for n in indices}
    table = {}
    for i, n in enumerate(indices):
        for m in indices[i + 1 :]:
            value = kn_cocycle(fields[n], fields[m], connection, in_points)
            if not value.is_zero:
                table[(n, m)] = value
    return table


@dataclass
class LocalityReport:
    family: str
    lower: int  # minimal n+m carrying a nonzero value (0 if support empty)
    support: dict

    def to_json(self):
        return {
            "family": self.family,
            "M": self.lower,
            "support": [
                [n, m, v.to_json()] for (n, m), v in sorted(self.support.items())
            ],
        }


def locality_bound(
    family: str,
    window,
    connection: LaurentPoly | None = None,
    alpha2=None,
) -> LocalityReport:
    """Minimal M with gamma(v_n, v_m) != 0 implying M <= n+m <= 0.

    Raises UpperBoundViolated if a nonzero value sits above n+m = 0,
    which would signal an implementation bug rather than a geometry fact.
    """
    table = pairing_table(family, window, connection, alpha2)
    lower = 0
    for (n, m), value in table.items():
        if n + m > 0:
            raise UpperBoundViolated(
                f"gamma(v_{n}, v_{m}) = {value} with n+m = {n + m} > 0"
            )
        lower = min(lower, n + m)
    return LocalityReport(family=family, lower=lower, support=table)


def class_independence(
    r1: LaurentPoly,
    r2: LaurentPoly,
    window,
    family: str = "witt",
) -> tuple[dict | None, CheckReport]:
    """Witness that two connection choices differ by a scalar coboundary.

    Solves (gamma_{R1} - gamma_{R2})(e_n, e_m) = lam([e_n, e_m]) for a
    linear functional lam on the window; inconsistency is reported as a
    failing check (it would contradict connection independence).
    """
    from .algebra import evaluate_pair_rule
    from .families import by_name

    spec = by_name(family)
    indices = sorted(window)
    fields = {n: realize(family, n) for n in indices}
    system = LinearSystem()
    pairs = 0
    for i, n in enumerate(indices):
        for m in indices[i + 1 :]:
            delta = kn_cocycle(fields[n], fields[m], r1) - kn_cocycle(
                fields[n], fields[m], r2
            )
            coeffs = {
                ("lam", idx): c.constant_value()
                for idx, c in evaluate_pair_rule(spec, n, m)
            }
            system.add(coeffs, delta.constant_value(), tag={"pair": [n, m]})
            pairs += 1
    if not system.consistent:
        tag, residual = system.inconsistency
        return None, CheckReport(
            name=f"class-independence:{family}",
            status="FAIL",
            checked=pairs,
            witness={"contradiction_at": tag, "residual": rat_str(residual)},
        )
    unknowns = [u for u in system.rows]
    values = system.solution(unknowns)
    lam = {key[1]: v for key, v in values.items() if v != 0}
    return lam, CheckReport(
        name=f"class-independence:{family}",
        status="PASS",
        checked=pairs,
        certificate={"lambda_support": sorted(lam)},
    )


def central_table_from_residues(
    family: str,
    lo: int,
    hi: int,
    connection: LaurentPoly | None = None,
    alpha2=None,
) -> CentralTable:
    """Explicit central rule computed from the residue pairing."""
    table = pairing_table(family, range(lo, hi + 1), connection, alpha2)
    entries = {}
    for (n, m), value in table.items():
        entries[(n, m)] = (
            value.constant_value() if value.is_constant else value
        )
    return CentralTable(entries=entries, lo=lo, hi=hi)


def attach_central(spec: FamilySpec, table: CentralTable, name=None) -> FamilySpec:
    """Extend a family by a one-dimensional center with the given pairing."""
    return FamilySpec(
        name=name or f"{spec.name}+center",
        params=spec.params,
        rule=spec.rule,
        exceptional=spec.exceptional,
        lower_bound=spec.lower_bound,
        central=table,
    )
