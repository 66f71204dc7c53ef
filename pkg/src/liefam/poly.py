"""Sparse multivariate polynomials over exact rationals.

This is the coefficient ring of every structure constant in the toolkit.
A polynomial is a finite sum of monomials in a fixed, ordered tuple of
named parameters; coefficients are `fractions.Fraction` and zero
coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MissingParameter, ParameterMismatch

Scalar = (int, Fraction)


def rat(value) -> Fraction:
    """Parse an exact rational from an int, Fraction, or "p/q" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Format a Fraction as "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class ParamPoly:
    """Polynomial in named parameters with Fraction coefficients.

    `params` is the fixed, ordered tuple of parameter names; `terms` maps
    exponent tuples (one entry per parameter) to nonzero coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params: tuple[str, ...], terms: dict):
        self.params = params
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, params: tuple[str, ...], value) -> "ParamPoly":
        value = rat(value)
        if value == 0:
            return cls(params, {})
        return cls(params, {(0,) * len(params): value})

    @classmethod
    def var(cls, params: tuple[str, ...], name: str) -> "ParamPoly":
        if name not in params:
            raise MissingParameter(f"{name!r} not among parameters {params}")
        exps = tuple(1 if p == name else 0 for p in params)
        return cls(params, {exps: Fraction(1)})

    @classmethod
    def from_terms(cls, params: tuple[str, ...], items) -> "ParamPoly":
        terms = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(params):
                raise ParameterMismatch(
                    f"exponent vector {exps} has wrong arity for {params}"
                )
            coeff = rat(coeff) + terms.get(exps, Fraction(0))
            if coeff == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = coeff
        return cls(params, terms)

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()))

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "ParamPoly":
        if isinstance(other, ParamPoly):
            if other.params != self.params:
                raise ParameterMismatch(
                    f"parameter rings differ: {self.params} vs {other.params}"
                )
            return other
        return ParamPoly.const(self.params, other)

    def __add__(self, other) -> "ParamPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            s = terms.get(exps, Fraction(0)) + coeff
            if s == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return ParamPoly(self.params, terms)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(self.params, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "ParamPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ParamPoly":
        return (-self) + other

    def __mul__(self, other) -> "ParamPoly":
        if isinstance(other, Scalar):
            other = rat(other)
            if other == 0:
                return ParamPoly(self.params, {})
            return ParamPoly(
                self.params, {e: c * other for e, c in self.terms.items()}
            )
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exps, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(exps, None)
                else:
                    terms[exps] = s
        return ParamPoly(self.params, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ParamPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers")
        result = ParamPoly.const(self.params, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.is_constant and self.constant_value() == other
        if isinstance(other, ParamPoly):
            return self.params == other.params and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.params, frozenset(self.terms.items())))

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, assignment: dict) -> Fraction:
        """Evaluate at a full rational assignment of every parameter."""
        missing = [p for p in self.params if p not in assignment]
        if missing:
            raise MissingParameter(f"no value for parameters {missing}")
        point = [rat(assignment[p]) for p in self.params]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for x, e in zip(point, exps):
                if e:
                    value *= x**e
            total += value
        return total

    def substitute(self, assignment: dict) -> "ParamPoly":
        """Substitute polynomials (same ring) for a subset of parameters."""
        result = ParamPoly(self.params, {})
        images = {
            p: (
                v
                if isinstance(v, ParamPoly)
                else ParamPoly.const(self.params, v)
            )
            for p, v in assignment.items()
        }
        for exps, coeff in self.terms.items():
            term = ParamPoly.const(self.params, coeff)
            for name, e in zip(self.params, exps):
                if not e:
                    continue
                factor = images.get(name, ParamPoly.var(self.params, name))
                term = term * factor**e
            result = result + term
        return result

    def coefficient_of(self, name: str, power: int) -> "ParamPoly":
        """Coefficient of name**power, as a polynomial with name removed."""
        i = self.params.index(name) if name in self.params else -1
        if i < 0:
            raise MissingParameter(f"{name!r} not among parameters {self.params}")
        rest = tuple(p for p in self.params if p != name)
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i] != power:
                continue
            reduced = tuple(e for j, e in enumerate(exps) if j != i)
            terms[reduced] = coeff
        return ParamPoly(rest, terms)

    def drop_params(self, names) -> "ParamPoly":
        """Remove unused parameters from the ring."""
        names = set(names)
        keep = [j for j, p in enumerate(self.params) if p not in names]
        for exps in self.terms:
            for j, e in enumerate(exps):
                if e and j not in keep:
                    raise ParameterMismatch(
                        f"parameter {self.params[j]!r} still occurs in {self}"
                    )
        params = tuple(self.params[j] for j in keep)
        terms = {tuple(e[j] for j in keep): c for e, c in self.terms.items()}
        return ParamPoly(params, terms)

    def lift(self, params: tuple[str, ...]) -> "ParamPoly":
        """Re-embed into a larger parameter ring by name."""
        positions = []
        for p in self.params:
            if p not in params:
                raise ParameterMismatch(f"{p!r} missing from target ring {params}")
            positions.append(params.index(p))
        terms = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(params)
            for pos, e in zip(positions, exps):
                new[pos] = e
            terms[tuple(new)] = coeff
        return ParamPoly(params, terms)

    # -- presentation --------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [
                f"{p}^{e}" if e > 1 else p
                for p, e in zip(self.params, exps)
                if e
            ]
            if factors:
                head = "" if coeff == 1 else ("-" if coeff == -1 else rat_str(coeff) + "*")
                parts.append(head + "*".join(factors))
            else:
                parts.append(rat_str(coeff))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ParamPoly({self.params}, {self})"

    def to_json(self):
        """Exact string for constants, term list otherwise."""
        if self.is_constant:
            return rat_str(self.constant_value())
        return [[rat_str(c), list(e)] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, params: tuple[str, ...], data) -> "ParamPoly":
        if isinstance(data, (str, int)):
            return cls.const(params, rat(data))
        return cls.from_terms(params, ((tuple(e), rat(c)) for c, e in data))


def poly_const(params, value) -> ParamPoly:
    return ParamPoly.const(tuple(params), value)


def poly_var(params, name) -> ParamPoly:
    return ParamPoly.var(tuple(params), name)
