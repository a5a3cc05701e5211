"""Sparse multivariate polynomials over exact rationals.

A :class:`VarContext` fixes the variables once and splits them into projective
coordinates (``x0 .. xn``) and parameter names (symbolic constants such as
``a`` or ``c``). Monomials are dense exponent tuples covering every declared
name, projective slots first. Parameters count as degree zero for
homogeneity but are otherwise ordinary commuting variables.

The single global monomial order is graded reverse lexicographic over the
full exponent tuple, with earlier-declared names larger
(``x0 > x1 > ... > xn > parameters``). Term iteration and printing always
follow it, so output is deterministic.

Polynomials are immutable values; every operation returns a new object.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Mapping, Union

from .errors import InputError

Monomial = tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def order_key(m: Monomial):
    """Sort key realising the global order: larger key means larger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class VarContext:
    """The fixed variable universe a polynomial lives in."""

    projective: tuple[str, ...]
    parameters: tuple[str, ...] = ()

    def __post_init__(self):
        names = self.projective + self.parameters
        if len(self.projective) < 2:
            raise InputError("a variable context needs at least two projective variables")
        if len(set(names)) != len(names):
            raise InputError("variable names must be distinct")
        for name in names:
            if not _NAME_RE.match(name):
                raise InputError(f"invalid variable name: {name!r}")

    @property
    def names(self) -> tuple[str, ...]:
        return self.projective + self.parameters

    @property
    def nproj(self) -> int:
        return len(self.projective)

    @property
    def nvars(self) -> int:
        return len(self.projective) + len(self.parameters)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def unit_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def monomial(self, exponents: Mapping[str, int]) -> Monomial:
        exps = [0] * self.nvars
        for name, e in exponents.items():
            if e < 0:
                raise InputError(f"negative exponent for {name!r}")
            exps[self.index(name)] = e
        return tuple(exps)

    def is_projective_monomial(self, m: Monomial) -> bool:
        return all(e == 0 for e in m[self.nproj :])

    def projective_degree(self, m: Monomial) -> int:
        return sum(m[: self.nproj])

    def constant(self, value) -> "Polynomial":
        c = Fraction(value)
        return Polynomial(self, {self.unit_monomial(): c} if c else {})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def variable(self, name: str) -> "Polynomial":
        return Polynomial(self, {self.monomial({name: 1}): Fraction(1)})

    def monomial_str(self, m: Monomial) -> str:
        s = _factor_str(self, m)
        return s if s else "1"


class Polynomial:
    """Immutable sparse polynomial attached to a :class:`VarContext`."""

    __slots__ = ("context", "_terms", "_lead")

    def __init__(self, context: VarContext, terms: Mapping[Monomial, Fraction]):
        width = context.nvars
        clean: dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            if len(m) != width or any(e < 0 for e in m):
                raise InputError("monomial does not fit the variable context")
            c = Fraction(c)
            if c:
                clean[m] = c
        self.context = context
        self._terms = clean
        self._lead = None

    # -- inspection ------------------------------------------------------

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms sorted descending in the global monomial order."""
        return sorted(self._terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, m: Monomial) -> Fraction:
        """Raw coefficient of the exact monomial ``m`` (zero if absent)."""
        return self._terms.get(m, Fraction(0))

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise InputError("the zero polynomial has no leading term")
        if self._lead is None:
            m = max(self._terms, key=order_key)
            self._lead = (m, self._terms[m])
        return self._lead

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self.context.unit_monomial() in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise InputError(f"not a constant polynomial: {self}")
        return self.coefficient(self.context.unit_monomial())

    def is_parameter_only(self) -> bool:
        nproj = self.context.nproj
        return all(all(e == 0 for e in m[:nproj]) for m in self._terms)

    def is_parameter_free(self) -> bool:
        nproj = self.context.nproj
        return all(all(e == 0 for e in m[nproj:]) for m in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic ------------------------------------------------------

    def _check_context(self, other: "Polynomial"):
        if self.context != other.context:
            raise InputError("polynomials belong to different variable contexts")

    def _coerce(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            self._check_context(value)
            return value
        if isinstance(value, (int, Fraction)):
            return self.context.constant(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.context, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.context, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.context.zero()
            return Polynomial(self.context, {m: v * c for m, v in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_context(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = acc.get(m, Fraction(0)) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Polynomial(self.context, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InputError("polynomial powers take nonnegative integer exponents")
        result = self.context.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        """Multiply by the single term ``c * m`` (exponent-shift, no full product)."""
        c = Fraction(c)
        if not c:
            return self.context.zero()
        return Polynomial(
            self.context,
            {tuple(a + b for a, b in zip(mm, m)): cc * c for mm, cc in self._terms.items()},
        )

    def monic(self) -> "Polynomial":
        _, c = self.leading_term()
        return self * (Fraction(1) / c)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.context.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __hash__(self):
        return hash((self.context, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for m, c in self.items():
            mag = _term_str(self.context, m, abs(c))
            if not pieces:
                pieces.append(f"-{mag}" if c < 0 else mag)
            else:
                pieces.append(f"- {mag}" if c < 0 else f"+ {mag}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _factor_str(ctx: VarContext, m: Monomial) -> str:
    names = ctx.names
    factors = []
    # parameters print first: they act as coefficients
    order = list(range(ctx.nproj, ctx.nvars)) + list(range(ctx.nproj))
    for idx in order:
        e = m[idx]
        if e == 1:
            factors.append(names[idx])
        elif e > 1:
            factors.append(f"{names[idx]}^{e}")
    return "*".join(factors)


def _term_str(ctx: VarContext, m: Monomial, mag: Fraction) -> str:
    factors = _factor_str(ctx, m)
    if not factors:
        return str(mag)
    if mag == 1:
        return factors
    return f"{mag}*{factors}"


# -- operations --------------------------------------------------------------


def partial_derivative(p: Polynomial, var: str) -> Polynomial:
    """Formal partial derivative with respect to any declared variable."""
    idx = p.context.index(var)
    terms: dict[Monomial, Fraction] = {}
    for m, c in p._terms.items():
        e = m[idx]
        if e:
            mm = m[:idx] + (e - 1,) + m[idx + 1 :]
            terms[mm] = terms.get(mm, Fraction(0)) + c * e
    return Polynomial(p.context, terms)


def coefficient_of(p: Polynomial, m: Monomial) -> Polynomial:
    """Coefficient of the projective monomial ``m``, as a parameter polynomial.

    Collects every term of ``p`` whose projective part equals ``m`` and strips
    ``m`` off, leaving the parameter content.
    """
    ctx = p.context
    if len(m) != ctx.nvars:
        raise InputError("monomial does not fit the variable context")
    if not ctx.is_projective_monomial(m):
        raise InputError("coefficient extraction takes a projective monomial")
    nproj = ctx.nproj
    target = m[:nproj]
    unit = (0,) * nproj
    terms: dict[Monomial, Fraction] = {}
    for mm, c in p._terms.items():
        if mm[:nproj] == target:
            terms[unit + mm[nproj:]] = c
    return Polynomial(ctx, terms)


def homogeneous_degree(p: Polynomial) -> Union[int, Literal["any"], None]:
    """Common projective degree of all terms.

    Returns the degree when homogeneous, ``None`` when not, and ``"any"`` for
    the zero polynomial (homogeneous of every degree). Parameters count as
    degree zero.
    """
    if not p:
        return "any"
    degrees = {p.context.projective_degree(m) for m in p._terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def evaluate(p: Polynomial, point: Mapping[str, Union[Fraction, int]]) -> Fraction:
    """Exact evaluation; every variable of the context must be assigned."""
    ctx = p.context
    missing = [n for n in ctx.names if n not in point]
    if missing:
        raise InputError(f"missing assignment for {', '.join(missing)}")
    values = [Fraction(point[n]) for n in ctx.names]
    total = Fraction(0)
    for m, c in p._terms.items():
        v = c
        for e, x in zip(m, values):
            if e:
                v *= x**e
        total += v
    return total


def substitute(p: Polynomial, assignment: Mapping[str, Union[Polynomial, Fraction, int]]) -> Polynomial:
    """Substitute polynomials or constants for a subset of the variables."""
    ctx = p.context
    subs: dict[int, Polynomial] = {}
    for name, value in assignment.items():
        idx = ctx.index(name)
        subs[idx] = value if isinstance(value, Polynomial) else ctx.constant(value)
        if subs[idx].context != ctx:
            raise InputError("substituted polynomial lives in a different context")
    result = ctx.zero()
    for m, c in p._terms.items():
        residual = list(m)
        factor = ctx.constant(c)
        for idx, sub in subs.items():
            e = residual[idx]
            if e:
                residual[idx] = 0
                factor = factor * sub**e
        result = result + factor.mul_term(tuple(residual), 1)
    return result


def monomials_of_degree(ctx: VarContext, degree: int, projective_only: bool = True) -> list[Monomial]:
    """All monomials of the given total degree, sorted descending in the order."""
    if degree < 0:
        raise InputError("degree must be nonnegative")
    width = ctx.nproj if projective_only else ctx.nvars
    pad = (0,) * (ctx.nvars - width)
    out = []
    for bars in itertools.combinations(range(degree + width - 1), width - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(degree + width - 1 - prev - 1)
        out.append(tuple(exps) + pad)
    out.sort(key=order_key, reverse=True)
    return out
