"""Polynomial ideals: Buchberger's algorithm, membership, smoothness, zero loci.

The Groebner layer works over the plain rationals: generators must be free of
parameter variables. Pair selection is the normal strategy (minimal lcm
degree first) with both classical pair-skipping criteria; the output is the
unique reduced basis for the global graded reverse lexicographic order, so
re-running on permuted generators reproduces it verbatim.

Radical membership goes through the standard ring extension by a fresh
variable appended after all existing ones: f lies in the radical of I exactly
when 1 lies in I + (1 - t*f). The extension variable never leaks into output.

Every reduction loop draws from a step budget (default generous); exhausting
it raises :class:`ResourceLimitError` rather than truncating silently.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .derivations import Derivation
from .errors import InputError, ResourceLimitError
from .polyring import (
    Monomial,
    Polynomial,
    VarContext,
    homogeneous_degree,
    order_key,
    partial_derivative,
)

DEFAULT_MAX_STEPS = 1_000_000


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = limit

    def spend(self, n: int = 1):
        self.remaining -= n
        if self.remaining < 0:
            raise ResourceLimitError("computation exceeded the configured step budget")


@dataclass(frozen=True)
class Ideal:
    """Finitely generated ideal; the zero ideal is the empty generator tuple."""

    context: VarContext
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.context != self.context:
                raise InputError("ideal generators belong to different variable contexts")
            if not g:
                raise InputError("ideal generators must be nonzero (the zero ideal is the empty tuple)")

    @classmethod
    def spanned_by(cls, context: VarContext, generators: Iterable[Polynomial]) -> "Ideal":
        """Build an ideal, silently dropping zero generators."""
        return cls(context, tuple(g for g in generators if g))

    def is_zero(self) -> bool:
        return not self.generators


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis for the global order; unique for the ideal."""

    context: VarContext
    basis: tuple[Polynomial, ...]
    order: str = "grevlex"

    def contains_one(self) -> bool:
        return len(self.basis) == 1 and self.basis[0] == self.context.one()


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    mf, cf = f.leading_term()
    mg, cg = g.leading_term()
    lcm = _lcm(mf, mg)
    return f.mul_term(_sub(lcm, mf), Fraction(1) / cf) - g.mul_term(_sub(lcm, mg), Fraction(1) / cg)


def _reduce(f: Polynomial, basis: Sequence[Polynomial], budget: _Budget) -> Polynomial:
    """Full normal form of f against a list of nonzero polynomials."""
    remainder: dict[Monomial, Fraction] = {}
    p = f
    while p:
        budget.spend()
        mp, cp = p.leading_term()
        for g in basis:
            mg, cg = g.leading_term()
            if _divides(mg, mp):
                p = p - g.mul_term(_sub(mp, mg), cp / cg)
                break
        else:
            remainder[mp] = cp
            p = _drop_leading(p)
    return Polynomial(f.context, remainder)


def _drop_leading(p: Polynomial) -> Polynomial:
    m, _ = p.leading_term()
    terms = dict(p._terms)
    del terms[m]
    return Polynomial(p.context, terms)


def _groebner(generators: Sequence[Polynomial], context: VarContext, budget: _Budget) -> list[Polynomial]:
    """Reduced Groebner basis of arbitrary (possibly zero) generators."""
    basis = [g.monic() for g in generators if g]
    if not basis:
        return []

    heap: list[tuple[int, tuple, int, int]] = []
    pending: set[tuple[int, int]] = set()

    def push(i: int, j: int):
        lcm = _lcm(basis[i].leading_term()[0], basis[j].leading_term()[0])
        heapq.heappush(heap, (sum(lcm), order_key(lcm), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lti = basis[i].leading_term()[0]
        ltj = basis[j].leading_term()[0]
        if _coprime(lti, ltj):
            continue
        lcm = _lcm(lti, ltj)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not _divides(basis[k].leading_term()[0], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pending and pjk not in pending:
                skip = True
                break
        if skip:
            continue
        remainder = _reduce(s_polynomial(basis[i], basis[j]), basis, budget)
        if remainder:
            basis.append(remainder.monic())
            new = len(basis) - 1
            for k in range(new):
                push(k, new)

    # minimalise: drop elements whose leading term another element divides
    minimal: list[Polynomial] = []
    for i, g in enumerate(basis):
        lt = g.leading_term()[0]
        redundant = False
        for k, other in enumerate(basis):
            if k == i:
                continue
            lo = other.leading_term()[0]
            if _divides(lo, lt) and (lo != lt or k < i):
                redundant = True
                break
        if not redundant:
            minimal.append(g)

    # inter-reduce tails for the unique reduced basis
    reduced: list[Polynomial] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(_reduce(g, others, budget).monic() if others else g)
    reduced.sort(key=lambda p: order_key(p.leading_term()[0]), reverse=True)
    return reduced


def _require_parameter_free(polys: Iterable[Polynomial], what: str):
    for p in polys:
        if not p.is_parameter_free():
            raise InputError(f"{what} must be free of parameter variables: {p}")


def buchberger(I: Ideal, max_steps: int = DEFAULT_MAX_STEPS) -> GroebnerBasis:
    """The unique reduced Groebner basis of I for the global order."""
    _require_parameter_free(I.generators, "Groebner basis generators")
    basis = _groebner(I.generators, I.context, _Budget(max_steps))
    return GroebnerBasis(context=I.context, basis=tuple(basis))


def normal_form(f: Polynomial, G: GroebnerBasis, max_steps: int = DEFAULT_MAX_STEPS) -> Polynomial:
    """Unique remainder of multivariate division by G; zero iff f lies in the ideal."""
    if f.context != G.context:
        raise InputError("polynomial and basis belong to different variable contexts")
    if not G.basis:
        return f
    return _reduce(f, G.basis, _Budget(max_steps))


def ideal_member(f: Polynomial, I: Ideal, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    return not normal_form(f, buchberger(I, max_steps), max_steps)


def _fresh_name(ctx: VarContext) -> str:
    name = "t"
    while name in ctx.names:
        name += "_"
    return name


def _append_variable(ctx: VarContext, name: str) -> VarContext:
    return VarContext(projective=ctx.projective, parameters=ctx.parameters + (name,))


def _lift(p: Polynomial, ctx_ext: VarContext) -> Polynomial:
    return Polynomial(ctx_ext, {m + (0,): c for m, c in p._terms.items()})


def radical_member(f: Polynomial, I: Ideal, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """Decide f in sqrt(I) by the ring-extension membership test: 1 in I + (1 - t*f)."""
    if f.context != I.context:
        raise InputError("polynomial and ideal belong to different variable contexts")
    _require_parameter_free(I.generators, "radical membership generators")
    _require_parameter_free([f], "radical membership query")
    if not f:
        return True
    if I.is_zero():
        return False
    ctx_ext = _append_variable(I.context, _fresh_name(I.context))
    t = ctx_ext.variable(ctx_ext.parameters[-1])
    gens = [_lift(g, ctx_ext) for g in I.generators]
    gens.append(ctx_ext.one() - t * _lift(f, ctx_ext))
    basis = _groebner(gens, ctx_ext, _Budget(max_steps))
    return len(basis) == 1 and basis[0] == ctx_ext.one()


def is_smooth_projective(h: Polynomial, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """Gradient criterion for smoothness of the hypersurface h = 0.

    The hypersurface is smooth exactly when h and its gradient have no common
    projective zero, i.e. every variable lies in the radical of the ideal
    generated by h and its partial derivatives.
    """
    _require_parameter_free([h], "smoothness input")
    deg = homogeneous_degree(h)
    if deg == "any" or deg is None or deg < 1:
        raise InputError("smoothness is defined for nonzero homogeneous polynomials of degree >= 1")
    ctx = h.context
    gens = [h] + [partial_derivative(h, v) for v in ctx.projective]
    jac = Ideal.spanned_by(ctx, gens)
    gb = buchberger(jac, max_steps)
    reduced = Ideal(ctx, gb.basis)
    for v in ctx.projective:
        if not radical_member(ctx.variable(v), reduced, max_steps):
            return False
    return True


def zero_locus_ideal(D: Derivation) -> Ideal:
    """Ideal of the vanishing scheme of the induced field on projective space.

    Cut out by the 2x2 minors of the array with rows (x_0,...,x_n) and
    A^T x, where A is the derivation's entry matrix. The Euler derivation
    gives the zero ideal: its induced field vanishes everywhere.
    """
    A = D.constant_entries()
    ctx = D.context
    n = D.size
    xs = [ctx.variable(name) for name in ctx.projective]
    # j-th coordinate of A^T x
    v = [sum((xs[i] * A[i][j] for i in range(n)), ctx.zero()) for j in range(n)]
    minors = []
    for i in range(n):
        for j in range(i + 1, n):
            minors.append(xs[i] * v[j] - xs[j] * v[i])
    return Ideal.spanned_by(ctx, minors)


def vanishes_on(
    D: Derivation,
    I: Ideal,
    scheme_theoretic: bool = False,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> bool:
    """Decide whether the field induced by D vanishes on the zero set of I.

    Set-theoretic containment V(I) inside Z(D) by default (radical
    membership of every minor); ``scheme_theoretic=True`` demands plain ideal
    membership instead.
    """
    if D.context != I.context:
        raise InputError("derivation and ideal belong to different variable contexts")
    _require_parameter_free(I.generators, "vanishing-locus generators")
    Z = zero_locus_ideal(D)
    gb = buchberger(I, max_steps)
    reduced = Ideal(I.context, gb.basis)
    for g in Z.generators:
        if scheme_theoretic:
            if normal_form(g, gb, max_steps):
                return False
        else:
            if not radical_member(g, reduced, max_steps):
                return False
    return True
