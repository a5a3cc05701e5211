"""Shared helpers for the test suite: random generators and independent oracles.

The oracles here deliberately avoid the library's reduction machinery: span
membership is decided with a local sparse Gaussian elimination over plain
dicts, so Groebner results are checked against a second, unrelated route.
"""

from __future__ import annotations

import random
from fractions import Fraction

from projvf import Polynomial, VarContext, monomials_of_degree


def rand_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_poly(
    rng: random.Random,
    ctx: VarContext,
    max_degree: int = 3,
    max_terms: int = 4,
    projective_only: bool = True,
) -> Polynomial:
    terms = {}
    width = ctx.nproj if projective_only else ctx.nvars
    for _ in range(rng.randint(1, max_terms)):
        m = [0] * ctx.nvars
        for _ in range(rng.randint(0, max_degree)):
            m[rng.randrange(width)] += 1
        c = rand_fraction(rng)
        if c:
            terms[tuple(m)] = terms.get(tuple(m), Fraction(0)) + c
    return Polynomial(ctx, {m: c for m, c in terms.items() if c})


def rand_homogeneous(rng: random.Random, ctx: VarContext, degree: int, max_terms: int = 4) -> Polynomial:
    monos = monomials_of_degree(ctx, degree, projective_only=True)
    terms = {}
    for m in rng.sample(monos, min(max_terms, len(monos))):
        c = rand_fraction(rng)
        if c:
            terms[m] = c
    return Polynomial(ctx, terms)


def rand_matrix(rng: random.Random, rows: int, cols: int, span: int = 5):
    return [[Fraction(rng.randint(-span, span)) for _ in range(cols)] for _ in range(rows)]


# -- independent sparse elimination over monomial-keyed dicts -----------------


def _pivot(row: dict) -> tuple:
    return max(row)


def echelon_insert(basis: dict, row: dict) -> bool:
    """Reduce a sparse row against an echelon set; insert if independent."""
    row = dict(row)
    while row:
        piv = _pivot(row)
        if piv in basis:
            c = row[piv]
            other = basis[piv]
            for m, v in other.items():
                s = row.get(m, Fraction(0)) - c * v
                if s:
                    row[m] = s
                else:
                    row.pop(m, None)
        else:
            c = row[piv]
            basis[piv] = {m: v / c for m, v in row.items()}
            return True
    return False


def in_span(basis: dict, row: dict) -> bool:
    return not echelon_insert(dict(basis), row) if row else True


def poly_row(p: Polynomial) -> dict:
    return {m: c for m, c in p.items()}


def dict_rows_rank(rows) -> int:
    """Rank of a list of sparse rows (dicts keyed by orderable column labels)."""
    basis: dict = {}
    for row in rows:
        echelon_insert(basis, {k: Fraction(v) for k, v in row.items() if v})
    return len(basis)


def brute_force_stabilizer_dimension(h: Polynomial) -> int:
    """Independent stabilizer count: corank of the full coefficient-matching
    system over every monomial of the right degree, eliminated locally."""
    from projvf import partial_derivative

    ctx = h.context
    n = ctx.nproj
    degree = max(sum(m[:n]) for m in h.monomials())
    columns = []
    for i in range(n):
        xi = ctx.monomial({ctx.projective[i]: 1})
        for j in range(n):
            columns.append(partial_derivative(h, ctx.projective[j]).mul_term(xi, 1))
    columns.append(-h)
    rows = []
    for m in monomials_of_degree(ctx, degree):
        row = {k: p.coefficient(m) for k, p in enumerate(columns) if p.coefficient(m)}
        rows.append(row)
    return n * n + 1 - dict_rows_rank(rows)


def brute_force_member(f: Polynomial, generators, extra_degree: int = 4) -> bool:
    """Degree-truncated linear-algebra membership oracle.

    Builds the span of m*g over all monomials m of degree <= B and tests
    whether f reduces to zero against it, raising B until the span stops
    growing past a safe floor.
    """
    ctx = f.context
    gens = [g for g in generators if g]
    if not gens:
        return not f
    target = poly_row(f)
    if not target:
        return True
    f_degree = max(sum(m) for m in target)
    floor = f_degree + 2
    basis: dict = {}
    dim = 0
    stable = 0
    bound = floor + extra_degree
    for b in range(bound + 1):
        for m in monomials_of_degree(ctx, b, projective_only=False):
            for g in gens:
                echelon_insert(basis, poly_row(g.mul_term(m, 1)))
        if in_span(basis, target):
            return True
        stable = stable + 1 if len(basis) == dim else 0
        dim = len(basis)
        if b >= floor and stable >= 2:
            return False
    return False
