"""Exact dense linear algebra over the rationals.

Everything here is deterministic: row reduction picks the first nonzero pivot
(no magnitude pivoting, exact arithmetic needs none), kernel bases set free
variables to one in column order, and only rational eigenvalues are
materialised. The part of the spectrum outside the rationals is reported as
the unfactored residual of the characteristic polynomial, never approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError


@dataclass(frozen=True)
class UnivariatePoly:
    """Polynomial in one variable ``t``; coefficients ascending, no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, coeffs: Iterable) -> "UnivariatePoly":
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        if self.is_zero() or other.is_zero():
            return UnivariatePoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePoly.of(out)

    def deflate(self, root: Fraction) -> "UnivariatePoly":
        """Divide by (t - root); the root must be exact."""
        if self(root):
            raise InputError("deflation by a non-root")
        out = [Fraction(0)] * (len(self.coeffs) - 1)
        carry = Fraction(0)
        for k in range(len(self.coeffs) - 1, 0, -1):
            carry = self.coeffs[k] + carry * root
            out[k - 1] = carry
        return UnivariatePoly.of(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                mag = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                mag = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not pieces:
                pieces.append(f"-{mag}" if c < 0 else mag)
            else:
                pieces.append(f"- {mag}" if c < 0 else f"+ {mag}")
        return " ".join(pieces)


class RatMatrix:
    """Dense matrix of rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        grid = tuple(tuple(Fraction(v) for v in row) for row in entries)
        if not grid or not grid[0]:
            raise InputError("matrix must have at least one row and one column")
        if any(len(row) != len(grid[0]) for row in grid):
            raise InputError("matrix rows must all have the same length")
        self.entries = grid
        self.rows = len(grid)
        self.cols = len(grid[0])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> "RatMatrix":
        """Row-major matrix of rational strings (``p/q`` or ``p``)."""
        from .rationals import parse_rational

        return cls([[parse_rational(v) for v in row] for row in rows])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "RatMatrix":
        return RatMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def trace(self) -> Fraction:
        if not self.is_square():
            raise InputError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatMatrix([[v * other for v in row] for row in self.entries])
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InputError("matrix shapes do not allow multiplication")
        cols = list(zip(*other.entries))
        return RatMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.entries]
        )

    __rmul__ = __mul__

    def mul_vec(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise InputError("vector length does not match matrix width")
        vv = [Fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(row, vv)), Fraction(0)) for row in self.entries)

    def _same_shape(self, other: "RatMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise InputError("matrix shapes differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def to_strings(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.entries]

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(v) for v in row) for row in self.entries) + "]"

    def __repr__(self) -> str:
        return f"RatMatrix({[list(map(str, row)) for row in self.entries]})"


def rref(M: RatMatrix) -> tuple[RatMatrix, int]:
    """Reduced row echelon form and rank; first-nonzero pivoting."""
    grid = [list(row) for row in M.entries]
    rows, cols = M.rows, M.cols
    pivot_row = 0
    for col in range(cols):
        sel = next((r for r in range(pivot_row, rows) if grid[r][col]), None)
        if sel is None:
            continue
        grid[pivot_row], grid[sel] = grid[sel], grid[pivot_row]
        inv = Fraction(1) / grid[pivot_row][col]
        grid[pivot_row] = [v * inv for v in grid[pivot_row]]
        for r in range(rows):
            if r != pivot_row and grid[r][col]:
                f = grid[r][col]
                grid[r] = [a - f * b for a, b in zip(grid[r], grid[pivot_row])]
        pivot_row += 1
        if pivot_row == rows:
            break
    return RatMatrix(grid), pivot_row


def kernel_basis(M: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Canonical basis of the right null space (free variables set to 1 in order)."""
    R, rank = rref(M)
    pivots: dict[int, int] = {}
    col = 0
    for r in range(rank):
        while not R.entries[r][col]:
            col += 1
        pivots[col] = r
        col += 1
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * M.cols
        v[fc] = Fraction(1)
        for pc, pr in pivots.items():
            v[pc] = -R.entries[pr][fc]
        basis.append(tuple(v))
    return basis


def char_poly(M: RatMatrix) -> UnivariatePoly:
    """Characteristic polynomial det(tI - M), monic, by the Faddeev-LeVerrier recurrence."""
    if not M.is_square():
        raise InputError("characteristic polynomial of a non-square matrix")
    n = M.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    N = RatMatrix.identity(n)
    for k in range(1, n + 1):
        MN = M * N
        c = -MN.trace() / k
        coeffs[n - k] = c
        if k < n:
            N = MN + RatMatrix.identity(n) * c
    return UnivariatePoly.of(coeffs)


@dataclass(frozen=True)
class EigenPair:
    value: Fraction
    space: tuple[tuple[Fraction, ...], ...]
    multiplicity: int


@dataclass(frozen=True)
class EigenDecomposition:
    pairs: tuple[EigenPair, ...]
    residual: UnivariatePoly

    def eigenvalues(self) -> list[Fraction]:
        return [p.value for p in self.pairs]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _rational_roots(p: UnivariatePoly) -> tuple[list[tuple[Fraction, int]], UnivariatePoly]:
    """All rational roots with multiplicities, plus the unfactored remainder."""
    q = p
    roots: list[tuple[Fraction, int]] = []
    zero_mult = 0
    while q.degree >= 1 and not q.coeffs[0]:
        q = UnivariatePoly.of(q.coeffs[1:])
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if q.degree >= 1:
        scale = math.lcm(*(c.denominator for c in q.coeffs))
        ints = [c * scale for c in q.coeffs]
        lead = int(ints[-1])
        const = int(ints[0])
        candidates = sorted(
            {Fraction(sign * num, den) for num in _divisors(const) for den in _divisors(lead) for sign in (1, -1)}
        )
        for cand in candidates:
            mult = 0
            while q.degree >= 1 and not q(cand):
                q = q.deflate(cand)
                mult += 1
            if mult:
                roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0])
    return roots, q


def rational_eigen(M: RatMatrix) -> EigenDecomposition:
    """Rational eigenvalues with exact eigenspaces; the rest stays as a residual factor.

    Roots are found with the rational-root theorem on the integer-scaled
    characteristic polynomial (exhaustive divisor search); eigenspaces come
    from :func:`kernel_basis` of M - lambda*I.
    """
    p = char_poly(M)
    roots, residual = _rational_roots(p)
    pairs = []
    n = M.rows
    for value, mult in roots:
        space = kernel_basis(M - RatMatrix.identity(n) * value)
        pairs.append(EigenPair(value=value, space=tuple(space), multiplicity=mult))
    return EigenDecomposition(pairs=tuple(pairs), residual=residual)
