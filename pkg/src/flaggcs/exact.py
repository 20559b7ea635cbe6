"""Exact rational and Gaussian-rational helpers.

Matrices are plain lists of rows holding :class:`fractions.Fraction` (or
:class:`ComplexRational`) entries; they are small (4d x 4d at most) so no
array library is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Matrix = list  # list[list[Fraction]]


def parse_rational(value: object) -> Fraction:
    """Parse ``"p/q"`` / ``"p"`` strings and ints. Floats are refused."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip()
        if not text or "." in text or "e" in text.lower():
            raise ValueError(f"not a rational: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class ComplexRational:
    """Element of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def coerce(value: "Scalar") -> "ComplexRational":
        if isinstance(value, ComplexRational):
            return value
        return ComplexRational(Fraction(value), Fraction(0))

    def __add__(self, other):
        o = ComplexRational.coerce(other)
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-ComplexRational.coerce(other))

    def __rsub__(self, other):
        return ComplexRational.coerce(other) - self

    def __mul__(self, other):
        o = ComplexRational.coerce(other)
        return ComplexRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ComplexRational.coerce(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return ComplexRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        return ComplexRational.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"({format_rational(self.re)}{'+' if self.im >= 0 else '-'}{format_rational(abs(self.im))}i)"


Scalar = Union[int, Fraction, ComplexRational]
I = ComplexRational(0, 1)


# -- matrices ---------------------------------------------------------------

def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _lift(v):
    return Fraction(v) if isinstance(v, int) else v


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Product skipping zero entries; the block matrices here are half zeros."""
    m = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * m
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] = x * y + acc[j]
        out.append([_lift(v) for v in acc])
    return out


def matvec(a: Matrix, v: Sequence) -> list:
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = x * y + acc
        out.append(_lift(acc))
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def block_diag(blocks: Iterable[Matrix]) -> Matrix:
    blocks = list(blocks)
    n = sum(len(b) for b in blocks)
    out = zeros(n)
    offset = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[offset + i][offset + j] = b[i][j]
        offset += k
    return out


def diagonal_blocks(a: Matrix, size: int) -> list[Matrix]:
    """Split a block-diagonal matrix; raises if off-diagonal blocks are nonzero."""
    n = len(a)
    if n % size:
        raise ValueError(f"dimension {n} is not a multiple of {size}")
    for i in range(n):
        for j in range(n):
            if i // size != j // size and a[i][j] != 0:
                raise ValueError("matrix is not block diagonal")
    return [
        [row[k : k + size] for row in a[k : k + size]] for k in range(0, n, size)
    ]


def trace(a: Matrix):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q or Q(i) by Gaussian elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        p = work[r][c]
        for i in range(r + 1, len(work)):
            if work[i][c] != 0:
                f = work[i][c] / p
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def leading_principal_minors(a: Matrix) -> list[Fraction]:
    """All leading principal minors, via pivots of unpivoted elimination.

    Stops (appending a zero) at the first vanishing pivot; later minors are
    irrelevant for a definiteness test.
    """
    work = [list(map(Fraction, r)) for r in a]
    n = len(work)
    minors: list[Fraction] = []
    det = Fraction(1)
    for k in range(n):
        p = work[k][k]
        if p == 0:
            minors.append(Fraction(0))
            return minors
        det *= p
        minors.append(det)
        for i in range(k + 1, n):
            f = work[i][k] / p
            if f:
                work[i] = [x - f * y for x, y in zip(work[i], work[k])]
    return minors


def is_positive_definite(a: Matrix) -> bool:
    """Sylvester's criterion on a symmetric rational matrix."""
    if any(a[i][j] != a[j][i] for i in range(len(a)) for j in range(i)):
        raise ValueError("matrix is not symmetric")
    minors = leading_principal_minors(a)
    return len(minors) == len(a) and all(m > 0 for m in minors)


def inertia(a: Matrix) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric rational matrix, by congruence."""
    if any(a[i][j] != a[j][i] for i in range(len(a)) for j in range(i)):
        raise ValueError("matrix is not symmetric")
    work = [list(map(Fraction, r)) for r in a]
    n = len(work)
    pos = neg = 0

    def swap(i, j):
        work[i], work[j] = work[j], work[i]
        for row in work:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if work[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if work[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            # add row/column j to i so the diagonal entry becomes 2 a_ij
            work[i] = [x + y for x, y in zip(work[i], work[j])]
            for row in work:
                row[i] += row[j]
            piv = i
        swap(k, piv)
        p = work[k][k]
        for i in range(k + 1, n):
            f = work[i][k] / p
            if f:
                work[i] = [x - f * y for x, y in zip(work[i], work[k])]
                for row in work:
                    row[i] -= f * row[k]
        if p > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg, n - pos - neg
