"""Generalized almost Kähler pairs of invariant structures."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .errors import ClassificationError, InvalidStructure
from .integrability import is_integrable
from .structures import (
    Block,
    BTransform,
    Complex,
    InvariantGCS,
    NonComplex,
    SignedZero,
    Symplectic,
    b_transform,
    block_matrix,
    normal_form,
    pairing_block,
)


@dataclass(frozen=True)
class KahlerPair:
    J: InvariantGCS
    Jp: InvariantGCS

    def __post_init__(self):
        if self.J.algebra != self.Jp.algebra:
            raise InvalidStructure(
                f"pair members live on different algebras ({self.J.algebra.name} vs {self.Jp.algebra.name})"
            )

    @property
    def algebra(self):
        return self.J.algebra

    def blocks(self):
        return zip(self.J.algebra.positive_roots, self.J.blocks, self.Jp.blocks)


# Admissible per-root pairs: (tag, J side, J' side).
PAIR_TABLE = (
    (1, "J0", "NC+"),
    (2, "NC+", "J0"),
    (3, "-J0", "NC-"),
    (4, "NC-", "-J0"),
)
RAY_TAGS = {1: "{+0}xR+", 2: "R+x{+0}", 3: "{-0}xR-", 4: "R-x{-0}"}


def _side(b: Block) -> str:
    if isinstance(b, Complex):
        return "J0" if b.sign > 0 else "-J0"
    return "NC+" if b.x > 0 else "NC-"


def nc_commute(b1: NonComplex, b2: NonComplex) -> bool:
    """Closed form for two noncomplex blocks ``(a, x, y)`` and ``(b, w, z)``."""
    return b1.x * b2.y == b2.x * b1.y and b2.a * b1.x == b1.a * b2.x


def blocks_commute(b1: Block, b2: Block) -> bool:
    m1, m2 = block_matrix(b1), block_matrix(b2)
    result = exact.matmul(m1, m2) == exact.matmul(m2, m1)
    if isinstance(b1, NonComplex) and isinstance(b2, NonComplex):
        if nc_commute(b1, b2) != result:
            raise AssertionError(f"commutation shortcut disagrees with matrices for {b1}, {b2}")
    return result


def commute(p: KahlerPair) -> bool:
    return all(blocks_commute(b1, b2) for _, b1, b2 in p.blocks())


def block_metric(b1: Block, b2: Block) -> exact.Matrix:
    return exact.scale(Fraction(-1), exact.matmul(block_matrix(b1), block_matrix(b2)))


def symmetric_form(g: exact.Matrix, p: exact.Matrix) -> exact.Matrix:
    """Symmetrization of ``P G``, the Gram matrix of ``v -> <G v, v>``."""
    pg = exact.matmul(p, g)
    return [[(pg[i][j] + pg[j][i]) / 2 for j in range(len(pg))] for i in range(len(pg))]


def metric_operator(p: KahlerPair) -> tuple[exact.Matrix, exact.Matrix]:
    """``G = -J J'`` and the Gram matrix of its bilinear form."""
    if not commute(p):
        raise InvalidStructure("metric operator needs a commuting pair")
    gs = [block_metric(b1, b2) for _, b1, b2 in p.blocks()]
    forms = [symmetric_form(g, pairing_block()) for g in gs]
    return exact.block_diag(gs), exact.block_diag(forms)


def block_is_positive(b1: Block, b2: Block) -> bool:
    if not blocks_commute(b1, b2):
        return False
    return exact.is_positive_definite(symmetric_form(block_metric(b1, b2), pairing_block()))


def is_almost_kahler(p: KahlerPair) -> bool:
    return commute(p) and all(block_is_positive(b1, b2) for _, b1, b2 in p.blocks())


def is_kahler_pair(p: KahlerPair, almost: bool = False) -> bool:
    """Commuting, positive, and (unless ``almost``) both members integrable."""
    if not is_almost_kahler(p):
        return False
    if almost:
        return True
    return is_integrable(p.J)[0] and is_integrable(p.Jp)[0]


def classify_block_pair(b1: Block, b2: Block) -> int:
    """Row of the per-root table for an almost-Kähler block pair."""
    if not block_is_positive(b1, b2):
        raise ClassificationError(f"({b1}, {b2}) does not give a positive commuting pair")
    sides = (_side(b1), _side(b2))
    for row, s1, s2 in PAIR_TABLE:
        if sides == (s1, s2):
            return row
    raise ClassificationError(f"({b1}, {b2}) is positive but missing from the pair table")


def classify_pair_blocks(p: KahlerPair) -> tuple:
    rows = []
    for root, b1, b2 in p.blocks():
        try:
            rows.append(classify_block_pair(b1, b2))
        except ClassificationError as exc:
            raise ClassificationError(f"root {list(root)}: {exc}") from exc
    return tuple(rows)


def kahler_global_check(p: KahlerPair) -> bool:
    """Whether the noncomplex member sits on the same side at every root."""
    rows = classify_pair_blocks(p)
    sides = {row in (2, 4) for row in rows}
    return len(sides) == 1


def diagonal_b_transform(p: KahlerPair, bt: BTransform) -> KahlerPair:
    return KahlerPair(b_transform(p.J, bt), b_transform(p.Jp, bt))


@dataclass(frozen=True)
class KahlerCoordinate:
    first: object
    second: object
    row: int

    @property
    def ray(self) -> str:
        return RAY_TAGS[self.row]

    @property
    def x(self) -> Fraction:
        return (self.first if isinstance(self.first, Symplectic) else self.second).x


def kahler_moduli(p: KahlerPair) -> tuple:
    """Per root, the pair of moduli coordinates with its ray tag."""
    rows = classify_pair_blocks(p)
    c1, _ = normal_form(p.J)
    c2, _ = normal_form(p.Jp)
    out = []
    for row, a, b in zip(rows, c1, c2):
        coord = KahlerCoordinate(a, b, row)
        zero, sym = (a, b) if isinstance(a, SignedZero) else (b, a)
        if not isinstance(zero, SignedZero) or not isinstance(sym, Symplectic):
            raise AssertionError("pair coordinate must be one signed zero and one symplectic value")
        if (zero.sign > 0) != (sym.x > 0):
            raise AssertionError("pair coordinate does not lie on a ray")
        out.append(coord)
    return tuple(out)


def metric_moduli(p: KahlerPair) -> tuple:
    """The ``x`` of the noncomplex member at each root (metric ``(1/x) I`` after removing B)."""
    return tuple(c.x for c in kahler_moduli(p))
