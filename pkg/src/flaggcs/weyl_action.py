"""Weyl group acting on invariant structures by reindexing root blocks."""

from __future__ import annotations

from typing import Optional

from .errors import InvalidStructure
from .roots import RootSystem, WeylElement, negate, weyl_group
from .structures import Complex, InvariantGCS, NonComplex, negate_root_block


def act(w: WeylElement, j: InvariantGCS):
    """``(w.J)_alpha = J_{w^-1 alpha}``, using the negative-root rule when needed."""
    rs = j.algebra
    if w.algebra != rs:
        raise InvalidStructure(f"Weyl element of {w.algebra.name} cannot act on a structure over {rs.name}")
    winv = w.inverse()
    blocks = []
    for alpha in rs.positive_roots:
        beta = winv(alpha)
        if rs.is_positive(beta):
            blocks.append(j[beta])
        else:
            blocks.append(negate_root_block(j[negate(beta)]))
    return InvariantGCS(rs, tuple(blocks))


def act_pair(w: WeylElement, pair):
    return type(pair)(act(w, pair.J), act(w, pair.Jp))


def orbit(j: InvariantGCS, cap: Optional[int] = None) -> list[InvariantGCS]:
    """Distinct images of ``j``, in the order first reached over the group."""
    seen = {}
    for w in weyl_group(j.algebra, cap):
        image = act(w, j)
        seen.setdefault(image.blocks, image)
    return list(seen.values())


def is_positive_normalized(j: InvariantGCS) -> bool:
    """All noncomplex ``x > 0`` and every complex block equal to ``+J0``."""
    return all(
        (b.sign > 0) if isinstance(b, Complex) else (b.x > 0) for b in j.blocks
    )


def positive_normalization(j: InvariantGCS, cap: Optional[int] = None) -> Optional[tuple[WeylElement, InvariantGCS]]:
    """Find ``w`` with ``w.J`` positively normalized; ``None`` if no element works."""
    for w in weyl_group(j.algebra, cap):
        image = act(w, j)
        if is_positive_normalized(image):
            return w, image
    return None


def signed_positive_system(j: InvariantGCS) -> set:
    """Roots where ``j`` looks 'positive': x > 0 or +J0, plus negatives of the others.

    ``w.J`` is positively normalized iff ``w^-1`` maps the positive roots onto
    this set.
    """
    out = set()
    for alpha, b in j.items():
        positive = b.sign > 0 if isinstance(b, Complex) else b.x > 0
        out.add(alpha if positive else negate(alpha))
    return out
