"""Theta-cells of the moduli space and their Weyl translates.

A cell is recorded by the data that is constant along it: the set of roots
carrying a noncomplex block, each with the sign of its ``x``, and the sign of
every complex block. Two cells are equal iff these agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional

from . import exact
from .errors import ClassificationError
from .roots import Root, RootSystem, WeylElement, negate, theta_closure, weyl_group
from .structures import Complex, InvariantGCS, NonComplex
from .weyl_action import positive_normalization


def _signed(root: Root) -> tuple[Root, int]:
    if all(c >= 0 for c in root):
        return root, 1
    return negate(root), -1


@dataclass(frozen=True)
class ThetaCell:
    algebra: RootSystem = field(repr=False, compare=False)
    theta: tuple          # signed simple roots after translation: ((root, sign), ...)
    closure: tuple        # signed noncomplex roots: ((root, sign), ...), root order
    complex_signs: tuple  # ((root, sign), ...) on the remaining positive roots
    standard_theta: tuple = field(compare=False)
    word: tuple = field(compare=False, default=())

    @property
    def dim(self) -> int:
        return len(self.theta)

    @property
    def gcs_type(self) -> int:
        return self.algebra.d - len(self.closure)

    @property
    def canonical_key(self) -> str:
        return json.dumps(
            {
                "noncomplex": [[list(r), s] for r, s in self.closure],
                "complex": [[list(r), s] for r, s in self.complex_signs],
            },
            separators=(",", ":"),
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.dim, self.gcs_type


def _order(rs: RootSystem, signed: list) -> tuple:
    return tuple(sorted(signed, key=lambda t: rs.positive_index[t[0]]))


def translate(w: WeylElement, rs: RootSystem, standard_theta, word=None) -> ThetaCell:
    """``w . c_Theta``: images of the closure keep track of the sign of ``x``."""
    standard_theta = tuple(sorted((tuple(t) for t in standard_theta), key=lambda r: rs.positive_index[r]))
    closure = theta_closure(rs, standard_theta)
    nc = _order(rs, [_signed(w(beta)) for beta in closure])
    theta = _order(rs, [_signed(w(t)) for t in standard_theta])
    nc_roots = {r for r, _ in nc}
    winv = w.inverse()
    cx = tuple(
        (alpha, 1 if rs.is_positive(winv(alpha)) else -1)
        for alpha in rs.positive_roots
        if alpha not in nc_roots
    )
    return ThetaCell(rs, theta, nc, cx, standard_theta, w.word if word is None else word)


def cell_of(rs: RootSystem, theta) -> ThetaCell:
    return translate(WeylElement.identity(rs), rs, theta)


def subsets(items) -> list[tuple]:
    items = list(items)
    return [c for k in range(len(items) + 1) for c in combinations(items, k)]


def structure_key(j: InvariantGCS) -> str:
    """Canonical key of the cell containing ``j`` (signs of ``x`` and of complex blocks)."""
    rs = j.algebra
    nc, cx = [], []
    for alpha, b in j.items():
        if isinstance(b, Complex):
            cx.append((alpha, b.sign))
        else:
            nc.append((alpha, 1 if b.x > 0 else -1))
    return ThetaCell(rs, (), tuple(nc), tuple(cx), ()).canonical_key


def diagram_automorphisms(rs: RootSystem) -> list[tuple]:
    """Permutations of the simple roots preserving the Cartan matrix."""
    n = rs.rank
    c = rs.cartan
    return [
        p for p in permutations(range(n))
        if all(c[p[i]][p[j]] == c[i][j] for i in range(n) for j in range(n))
    ]


def _relabel(root: Root, p: tuple) -> Root:
    out = [0] * len(root)
    for i, c in enumerate(root):
        out[p[i]] = c
    return tuple(out)


def relabel_cell(cell: ThetaCell, p: tuple) -> ThetaCell:
    rs = cell.algebra
    return ThetaCell(
        rs,
        _order(rs, [(_relabel(r, p), s) for r, s in cell.theta]),
        _order(rs, [(_relabel(r, p), s) for r, s in cell.closure]),
        _order(rs, [(_relabel(r, p), s) for r, s in cell.complex_signs]),
        tuple(_relabel(r, p) for r in cell.standard_theta),
        cell.word,
    )


@dataclass
class CellDecomposition:
    algebra: RootSystem
    raw_count: int
    cells: list                 # deduplicated, first occurrence order
    weyl_classes: list          # lists of canonical keys, one per W-orbit
    symmetry_classes: list      # orbits under W and diagram automorphisms
    shapes: dict                # (dim, type) -> number of cells

    @property
    def count(self) -> int:
        return len(self.cells)


def enumerate_cells(rs: RootSystem, cap: Optional[int] = None) -> CellDecomposition:
    group = weyl_group(rs, cap)
    raw = 0
    by_key: dict = {}
    orbit_of_theta: dict = {}
    for theta in subsets(rs.simple_roots):
        keys = []
        for w in group:
            raw += 1
            cell = translate(w, rs, theta)
            by_key.setdefault(cell.canonical_key, cell)
            keys.append(cell.canonical_key)
        orbit_of_theta[theta] = frozenset(keys)

    weyl_classes = []
    for orbit in orbit_of_theta.values():
        if orbit not in weyl_classes:
            weyl_classes.append(orbit)

    autos = diagram_automorphisms(rs)
    merged: list = []
    for orbit in weyl_classes:
        images = set(orbit)
        for p in autos:
            images |= {relabel_cell(by_key[k], p).canonical_key for k in orbit}
        for group_ in merged:
            if group_ & images:
                group_ |= images
                break
        else:
            merged.append(set(images))

    shapes: dict = {}
    for cell in by_key.values():
        shapes[cell.shape] = shapes.get(cell.shape, 0) + 1
    return CellDecomposition(
        rs,
        raw,
        list(by_key.values()),
        [sorted(o) for o in weyl_classes],
        [sorted(o) for o in merged],
        dict(sorted(shapes.items())),
    )


def cell_of_structure(j: InvariantGCS, cap: Optional[int] = None) -> ThetaCell:
    """Standard cell of ``j``: normalize by the Weyl group, then read off Theta."""
    rs = j.algebra
    found = positive_normalization(j, cap)
    if found is None:
        raise ClassificationError("no Weyl element makes every x positive and every complex block +J0")
    _, normalized = found
    support = tuple(alpha for alpha, b in normalized.items() if isinstance(b, NonComplex))
    simple = set(rs.simple_roots)
    theta = tuple(r for r in support if r in simple)
    if support != theta_closure(rs, theta):
        raise ClassificationError(
            f"noncomplex support {[list(r) for r in support]} is not the closure of a set of simple roots"
        )
    return cell_of(rs, theta)


def cell_parameter_dimension(rs: RootSystem, theta) -> int:
    """Free parameters left by ``1/x_{a+b} = 1/x_a + 1/x_b`` on the closure of ``theta``."""
    closure = theta_closure(rs, theta)
    pos = {r: i for i, r in enumerate(closure)}
    rows = []
    for a, b, c in rs.triples:
        if a in pos and b in pos and c in pos:
            row = [Fraction(0)] * len(closure)
            row[pos[c]] += 1
            row[pos[a]] -= 1
            row[pos[b]] -= 1
            rows.append(row)
    return len(closure) - exact.rank(rows)
