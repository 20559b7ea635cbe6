"""Root systems of simple Lie algebras and their Weyl groups.

Roots are integer tuples of coefficients over the simple roots; a negative
root is the negated tuple. Cartan matrices follow ``a_ij = <alpha_i^vee, alpha_j>``
so that ``s_i(alpha_j) = alpha_j - a_ij alpha_i``.
"""

from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import GroupTooLarge, InvalidRootSystem, NotSimpleRoot

Root = tuple  # tuple[int, ...]

DEFAULT_WEYL_CAP = 100_000
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    family = family.upper()
    if family in _MIN_RANK:
        if rank < _MIN_RANK[family]:
            raise InvalidRootSystem(f"{family}{rank} is not a simple type ({family}_n needs n >= {_MIN_RANK[family]})")
    elif family in _EXCEPTIONAL:
        if rank not in _EXCEPTIONAL[family]:
            raise InvalidRootSystem(f"{family}{rank} is not a simple type")
    else:
        raise InvalidRootSystem(f"unknown family {family!r}")

    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if family in "ABC":
        for i in range(rank - 1):
            link(i, i + 1)
        if family == "B":  # alpha_n short
            link(rank - 2, rank - 1, -1, -2)
        elif family == "C":  # alpha_n long
            link(rank - 2, rank - 1, -2, -1)
    elif family == "D":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 3, rank - 1)
    elif family == "E":  # Bourbaki labelling: 1-3-4-5-...; 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, rank - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)  # alpha_3, alpha_4 short
        link(2, 3)
    elif family == "G":
        link(0, 1, -1, -3)  # alpha_1 long, alpha_2 short
    return tuple(tuple(r) for r in a)


def parse_algebra(designator: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", designator or "")
    if not m:
        raise InvalidRootSystem(f"bad algebra designator {designator!r}; expected e.g. 'A2'")
    return m.group(1).upper(), int(m.group(2))


def _sort_key(root: Root):
    # height first, then simple-root order (alpha_1 before alpha_2, ...)
    return (sum(root), tuple(-c for c in root))


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple = field(repr=False)
    positive_roots: tuple = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def d(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple:
        return tuple(
            tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)
        )

    @cached_property
    def roots(self) -> tuple:
        """All roots: positive roots followed by their negatives, same order."""
        return self.positive_roots + tuple(negate(r) for r in self.positive_roots)

    @cached_property
    def index(self) -> dict:
        return {r: i for i, r in enumerate(self.roots)}

    @cached_property
    def positive_index(self) -> dict:
        return {r: i for i, r in enumerate(self.positive_roots)}

    @cached_property
    def triples(self) -> tuple:
        """Additive triples (alpha, beta, alpha+beta), alpha before beta in root order."""
        out = []
        pos = self.positive_index
        for i, a in enumerate(self.positive_roots):
            for b in self.positive_roots[i + 1 :]:
                s = add_roots(a, b)
                if s in pos:
                    out.append((a, b, s))
        return tuple(out)

    @cached_property
    def triple_index(self) -> frozenset:
        return frozenset(frozenset((a, b)) for a, b, _ in self.triples)

    def is_positive(self, root: Root) -> bool:
        return root in self.positive_index

    def is_root(self, root: Root) -> bool:
        return root in self.index

    def reflect(self, i: int, root: Root) -> Root:
        """Simple reflection s_i (0-based) applied to any integer vector."""
        pairing = sum(self.cartan[i][j] * root[j] for j in range(self.rank))
        out = list(root)
        out[i] -= pairing
        return tuple(out)

    def __str__(self):
        return self.name


def negate(root: Root) -> Root:
    return tuple(-c for c in root)


def add_roots(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def height(root: Root) -> int:
    return sum(root)


def build_root_system(family: str, rank: int | None = None) -> RootSystem:
    """Positive roots by closing the simple roots under simple reflections."""
    if rank is None:
        family, rank = parse_algebra(family)
    family = family.upper()
    cartan = cartan_matrix(family, rank)
    stub = RootSystem(family, rank, cartan, ())
    simple = stub.simple_roots
    seen = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for i in range(rank):
            s = stub.reflect(i, r)
            if s not in seen:
                seen.add(s)
                queue.append(s)
    positive = sorted((r for r in seen if all(c >= 0 for c in r)), key=_sort_key)
    return RootSystem(family, rank, cartan, tuple(positive))


_CACHE: dict = {}


def root_system(designator: str) -> RootSystem:
    """Cached ``build_root_system`` keyed by designator such as ``"A2"``."""
    key = parse_algebra(designator)
    if key not in _CACHE:
        _CACHE[key] = build_root_system(*key)
    return _CACHE[key]


def additive_triples(rs: RootSystem) -> set:
    return set(rs.triples)


def _check_theta(rs: RootSystem, theta: Iterable[Root]) -> frozenset:
    simple = set(rs.simple_roots)
    theta = frozenset(tuple(t) for t in theta)
    for t in theta:
        if t not in simple:
            raise NotSimpleRoot(f"{list(t)} is not a simple root of {rs.name}")
    return theta


def theta_closure(rs: RootSystem, theta: Iterable[Root]) -> tuple:
    """Positive roots whose support lies in theta, in root order."""
    theta = _check_theta(rs, theta)
    allowed = {t.index(1) for t in theta}
    return tuple(
        r for r in rs.positive_roots if all(c == 0 or i in allowed for i, c in enumerate(r))
    )


def simple_root(rs: RootSystem, i: int) -> Root:
    """Simple root alpha_i, 1-based as in the usual notation."""
    if not 1 <= i <= rs.rank:
        raise NotSimpleRoot(f"simple root index {i} out of range for {rs.name}")
    return rs.simple_roots[i - 1]


# -- Weyl group -------------------------------------------------------------

@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as a permutation of ``rs.roots``.

    ``word`` is a reduced word of 0-based simple-reflection indices; the
    element is the product ``s_word[0] s_word[1] ...`` (rightmost acts first).
    """

    algebra: RootSystem = field(repr=False, compare=False)
    word: tuple = field(compare=False)
    perm: tuple = field(repr=False)

    @staticmethod
    def identity(rs: RootSystem) -> "WeylElement":
        return WeylElement(rs, (), tuple(range(len(rs.roots))))

    @staticmethod
    def simple(rs: RootSystem, i: int) -> "WeylElement":
        perm = tuple(rs.index[rs.reflect(i, r)] for r in rs.roots)
        return WeylElement(rs, (i,), perm)

    @staticmethod
    def from_word(rs: RootSystem, word: Iterable[int]) -> "WeylElement":
        w = WeylElement.identity(rs)
        for i in word:
            if not 0 <= i < rs.rank:
                raise NotSimpleRoot(f"simple reflection index {i + 1} out of range for {rs.name}")
            w = w * WeylElement.simple(rs, i)
        return w

    def __call__(self, root: Root) -> Root:
        rs = self.algebra
        return rs.roots[self.perm[rs.index[tuple(root)]]]

    act = __call__

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        perm = tuple(self.perm[j] for j in other.perm)
        return WeylElement(self.algebra, self.word + other.word, perm)

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return WeylElement(self.algebra, tuple(reversed(self.word)), tuple(inv))

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))


def weyl_cap() -> int:
    raw = os.environ.get("FLAGGCS_WEYL_CAP")
    if raw is None:
        return DEFAULT_WEYL_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise InvalidRootSystem(f"FLAGGCS_WEYL_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise InvalidRootSystem("FLAGGCS_WEYL_CAP must be positive")
    return cap


_WEYL_CACHE: dict = {}


def weyl_group(rs: RootSystem, cap: int | None = None) -> tuple:
    """All elements, breadth-first from the identity (so words are reduced)."""
    cap = weyl_cap() if cap is None else cap
    key = (rs.family, rs.rank)
    cached = _WEYL_CACHE.get(key)
    if cached is not None:
        if len(cached) > cap:
            raise GroupTooLarge(cap, len(cached))
        return cached
    gens = [WeylElement.simple(rs, i) for i in range(rs.rank)]
    e = WeylElement.identity(rs)
    seen = {e.perm: e}
    order = [e]
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for g in gens:
            nw = g * w
            if nw.perm not in seen:
                if len(seen) >= cap:
                    raise GroupTooLarge(cap, len(seen))
                seen[nw.perm] = nw
                order.append(nw)
                queue.append(nw)
    result = tuple(order)
    _WEYL_CACHE[key] = result
    return result
