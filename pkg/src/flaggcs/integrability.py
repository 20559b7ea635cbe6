"""Integrability of invariant structures, checked one additive triple at a time."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional

from .errors import ConstructionError, InvalidStructure
from .roots import Root, RootSystem, theta_closure
from .structures import Block, Complex, InvariantGCS, NonComplex

# Admissible patterns for (alpha, beta, alpha+beta). "C" is +J0 and "-C" is -J0
# before the global sign flip; "NC" is any noncomplex block.
TABLE_ROWS = (
    (1, ("C", "C", "C")),
    (2, ("C", "-C", "C")),
    (3, ("C", "-C", "-C")),
    (4, ("NC", "C", "C")),
    (5, ("C", "NC", "C")),
    (6, ("C", "-C", "NC")),
    (7, ("NC", "NC", "NC")),
)
NC_ROW = 7

_SYMBOL = {"C": "C+", "-C": "C-", "NC": "NC"}
_FLIP = {"C+": "C-", "C-": "C+", "NC": "NC"}


def _pattern_table() -> dict:
    table = {}
    for row, pattern in TABLE_ROWS:
        base = tuple(_SYMBOL[p] for p in pattern)
        for pat in (base, tuple(_FLIP[p] for p in base)):
            table.setdefault(pat, row)
    return table


PATTERNS = _pattern_table()
assert len(PATTERNS) == 13, "integrability table must hold 13 patterns"
assert all(
    (b, a, c) in PATTERNS for a, b, c in PATTERNS
), "integrability table must be symmetric in the first two slots"


def symbol(b: Block) -> str:
    if isinstance(b, Complex):
        return "C+" if b.sign > 0 else "C-"
    return "NC"


@dataclass(frozen=True)
class TripleVerdict:
    triple: tuple
    ok: bool
    reason: str  # "table-row" | "nc-conditions-hold" | "not-in-table" | "nc-conditions-fail"
    row: Optional[int] = None
    failed_equations: tuple = ()

    def describe(self) -> str:
        if self.reason == "table-row":
            return f"table row {self.row}"
        if self.reason == "nc-conditions-hold":
            return "noncomplex conditions hold"
        if self.reason == "not-in-table":
            return "pattern not admissible"
        return "noncomplex conditions fail: " + ", ".join(self.failed_equations)


def nc_conditions(ba: NonComplex, bb: NonComplex, bc: NonComplex) -> tuple[bool, bool]:
    """Return (a-equation holds, x-equation holds) for an all-noncomplex triple."""
    xa, xb, xc = ba.x, bb.x, bc.x
    eq_a = bc.a * xa * xb - bb.a * xa * xc - ba.a * xb * xc == 0
    eq_x = xa * xb - xa * xc - xb * xc == 0
    return eq_a, eq_x


def classify_triple(ba: Block, bb: Block, bc: Block, triple: tuple = ()) -> TripleVerdict:
    pat = (symbol(ba), symbol(bb), symbol(bc))
    row = PATTERNS.get(pat)
    if row is None:
        return TripleVerdict(triple, False, "not-in-table")
    if row != NC_ROW:
        return TripleVerdict(triple, True, "table-row", row)
    eq_a, eq_x = nc_conditions(ba, bb, bc)
    if eq_a and eq_x:
        return TripleVerdict(triple, True, "nc-conditions-hold", row)
    failed = tuple(name for name, ok in (("x-relation", eq_x), ("a-relation", eq_a)) if not ok)
    return TripleVerdict(triple, False, "nc-conditions-fail", row, failed)


def triple_verdicts(j: InvariantGCS) -> list[TripleVerdict]:
    return [classify_triple(j[a], j[b], j[c], (a, b, c)) for a, b, c in j.algebra.triples]


def is_integrable(j: InvariantGCS) -> tuple[bool, list[TripleVerdict]]:
    failing = [v for v in triple_verdicts(j) if not v.ok]
    return not failing, failing


def gcs_type(j: InvariantGCS) -> int:
    return sum(1 for b in j.blocks if isinstance(b, Complex))


def _simple_position(rs: RootSystem, root: Root) -> int:
    return root.index(1)


def build_from_theta(
    rs: RootSystem,
    theta,
    x_params: Mapping[Root, Fraction],
    b_params: Mapping[Root, Fraction] | None = None,
    signs: Mapping[Root, int] | None = None,
) -> InvariantGCS:
    """Integrable structure noncomplex exactly on the closure of ``theta``.

    ``1/x`` and ``b = a/x`` are extended additively from the simple roots in
    ``theta``; remaining roots get complex blocks with the given signs
    (default +1).
    """
    theta = tuple(sorted({tuple(t) for t in theta}, key=lambda r: r.index(1) if 1 in r else -1))
    closure = theta_closure(rs, theta)
    x_params = {tuple(k): Fraction(v) for k, v in (x_params or {}).items()}
    b_params = {tuple(k): Fraction(v) for k, v in (b_params or {}).items()}
    signs = {tuple(k): int(v) for k, v in (signs or {}).items()}

    for t in theta:
        if t not in x_params:
            raise ConstructionError(f"missing x parameter for simple root {list(t)}")
        if x_params[t] <= 0:
            raise ConstructionError(f"x parameter for {list(t)} must be positive, got {x_params[t]}")
    stray = [k for k in list(x_params) + list(b_params) if k not in theta]
    if stray:
        raise ConstructionError(f"parameters given for roots outside theta: {[list(k) for k in stray]}")
    in_closure = set(closure)
    bad_signs = [k for k in signs if k in in_closure or k not in rs.positive_index]
    if bad_signs:
        raise ConstructionError(f"signs given for roots that are not complex: {[list(k) for k in bad_signs]}")

    blocks: dict = {}
    for root in rs.positive_roots:
        if root in in_closure:
            inv_x = sum((n / x_params[rs.simple_roots[i]] for i, n in enumerate(root) if n), Fraction(0))
            b = sum((n * b_params.get(rs.simple_roots[i], Fraction(0)) for i, n in enumerate(root) if n), Fraction(0))
            x = 1 / inv_x
            blocks[root] = NonComplex(b * x, x)
        else:
            s = signs.get(root, 1)
            try:
                blocks[root] = Complex(s)
            except InvalidStructure as exc:
                raise ConstructionError(str(exc)) from exc
    j = InvariantGCS.from_mapping(rs, blocks)
    ok, failing = is_integrable(j)
    if not ok:
        listed = "; ".join(f"{[list(r) for r in v.triple]} ({v.describe()})" for v in failing)
        raise ConstructionError(f"resulting structure is not integrable: {listed}", failing)
    return j


def all_sign_patterns(rs: RootSystem, roots) -> list[dict]:
    """Every assignment of +-1 to ``roots``."""
    roots = list(roots)
    return [dict(zip(roots, s)) for s in product((1, -1), repeat=len(roots))]
