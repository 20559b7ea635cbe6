"""Exterior algebra over the dual generators and the pure spinor of a structure.

Generators are indexed by root position ``k`` (in positive-root order):
``2k`` is ``sigma_k = -S*_k`` and ``2k+1`` is ``tau_k = A*_k``. A monomial is a
strictly increasing tuple of generator indices.

In block coordinates ``(c1, c2, c3, c4)`` a vector ``c1 A + c2 S + c3 sigma +
c4 tau`` acts by contraction with ``sigma(A) = tau(S) = 1`` plus wedging.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import exact
from .exact import ComplexRational, I
from .roots import RootSystem
from .structures import BTransform, Complex, InvariantGCS, NonComplex, Block, eigenspace

ZERO = ComplexRational()
ONE = ComplexRational(1)


def sigma(k: int) -> int:
    return 2 * k


def tau(k: int) -> int:
    return 2 * k + 1


@dataclass(frozen=True)
class Spinor:
    """Immutable sparse form; zero coefficients are never stored."""

    terms: tuple  # sorted tuple of (monomial, ComplexRational)

    @staticmethod
    def from_dict(terms: Mapping[tuple, object]) -> "Spinor":
        clean = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if list(mono) != sorted(set(mono)):
                raise ValueError(f"monomial {mono} is not strictly increasing")
            c = ComplexRational.coerce(c)
            if c:
                clean[mono] = c
        return Spinor(tuple(sorted(clean.items(), key=lambda t: (len(t[0]), t[0]))))

    @staticmethod
    def scalar(c=1) -> "Spinor":
        return Spinor.from_dict({(): c})

    @staticmethod
    def generator(g: int) -> "Spinor":
        return Spinor.from_dict({(g,): 1})

    @property
    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Spinor") -> "Spinor":
        out = self.as_dict
        for m, c in other.terms:
            out[m] = out.get(m, ZERO) + c
        return Spinor.from_dict(out)

    def __neg__(self):
        return Spinor(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Spinor":
        c = ComplexRational.coerce(c)
        return Spinor.from_dict({m: c * v for m, v in self.terms})

    def coefficient(self, mono: Iterable[int]):
        return self.as_dict.get(tuple(mono), ZERO)

    def degrees(self) -> list[int]:
        return sorted({len(m) for m, _ in self.terms})

    def lowest_degree(self) -> int | None:
        degs = self.degrees()
        return degs[0] if degs else None

    def __xor__(self, other: "Spinor") -> "Spinor":
        return wedge(self, other)


def _merge_sign(m1: tuple, m2: tuple) -> int:
    """Sign of sorting ``m1 + m2``; 0 if a generator repeats."""
    if set(m1) & set(m2):
        return 0
    inversions = sum(1 for a in m1 for b in m2 if a > b)
    return -1 if inversions % 2 else 1


def wedge(phi: Spinor, psi: Spinor) -> Spinor:
    out: dict = {}
    for m1, c1 in phi.terms:
        for m2, c2 in psi.terms:
            s = _merge_sign(m1, m2)
            if s:
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, ZERO) + c1 * c2 * s
    return Spinor.from_dict(out)


def wedge_all(factors: Iterable[Spinor]) -> Spinor:
    out = Spinor.scalar(1)
    for f in factors:
        out = wedge(out, f)
    return out


def contract(g: int, phi: Spinor) -> Spinor:
    """Interior product with the vector dual to generator ``g``."""
    out: dict = {}
    for m, c in phi.terms:
        if g in m:
            p = m.index(g)
            rest = m[:p] + m[p + 1 :]
            out[rest] = out.get(rest, ZERO) + (c if p % 2 == 0 else -c)
    return Spinor.from_dict(out)


def clifford_act(v: Sequence, phi: Spinor) -> Spinor:
    """``(X + xi) . phi = i_X phi + xi ^ phi`` for ``v`` in 4d block coordinates."""
    if len(v) % 4:
        raise ValueError("vector length must be a multiple of 4")
    out = Spinor(())
    for k in range(len(v) // 4):
        c1, c2, c3, c4 = (ComplexRational.coerce(t) for t in v[4 * k : 4 * k + 4])
        # A contracts sigma, S contracts tau
        if c1:
            out = out + contract(sigma(k), phi).scale(c1)
        if c2:
            out = out + contract(tau(k), phi).scale(c2)
        form = Spinor.from_dict({(sigma(k),): c3, (tau(k),): c4})
        if not form.is_zero():
            out = out + wedge(form, phi)
    return out


# -- the spinor of a structure ----------------------------------------------

def block_spinor(b: Block, k: int) -> Spinor:
    """Generator of the pure spinor line of one root block at position ``k``.

    Noncomplex ``(a, x)``: ``exp(B + i omega) = 1 + ((i - a)/x) sigma^tau``.
    Complex ``+J0``: ``tau + i sigma``; ``-J0``: its conjugate.
    """
    if isinstance(b, Complex):
        return Spinor.from_dict({(tau(k),): 1, (sigma(k),): I * b.sign})
    c = (I - b.a) / b.x
    return Spinor.from_dict({(): 1, (sigma(k), tau(k)): c})


def spinor_of(j: InvariantGCS) -> Spinor:
    return wedge_all(block_spinor(b, k) for k, b in enumerate(j.blocks))


def symplectic_form(j: InvariantGCS) -> Spinor:
    """``omega = sum (1/x) sigma^tau`` over noncomplex roots."""
    return Spinor.from_dict(
        {(sigma(k), tau(k)): 1 / b.x for k, b in enumerate(j.blocks) if isinstance(b, NonComplex)}
    )


def b_form(bt: BTransform) -> Spinor:
    """Two-form whose exponential implements the B-transform on spinors."""
    return Spinor.from_dict({(sigma(k), tau(k)): -c for k, c in enumerate(bt.coeffs)})


def b_exponential(bt: BTransform) -> Spinor:
    """``exp(B)``; each summand squares to zero on its own root so the series is a product."""
    return wedge_all(Spinor.from_dict({(): 1, (sigma(k), tau(k)): -c}) for k, c in enumerate(bt.coeffs))


def annihilates(vectors: Iterable[Sequence], phi: Spinor) -> bool:
    return all(clifford_act(v, phi).is_zero() for v in vectors)


def annihilator_check(j: InvariantGCS, phi: Spinor | None = None) -> bool:
    phi = spinor_of(j) if phi is None else phi
    return annihilates(eigenspace(j), phi)


def annihilator_dimension(phi: Spinor, d: int) -> int:
    """Complex dimension of ``{v : v . phi = 0}`` inside the 4d-dim space."""
    images = []
    for e in range(4 * d):
        v = [ZERO] * (4 * d)
        v[e] = ONE
        images.append(clifford_act(v, phi).as_dict)
    monos = sorted({m for img in images for m in img}, key=lambda m: (len(m), m))
    if not monos:
        return 4 * d
    rows = [[img.get(m, ZERO) for m in monos] for img in images]
    return 4 * d - exact.rank(rows)


def proportional(phi: Spinor, psi: Spinor) -> bool:
    """Whether ``psi = c phi`` for some nonzero complex rational ``c``."""
    if phi.is_zero() or psi.is_zero():
        return phi.is_zero() and psi.is_zero()
    a, b = phi.as_dict, psi.as_dict
    if a.keys() != b.keys():
        return False
    m0 = next(iter(a))
    c = b[m0] / a[m0]
    return all(b[m] == c * a[m] for m in a)


# -- naming -----------------------------------------------------------------

def generator_id(rs: RootSystem, g: int) -> str:
    root = rs.positive_roots[g // 2]
    return ("s" if g % 2 == 0 else "t") + "[" + ",".join(str(c) for c in root) + "]"


def parse_generator_id(rs: RootSystem, text: str) -> int:
    text = text.strip()
    if len(text) < 4 or text[0] not in "st" or text[1] != "[" or text[-1] != "]":
        raise ValueError(f"bad generator id {text!r}")
    try:
        root = tuple(int(c) for c in text[2:-1].split(","))
    except ValueError as exc:
        raise ValueError(f"bad generator id {text!r}") from exc
    if root not in rs.positive_index:
        raise ValueError(f"{text!r} does not name a positive root of {rs.name}")
    k = rs.positive_index[root]
    return sigma(k) if text[0] == "s" else tau(k)
