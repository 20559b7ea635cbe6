"""Invariant generalized almost complex structures, one 4x4 block per positive root.

Per-root coordinates are ordered ``(A, S, -S*, A*)``: the two vectors spanning
the root space followed by the dual basis ``sigma = -S*``, ``tau = A*`` with
``sigma(A) = tau(S) = 1``. In this basis the pairing block is
``1/2 [[0, I], [I, 0]]`` and the B-transformation with coefficient ``b`` is
``[[I, 0], [[0, b], [-b, 0]], I]]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from . import exact
from .errors import InvalidStructure
from .exact import ComplexRational, I
from .roots import Root, RootSystem


# -- blocks -----------------------------------------------------------------

@dataclass(frozen=True)
class Complex:
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidStructure(f"complex block sign must be +1 or -1, got {self.sign!r}")

    @property
    def is_complex(self) -> bool:
        return True

    def __str__(self):
        return "C+" if self.sign > 0 else "C-"


@dataclass(frozen=True)
class NonComplex:
    """Noncomplex block with ``a^2 = x y - 1`` built in through ``y = (a^2 + 1) / x``."""

    a: Fraction
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "x", Fraction(self.x))
        if self.x == 0:
            raise InvalidStructure("noncomplex block needs x != 0")

    @property
    def y(self) -> Fraction:
        return (self.a * self.a + 1) / self.x

    @property
    def is_complex(self) -> bool:
        return False

    def __str__(self):
        return f"NC(a={exact.format_rational(self.a)}, x={exact.format_rational(self.x)})"


Block = Union[Complex, NonComplex]

J0 = Complex(1)


def block_matrix(b: Block) -> exact.Matrix:
    F = Fraction
    if isinstance(b, Complex):
        s = F(b.sign)
        return [
            [F(0), -s, F(0), F(0)],
            [s, F(0), F(0), F(0)],
            [F(0), F(0), F(0), -s],
            [F(0), F(0), s, F(0)],
        ]
    a, x, y = b.a, b.x, b.y
    return [
        [a, F(0), F(0), -x],
        [F(0), a, x, F(0)],
        [F(0), -y, -a, F(0)],
        [y, F(0), F(0), -a],
    ]


def block_from_matrix(m: exact.Matrix) -> Block:
    """Inverse of :func:`block_matrix`; rejects matrices of any other shape."""
    for s in (1, -1):
        if m == block_matrix(Complex(s)):
            return Complex(s)
    a, x = Fraction(m[0][0]), Fraction(m[1][2])
    if x == 0:
        raise InvalidStructure("matrix is neither complex type nor noncomplex type")
    b = NonComplex(a, x)
    if block_matrix(b) != m:
        raise InvalidStructure("matrix is not of the form of a valid block")
    return b


def pairing_block() -> exact.Matrix:
    h, z = Fraction(1, 2), Fraction(0)
    return [[z, z, h, z], [z, z, z, h], [h, z, z, z], [z, h, z, z]]


def pairing_matrix(d: int) -> exact.Matrix:
    if d < 1:
        raise ValueError("d must be >= 1")
    return exact.block_diag([pairing_block()] * d)


def pairing(u: Sequence, v: Sequence, d: int | None = None):
    """Complex-bilinear pairing of coordinate vectors of length 4d."""
    n = len(u)
    total = ComplexRational()
    for k in range(0, n, 4):
        total = total + (u[k] * v[k + 2] + u[k + 1] * v[k + 3] + u[k + 2] * v[k] + u[k + 3] * v[k + 1]) * Fraction(1, 2)
    return total


def is_gacs_matrix(m: exact.Matrix) -> bool:
    """``m^2 = -I`` and ``m^T P m = P`` exactly."""
    n = len(m)
    if n == 0 or n % 4 or any(len(r) != n for r in m):
        return False
    p = pairing_matrix(n // 4)
    minus_one = exact.scale(Fraction(-1), exact.identity(n))
    if exact.matmul(m, m) != minus_one:
        return False
    return exact.matmul(exact.matmul(exact.transpose(m), p), m) == p


def negate_root_block(b: Block) -> Block:
    """Block carried by the negative root: complex sign flips, ``x -> -x`` with ``a`` kept."""
    if isinstance(b, Complex):
        return Complex(-b.sign)
    return NonComplex(b.a, -b.x)


# -- structures -------------------------------------------------------------

@dataclass(frozen=True)
class InvariantGCS:
    algebra: RootSystem
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) != self.algebra.d:
            raise InvalidStructure(
                f"{self.algebra.name} has {self.algebra.d} positive roots, got {len(blocks)} blocks"
            )
        for b in blocks:
            if not isinstance(b, (Complex, NonComplex)):
                raise InvalidStructure(f"not a block: {b!r}")

    @staticmethod
    def from_mapping(rs: RootSystem, blocks: Mapping[Root, Block]) -> "InvariantGCS":
        keys = {tuple(k) for k in blocks}
        missing = [r for r in rs.positive_roots if r not in keys]
        extra = [k for k in keys if k not in rs.positive_index]
        if missing or extra:
            raise InvalidStructure(
                f"blocks must cover the positive roots exactly once; missing {[list(r) for r in missing]}, "
                f"unexpected {[list(r) for r in extra]}"
            )
        lookup = {tuple(k): v for k, v in blocks.items()}
        return InvariantGCS(rs, tuple(lookup[r] for r in rs.positive_roots))

    @staticmethod
    def uniform(rs: RootSystem, block: Block) -> "InvariantGCS":
        return InvariantGCS(rs, (block,) * rs.d)

    def __getitem__(self, root: Root) -> Block:
        return self.blocks[self.algebra.positive_index[tuple(root)]]

    def items(self):
        return zip(self.algebra.positive_roots, self.blocks)

    def replace(self, root: Root, block: Block) -> "InvariantGCS":
        blocks = list(self.blocks)
        blocks[self.algebra.positive_index[tuple(root)]] = block
        return InvariantGCS(self.algebra, tuple(blocks))

    def pattern(self) -> tuple:
        return tuple(str(b) if b.is_complex else "NC" for b in self.blocks)


def assemble(j: InvariantGCS) -> exact.Matrix:
    return exact.block_diag(block_matrix(b) for b in j.blocks)


def is_gacs(j) -> bool:
    """Accepts a structure or a raw 4d x 4d matrix."""
    if isinstance(j, InvariantGCS):
        return all(is_gacs_matrix(block_matrix(b)) for b in j.blocks)
    return is_gacs_matrix(j)


# -- B-transformations ------------------------------------------------------

@dataclass(frozen=True)
class BTransform:
    """Invariant 2-form given by one coefficient per positive root (root order)."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @staticmethod
    def zero(d: int) -> "BTransform":
        return BTransform((Fraction(0),) * d)

    def __add__(self, other: "BTransform") -> "BTransform":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("B-transforms over different root sets")
        return BTransform(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BTransform":
        return BTransform(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __len__(self):
        return len(self.coeffs)


def b_matrix(coeff) -> exact.Matrix:
    """``e^B`` on one root block."""
    b, z, o = Fraction(coeff), Fraction(0), Fraction(1)
    return [[o, z, z, z], [z, o, z, z], [z, b, o, z], [-b, z, z, o]]


def conjugate_block_matrix(m: exact.Matrix, coeff) -> exact.Matrix:
    """``e^{-B} m e^{B}``."""
    return exact.matmul(exact.matmul(b_matrix(-Fraction(coeff)), m), b_matrix(coeff))


def b_transform_block(b: Block, coeff) -> Block:
    coeff = Fraction(coeff)
    if isinstance(b, Complex):
        expected: Block = b
    else:
        expected = NonComplex(b.a + coeff * b.x, b.x)
    got = block_from_matrix(conjugate_block_matrix(block_matrix(b), coeff))
    if got != expected:
        raise AssertionError(f"B-transform formula disagrees with conjugation: {expected} vs {got}")
    return got


def b_transform(j: InvariantGCS, bt: BTransform) -> InvariantGCS:
    if len(bt) != j.algebra.d:
        raise InvalidStructure(f"B-transform has {len(bt)} coefficients, expected {j.algebra.d}")
    return InvariantGCS(j.algebra, tuple(b_transform_block(b, c) for b, c in zip(j.blocks, bt.coeffs)))


# -- moduli coordinates -----------------------------------------------------

@dataclass(frozen=True)
class SignedZero:
    sign: int

    def __str__(self):
        return "+0" if self.sign > 0 else "-0"


@dataclass(frozen=True)
class Symplectic:
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        if self.x == 0:
            raise InvalidStructure("symplectic coordinate must be nonzero")

    def __str__(self):
        return exact.format_rational(self.x)


ModuliCoordinate = Union[SignedZero, Symplectic]


def symplectic_representative(j: InvariantGCS) -> InvariantGCS:
    return InvariantGCS(
        j.algebra,
        tuple(b if isinstance(b, Complex) else NonComplex(0, b.x) for b in j.blocks),
    )


def normal_form(j: InvariantGCS) -> tuple[tuple, BTransform]:
    """Moduli coordinates plus the B-transform taking the symplectic representative to ``j``."""
    coords = []
    witness = []
    for b in j.blocks:
        if isinstance(b, Complex):
            coords.append(SignedZero(b.sign))
            witness.append(Fraction(0))
        else:
            coords.append(Symplectic(b.x))
            witness.append(b.a / b.x)
    bt = BTransform(tuple(witness))
    if b_transform(symplectic_representative(j), bt) != j:
        raise AssertionError("normal form witness does not reproduce the structure")
    return tuple(coords), bt


def moduli_equal(j1: InvariantGCS, j2: InvariantGCS) -> bool:
    if j1.algebra != j2.algebra:
        raise InvalidStructure(f"structures live on different algebras ({j1.algebra.name} vs {j2.algebra.name})")
    return normal_form(j1)[0] == normal_form(j2)[0]


# -- +i eigenspaces -----------------------------------------------------------

def eigenspace_basis(b: Block) -> tuple[tuple, tuple]:
    """Two vectors spanning the +i eigenspace of ``block_matrix(b)``.

    For complex blocks the dual generator is ``A* -/+ i S*``; this is the
    isotropic choice.
    """
    z = ComplexRational()
    one = ComplexRational(1)
    if isinstance(b, Complex):
        s = b.sign
        # A - s i S  and  A* - s i S*  ( = s i sigma + tau )
        return (one, I * (-s), z, z), (z, z, I * s, one)
    x = ComplexRational(b.x)
    c = ComplexRational(b.a) - I  # a - i
    # x A + (a - i) A*  and  x S + (a - i) S*  ( = -(a - i) sigma )
    return (x, z, z, c), (z, x, -c, z)


def apply_block(b: Block, v: Sequence) -> list:
    return exact.matvec(block_matrix(b), [ComplexRational.coerce(t) for t in v])


def embed(vector: Sequence, position: int, d: int) -> tuple:
    """Place a per-root 4-vector at root ``position`` inside the 4d space."""
    z = ComplexRational()
    out = [z] * (4 * d)
    for k, t in enumerate(vector):
        out[4 * position + k] = ComplexRational.coerce(t)
    return tuple(out)


def eigenspace(j: InvariantGCS) -> list[tuple]:
    """Basis (2d vectors in the 4d coordinate space) of the +i eigenspace of ``j``."""
    d = j.algebra.d
    out = []
    for k, b in enumerate(j.blocks):
        for v in eigenspace_basis(b):
            out.append(embed(v, k, d))
    return out


def complex_count(blocks: Iterable[Block]) -> int:
    return sum(1 for b in blocks if isinstance(b, Complex))
