from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from flaggcs import exact
from flaggcs.errors import InvalidStructure
from flaggcs.exact import ComplexRational, I
from flaggcs.roots import root_system
from flaggcs.structures import (
    BTransform,
    Complex,
    InvariantGCS,
    NonComplex,
    SignedZero,
    Symplectic,
    apply_block,
    b_transform,
    b_transform_block,
    block_from_matrix,
    block_matrix,
    complex_count,
    eigenspace,
    eigenspace_basis,
    is_gacs,
    is_gacs_matrix,
    moduli_equal,
    negate_root_block,
    normal_form,
    pairing,
    pairing_matrix,
)

from conftest import b_transforms, blocks, noncomplex_blocks, rationals, structures

F = Fraction


def test_complex_block_matrix():
    assert block_matrix(Complex(1)) == [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    assert block_matrix(Complex(-1)) == exact.scale(F(-1), block_matrix(Complex(1)))


def test_noncomplex_block_matrix():
    b = NonComplex(1, 1)
    assert b.y == 2
    assert block_matrix(b) == [[1, 0, 0, -1], [0, 1, 1, 0], [0, -2, -1, 0], [2, 0, 0, -1]]
    assert NonComplex(0, 1).y == 1


def test_noncomplex_needs_nonzero_x():
    with pytest.raises(InvalidStructure):
        NonComplex(1, 0)
    with pytest.raises(InvalidStructure):
        Complex(0)


@given(blocks)
def test_every_block_is_gacs(b):
    m = block_matrix(b)
    assert is_gacs_matrix(m)
    assert block_from_matrix(m) == b
    if isinstance(b, NonComplex):
        assert b.a * b.a == b.x * b.y - 1


def test_pairing_matrix_d1():
    p = pairing_matrix(1)
    assert p == exact.transpose(p)
    assert exact.matmul(p, p) == exact.scale(F(1, 4), exact.identity(4))
    eig = np.linalg.eigvalsh(np.array(p, dtype=float))
    assert (eig > 0).sum() == 2 and (eig < 0).sum() == 2


def test_pairing_values():
    A, S, msS, As = ([F(int(i == k)) for i in range(4)] for k in range(4))
    assert pairing([a + b for a, b in zip(A, As)], A) == 0
    assert pairing(S, As) == F(1, 2)
    # matrix and bilinear form agree
    p = pairing_matrix(1)
    for u in (A, S, msS, As):
        for v in (A, S, msS, As):
            assert pairing(u, v) == sum(u[i] * p[i][j] * v[j] for i in range(4) for j in range(4))


def test_is_gacs_rejects():
    bad = block_matrix(NonComplex(1, 1))
    bad[2][1] = F(-3)  # y no longer (a^2+1)/x
    assert not is_gacs_matrix(bad)
    assert not is_gacs_matrix(exact.zeros(4))
    assert not is_gacs_matrix([])


@given(structures("A2"))
def test_structure_is_gacs(j):
    assert is_gacs(j)
    assert is_gacs(exact.block_diag(block_matrix(b) for b in j.blocks))


@given(blocks)
def test_negate_involution(b):
    nb = negate_root_block(b)
    assert negate_root_block(nb) == b
    if isinstance(b, NonComplex):
        assert nb.y == -b.y and nb.a == b.a


def test_b_transform_block_examples():
    assert b_transform_block(NonComplex(0, 1), 1) == NonComplex(1, 1)
    assert b_transform_block(Complex(-1), F(7, 3)) == Complex(-1)
    assert b_transform_block(NonComplex(F(2, 5), -3), 0) == NonComplex(F(2, 5), -3)
    rs = root_system("A2")
    j = InvariantGCS(rs, (NonComplex(0, 2), Complex(1), Complex(1)))
    assert b_transform(j, BTransform((3, 0, 0)))[(1, 0)] == NonComplex(6, 2)


@given(structures("A2"), b_transforms("A2"), b_transforms("A2"))
def test_b_action_is_group_action(j, b1, b2):
    assert b_transform(b_transform(j, b1), b2) == b_transform(j, b1 + b2)
    assert b_transform(b_transform(j, b1), -b1) == j
    assert b_transform(j, BTransform.zero(3)) == j
    assert complex_count(b_transform(j, b1).blocks) == complex_count(j.blocks)


@given(structures("A2"), b_transforms("A2"))
def test_normal_form_invariance(j, bt):
    coords, witness = normal_form(j)
    assert normal_form(b_transform(j, bt))[0] == coords
    for b, c, w in zip(j.blocks, coords, witness.coeffs):
        if isinstance(b, Complex):
            assert c == SignedZero(b.sign) and w == 0
        else:
            assert c == Symplectic(b.x) and w == b.a / b.x


def test_normal_form_examples():
    rs = root_system("A1")
    coords, w = normal_form(InvariantGCS(rs, (NonComplex(3, 2),)))
    assert coords == (Symplectic(2),) and w.coeffs == (F(3, 2),)
    assert normal_form(InvariantGCS(rs, (Complex(-1),)))[0] == (SignedZero(-1),)
    assert normal_form(InvariantGCS(rs, (NonComplex(0, 5),)))[1].coeffs == (0,)


def test_moduli_equal():
    rs = root_system("A2")
    u = lambda b: InvariantGCS.uniform(rs, b)
    assert moduli_equal(u(NonComplex(1, 1)), u(NonComplex(5, 1)))
    assert not moduli_equal(u(NonComplex(0, 1)), u(NonComplex(0, 2)))
    assert moduli_equal(u(Complex(1)), u(Complex(1)))
    with pytest.raises(InvalidStructure):
        moduli_equal(u(Complex(1)), InvariantGCS.uniform(root_system("A1"), Complex(1)))


def test_eigenspace_examples():
    z, one = ComplexRational(), ComplexRational(1)
    assert eigenspace_basis(NonComplex(0, 1)) == ((one, z, z, -I), (z, one, I, z))
    # (0, 1, i, 0) is S - i S*: the -S* coordinate carries +i


@given(blocks)
def test_eigenspace_properties(b):
    v1, v2 = eigenspace_basis(b)
    for v in (v1, v2):
        assert apply_block(b, v) == [I * t for t in v]
        assert pairing(v, v) == 0
    assert pairing(v1, v2) == 0
    conj = [tuple(t.conjugate() for t in v) for v in (v1, v2)]
    assert exact.rank([list(v) for v in (v1, v2, *conj)]) == 4


def test_printed_complex_generator_is_not_isotropic():
    # A* - S* (no i) fails isotropy against A - iS; the corrected A* - iS* passes
    z, one = ComplexRational(), ComplexRational(1)
    first = (one, -I, z, z)
    printed = (z, z, one, one)      # A* - S* = tau + sigma
    corrected = (z, z, I, one)      # A* - i S* = tau + i sigma
    assert pairing(first, printed) != 0
    assert pairing(first, corrected) == 0


def test_structure_validation():
    rs = root_system("A2")
    with pytest.raises(InvalidStructure):
        InvariantGCS(rs, (Complex(1),) * 2)
    with pytest.raises(InvalidStructure):
        InvariantGCS.from_mapping(rs, {(1, 0): Complex(1), (0, 1): Complex(1)})
    j = InvariantGCS.from_mapping(rs, {(1, 1): Complex(-1), (0, 1): Complex(1), (1, 0): Complex(1)})
    assert j.blocks == (Complex(1), Complex(1), Complex(-1))
    assert len(eigenspace(j)) == 6
