from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from flaggcs.cells import (
    cell_of,
    cell_of_structure,
    cell_parameter_dimension,
    diagram_automorphisms,
    enumerate_cells,
    structure_key,
    subsets,
)
from flaggcs.errors import ClassificationError
from flaggcs.integrability import build_from_theta, is_integrable
from flaggcs.roots import root_system, theta_closure
from flaggcs.structures import Complex, InvariantGCS, NonComplex

from conftest import integrable_structures

A1, A2, A3 = root_system("A1"), root_system("A2"), root_system("A3")


def test_cell_of_examples():
    c = cell_of(A2, [])
    assert (c.dim, c.gcs_type) == (0, 3)
    c = cell_of(A2, [(1, 0)])
    assert (c.dim, c.gcs_type) == (1, 2)
    c = cell_of(A2, A2.simple_roots)
    assert (c.dim, c.gcs_type) == (2, 0)
    assert c.closure == tuple((r, 1) for r in A2.positive_roots)


def test_a1_cells():
    dec = enumerate_cells(A1)
    assert dec.raw_count == 4 and dec.count == 4
    points = sorted(c.complex_signs for c in dec.cells if c.dim == 0)
    rays = sorted(c.closure for c in dec.cells if c.dim == 1)
    assert points == [(((1,), -1),), (((1,), 1),)]
    assert rays == [(((1,), -1),), (((1,), 1),)]
    # modulo W: one point and one ray
    assert len(dec.weyl_classes) == 2


def test_a2_cells():
    dec = enumerate_cells(A2)
    assert dec.raw_count == 24
    assert dec.count == 24
    assert len(dec.symmetry_classes) == 3
    assert len(dec.weyl_classes) == 4
    assert dec.shapes == {(0, 3): 6, (1, 2): 12, (2, 0): 6}


def test_diagram_automorphisms():
    assert len(diagram_automorphisms(A2)) == 2
    assert len(diagram_automorphisms(root_system("D4"))) == 6
    assert len(diagram_automorphisms(root_system("B3"))) == 1


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "G2"])
def test_cell_invariants(name):
    rs = root_system(name)
    for c in enumerate_cells(rs).cells:
        assert c.dim <= rs.rank
        assert c.gcs_type + len(c.closure) == rs.d
        assert len(c.closure) + len(c.complex_signs) == rs.d


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_round_trip(name):
    rs = root_system(name)
    for theta in subsets(rs.simple_roots):
        x = {t: Fraction(i + 1, 2) for i, t in enumerate(theta)}
        j = build_from_theta(rs, theta, x, {t: 1 for t in theta})
        assert set(cell_of_structure(j).theta) == {(t, 1) for t in theta}


def test_cell_of_structure_rejects_non_closure():
    j = InvariantGCS(A2, (Complex(1), Complex(1), NonComplex(0, 1)))
    with pytest.raises(ClassificationError):
        cell_of_structure(j)


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "G2"])
def test_parameter_dimension(name):
    rs = root_system(name)
    for theta in subsets(rs.simple_roots):
        assert cell_parameter_dimension(rs, theta) == len(theta)


@given(integrable_structures("A2"))
def test_cells_cover_integrable_structures(j):
    keys = {c.canonical_key for c in enumerate_cells(A2).cells}
    assert structure_key(j) in keys


def test_cells_cover_every_integrable_pattern_rank2():
    """Every sign/type pattern realized by an integrable structure on A2 is a cell."""
    keys = {c.canonical_key for c in enumerate_cells(A2).cells}
    realized = 0
    for pattern in product(("C+", "C-", "NC+", "NC-"), repeat=3):
        for u1, u2 in product((1, 2, -1, -3), repeat=2):
            us = (u1, u2, u1 + u2)
            blocks = []
            for p, u in zip(pattern, us):
                if p.startswith("C"):
                    blocks.append(Complex(1 if p == "C+" else -1))
                elif u != 0 and (u > 0) == (p == "NC+"):
                    blocks.append(NonComplex(0, Fraction(1, u)))
                else:
                    break
            else:
                j = InvariantGCS(A2, tuple(blocks))
                if is_integrable(j)[0]:
                    realized += 1
                    assert structure_key(j) in keys
                    break
    assert realized == 24
