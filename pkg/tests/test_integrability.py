from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from flaggcs.errors import ConstructionError
from flaggcs.integrability import (
    PATTERNS,
    build_from_theta,
    classify_triple,
    gcs_type,
    is_integrable,
    nc_conditions,
)
from flaggcs.roots import root_system, theta_closure
from flaggcs.structures import BTransform, Complex, InvariantGCS, NonComplex, b_transform

from conftest import blocks, nonzero_rationals, positive_rationals, rationals

F = Fraction
CP, CM = Complex(1), Complex(-1)


def test_pattern_table_size():
    assert len(PATTERNS) == 13


def test_classify_examples():
    v = classify_triple(CP, CP, CP)
    assert v.ok and v.reason == "table-row" and v.row == 1
    assert not classify_triple(CP, CP, CM).ok
    assert classify_triple(CP, CP, CM).reason == "not-in-table"
    assert classify_triple(NonComplex(0, 2), NonComplex(0, 2), NonComplex(0, 1)).ok
    bad = classify_triple(NonComplex(0, 1), NonComplex(0, 1), NonComplex(0, 1))
    assert not bad.ok and bad.reason == "nc-conditions-fail" and "x-relation" in bad.failed_equations


@given(blocks, blocks, blocks)
def test_swap_symmetry(a, b, c):
    assert classify_triple(a, b, c).ok == classify_triple(b, a, c).ok


@given(blocks, blocks, blocks)
def test_global_sign_flip(a, b, c):
    flip = lambda x: Complex(-x.sign) if isinstance(x, Complex) else x
    assert classify_triple(a, b, c).ok == classify_triple(flip(a), flip(b), flip(c)).ok


@given(nonzero_rationals, nonzero_rationals, rationals, rationals)
def test_reciprocal_and_additive_laws(x1, x2, a1, a2):
    if x1 + x2 == 0:
        return
    x3 = 1 / (1 / x1 + 1 / x2)
    a3 = x3 * (a1 / x1 + a2 / x2)
    b1, b2, b3 = NonComplex(a1, x1), NonComplex(a2, x2), NonComplex(a3, x3)
    assert nc_conditions(b1, b2, b3) == (True, True)
    assert nc_conditions(b1, b2, NonComplex(a3 + 1, x3)) == (False, True)
    assert nc_conditions(b1, b2, NonComplex(a3, 2 * x3))[1] is False


def test_is_integrable_examples():
    a1, a2 = root_system("A1"), root_system("A2")
    assert is_integrable(InvariantGCS(a1, (NonComplex(3, -7),)))[0]
    assert is_integrable(InvariantGCS.uniform(a2, CP))[0]
    ok, failing = is_integrable(InvariantGCS.uniform(a2, NonComplex(0, 1)))
    assert not ok and len(failing) == 1


def test_gcs_type():
    rs = root_system("A2")
    assert gcs_type(InvariantGCS.uniform(rs, CP)) == 3
    assert gcs_type(InvariantGCS.uniform(rs, NonComplex(0, 1))) == 0
    assert gcs_type(InvariantGCS(rs, (CP, NonComplex(0, 1), NonComplex(0, 1)))) == 1


def test_build_examples():
    rs = root_system("A2")
    j = build_from_theta(rs, rs.simple_roots, {(1, 0): 2, (0, 1): 2}, {(1, 0): 1, (0, 1): 1})
    assert j[(1, 1)] == NonComplex(2, 1)
    assert build_from_theta(rs, [], {}) == InvariantGCS.uniform(rs, CP)
    j = build_from_theta(rs, [(1, 0)], {(1, 0): 5}, {(1, 0): 0}, {(0, 1): 1, (1, 1): 1})
    assert j.blocks == (NonComplex(0, 5), CP, CP)
    assert classify_triple(*j.blocks).row == 4


def test_build_rejections():
    rs = root_system("A2")
    with pytest.raises(ConstructionError):
        build_from_theta(rs, [(1, 0)], {(1, 0): -1})
    with pytest.raises(ConstructionError):
        build_from_theta(rs, [(1, 0)], {(1, 0): 0})
    with pytest.raises(ConstructionError):
        build_from_theta(rs, [(1, 0)], {})
    with pytest.raises(ConstructionError) as err:
        build_from_theta(rs, [], {}, signs={(1, 0): 1, (0, 1): 1, (1, 1): -1})
    assert len(err.value.failing) == 1


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C3", "G2"])
def test_build_type_and_integrability(name):
    rs = root_system(name)
    for mask in product((0, 1), repeat=rs.rank):
        theta = [s for s, keep in zip(rs.simple_roots, mask) if keep]
        x = {t: F(i + 2, 3) for i, t in enumerate(theta)}
        b = {t: F(1 - i, 2) for i, t in enumerate(theta)}
        j = build_from_theta(rs, theta, x, b)
        assert gcs_type(j) == rs.d - len(theta_closure(rs, theta))


@given(st.lists(positive_rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3))
def test_additive_b_preserves_integrability(xs, bs, extra):
    rs = root_system("A3")
    j = build_from_theta(rs, rs.simple_roots, dict(zip(rs.simple_roots, xs)), dict(zip(rs.simple_roots, bs)))
    additive = BTransform(tuple(sum(n * e for n, e in zip(r, extra)) for r in rs.positive_roots))
    assert is_integrable(b_transform(j, additive))[0]


def test_arbitrary_b_can_break_integrability():
    rs = root_system("A2")
    j = build_from_theta(rs, rs.simple_roots, {(1, 0): 1, (0, 1): 1})
    assert not is_integrable(b_transform(j, BTransform((1, 0, 0))))[0]


@pytest.mark.parametrize("name", ["A2", "A3", "A4", "B2", "G2", "B3", "C3"])
def test_normalized_support_is_a_closure(name):
    """Exhaustive over supports: with only +J0 and x > 0 blocks, admissible patterns force a closure."""
    rs = root_system(name)
    simple = set(rs.simple_roots)
    for mask in product((0, 1), repeat=rs.d):
        support = {r for r, nc in zip(rs.positive_roots, mask) if nc}
        sym = {r: ("NC" if r in support else "C+") for r in rs.positive_roots}
        admissible = all((sym[a], sym[b], sym[c]) in PATTERNS for a, b, c in rs.triples)
        closure = set(theta_closure(rs, support & simple))
        assert admissible == (support == closure)
        if admissible:
            # and the closure really carries integrable parameters
            j = build_from_theta(rs, support & simple, {t: F(1) for t in support & simple})
            assert {r for r, b in j.items() if isinstance(b, NonComplex)} == support
