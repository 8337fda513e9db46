"""Tests for order ideals, borders, and planar structure."""

import pytest
from hypothesis import given, settings, strategies as st

from bbs.orderideal import (
    OrderIdeal,
    canonical_key,
    enumerate_planar,
    from_partition,
    make_box,
    make_simplicial,
    partitions,
    simplicial_counts,
)
from bbs.polyring import term_deg


def test_validation():
    with pytest.raises(ValueError):
        OrderIdeal(2, [])
    with pytest.raises(ValueError):
        OrderIdeal(2, [(0, 0), (0, 0)])
    with pytest.raises(ValueError, match="divisor"):
        OrderIdeal(2, [(0, 0), (2, 0)])
    with pytest.raises(ValueError):
        OrderIdeal(2, [(0, -1)])


def test_canonical_listing():
    o = OrderIdeal(2, [(1, 1), (0, 0), (1, 0), (0, 1)])
    assert o.terms == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert o.index((1, 0)) == 2
    assert (1, 1) in o and (2, 0) not in o


def test_box_2_2_border():
    o = make_box(2, 2)
    assert o.border() == ((0, 2), (2, 0), (1, 2), (2, 1))
    assert o.rim() == ((0, 1), (1, 0), (1, 1))
    assert o.interior() == ((0, 0),)
    assert (o.mu, o.nu) == (4, 4)


def test_lshape_structure():
    o = OrderIdeal(2, [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0)])
    assert o.border() == ((1, 1), (0, 3), (1, 2), (2, 1), (3, 0))
    assert o.degree == 2
    assert o.is_maxdeg()
    assert not o.is_simplicial()
    assert o.hilbert_function() == [1, 2, 2]


def test_neighbor_pairs_box22():
    o = make_box(2, 2)
    pairs = o.neighbor_pairs()
    nd = [p for p in pairs if p.kind == "ND"]
    ar = [p for p in pairs if p.kind == "AR"]
    # border (0,2),(2,0),(1,2),(2,1): x*(0,2)=(1,2), y*(2,0)=(2,1)
    assert {(p.j, p.j2, p.k) for p in nd} == {(0, 2, 0), (1, 3, 1)}
    # rim term (1,1) has both (1,2) and (2,1) above it
    assert {(p.j, p.j2, p.m) for p in ar} == {(2, 3, 3)}


def test_maxdeg_and_segments():
    o = OrderIdeal(2, [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0)])
    assert o.is_maxdeg()
    assert [len(s) for s in o.segments()] == [1, 1]
    assert o.maxdeg_counts() == (o.mu, o.nu)
    tri = from_partition((3, 2, 1))
    assert tri.is_maxdeg() and tri.is_simplicial()
    assert [len(s) for s in tri.segments()] == [3]
    assert tri.maxdeg_counts() == (tri.mu, tri.nu)
    assert not make_box(2, 3).is_maxdeg()


def test_simplicial_counts_match_enumeration():
    for n in range(1, 5):
        for d in range(0, 5):
            o = make_simplicial(n, d)
            c = simplicial_counts(n, d)
            assert c["mu"] == o.mu
            assert c["nu"] == o.nu
            assert c["o_int"] == len(o.interior())
            assert c["o_rim"] == len(o.rim())
            assert c["c_total"] == o.mu * o.nu
            assert c["c_int"] == len(o.interior()) * o.nu
            assert c["c_rim"] == len(o.rim()) * o.nu


def test_partitions_and_enumeration():
    assert len(partitions(4)) == 5
    assert from_partition((2, 1)).terms == ((0, 0), (0, 1), (1, 0))
    ideals = enumerate_planar(5)
    assert len(ideals) == len(partitions(5))
    assert all(o.mu == 5 for o in ideals)


def test_plateaus_lshape():
    o = OrderIdeal(2, [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0)])
    plateaus, flags = o.plateaus_and_legs()
    assert flags == []
    assert len(plateaus) == 1
    # chain covers the four degree >= 2 border terms above the steps
    assert plateaus[0]["chain"] == [1, 2, 3, 4]
    assert plateaus[0]["xleg"] == [] and plateaus[0]["yleg"] == []


def test_plateaus_box23():
    o = make_box(2, 3)
    plateaus, flags = o.plateaus_and_legs()
    assert flags == []
    assert len(plateaus) == 1


@given(st.integers(1, 12))
@settings(max_examples=20, deadline=None)
def test_enumerate_planar_valid(mu):
    for o in enumerate_planar(mu):
        assert o.mu == mu
        # divisor-closure is rechecked by the constructor; border disjoint
        assert not set(o.terms) & set(o.border())
        for b in o.border():
            assert any(
                b[i] > 0
                and tuple(e - (k == i) for k, e in enumerate(b)) in o
                for i in range(2)
            )


@given(st.integers(1, 10))
@settings(max_examples=10, deadline=None)
def test_border_degrees(mu):
    for o in enumerate_planar(mu):
        dmax = o.degree
        assert all(term_deg(b) <= dmax + 1 for b in o.border())
        assert sorted(o.terms, key=canonical_key) == list(o.terms)
