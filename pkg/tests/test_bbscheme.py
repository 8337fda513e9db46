"""Tests for border basis schemes: generators, gradings, exposure, cotangent."""

from gmpy2 import mpq

from bbs.bbscheme import BBScheme
from bbs.orderideal import OrderIdeal, enumerate_planar, make_box, make_simplicial
from bbs.polyring import Polynomial, degrevlex, ideal_equal


def lshape():
    return BBScheme(OrderIdeal(2, [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0)]))


def names(scheme, indices):
    return sorted(scheme.cname(k) for k in indices)


def test_lshape_weight_vector():
    S = lshape()
    _, W = S.arrow_grading()
    assert W == [
        2, 3, 3, 3, 3,
        1, 2, 2, 2, 2,
        1, 2, 2, 2, 2,
        0, 1, 1, 1, 1,
        0, 1, 1, 1, 1,
    ]
    assert names(S, S.c0_census()) == ["c41", "c51"]


def test_lshape_commutator_entries():
    S = lshape()
    comm = S.commutator_generators()
    nonzero = [g for g in comm.values() if not g.is_zero()]
    assert len(nonzero) == 20


def test_natural_equals_commutator_up_to_scalar():
    S = lshape()
    nat = [g for g in S.natural_generators().values() if not g.is_zero()]
    comm = [g for g in S.commutator_generators().values() if not g.is_zero()]
    assert len(nat) == len(comm) == 20

    def canon(g):
        t = max(g.support())
        return g * (1 / g.coeff(t))

    assert {canon(g) for g in nat} == {canon(g) for g in comm}


def test_natural_generators_in_commutator_ideal_small():
    o = make_box(2, 1)
    S = BBScheme(o)
    drl = degrevlex(S.arity)
    nat = [g for g in S.natural_generators().values() if not g.is_zero()]
    comm = [g for g in S.commutator_generators().values() if not g.is_zero()]
    assert ideal_equal(nat, comm, drl)


def test_printed_nd_generator_box23():
    # the natural generator with support {c22c41, c24c61, c11, c23}
    S = BBScheme(make_box(2, 3))
    f = S.natural_generators()[("ND", 1, 3, 2)]
    expected = (
        S.cvar(1, 1) * S.cvar(3, 0) * -1
        - S.cvar(1, 3) * S.cvar(5, 0)
        - S.cvar(0, 0)
        + S.cvar(1, 2)
    )
    assert f == expected


def test_arrow_homogeneous_generators():
    for mu in range(1, 7):
        for o in enumerate_planar(mu):
            S = BBScheme(o)
            for g in S.natural_generators().values():
                if not g.is_zero():
                    S.poly_arrow_degree(g)  # asserts homogeneity


def test_exposure_box21():
    S = BBScheme(make_box(2, 1))
    assert names(S, S.exposure()) == ["c13", "c21", "c22", "c23"]


def test_exposure_box23():
    S = BBScheme(make_box(2, 3))
    assert names(S, S.exposure()) == [
        "c32", "c34", "c41", "c43", "c45", "c52", "c54",
        "c61", "c62", "c63", "c64", "c65",
    ]


def test_exposure_lshape():
    S = lshape()
    non_exposed = set(range(S.arity)) - set(S.exposure())
    assert names(S, non_exposed) == [
        "c11", "c12", "c13", "c14", "c15", "c25", "c32",
    ]


def test_homogeneous_matrices_commute_maxdeg():
    checked = 0
    for mu in range(1, 7):
        for o in enumerate_planar(mu):
            if not o.is_maxdeg():
                continue
            S = BBScheme(o)
            assert S.matrices_commute(S.homogeneous_matrices())
            checked += 1
    assert checked >= 5


def test_generic_matrices_do_not_commute():
    S = lshape()
    mats = [S.mult_matrix(0), S.mult_matrix(1)]
    assert not S.matrices_commute(mats)


def test_cotangent_simplicial():
    # smooth monomial point: cotangent dim equals 2 * mu for (2,2)
    S = BBScheme(make_simplicial(2, 2))
    cot = S.cotangent()
    assert cot["dim"] == 12 == 2 * S.mu
    # singular monomial point for (3,1): dim 18 > 3 * mu = 12
    S3 = BBScheme(make_simplicial(3, 1))
    assert S3.cotangent()["dim"] == 18


def test_cotangent_lshape():
    S = lshape()
    cot = S.cotangent()
    assert cot["dim"] == 10 == 2 * S.mu
    assert len(cot["E0"]) + sum(len(c) for c in cot["classes"]) + len(
        cot["singletons"]
    ) == S.arity


def test_fiber_catalog_constant_specialization():
    S = lshape()
    gamma = {k: mpq(1) for k in S.c0_census()}
    fib = S.fiber_catalog(gamma)
    for g in fib.values():
        for k in S.c0_census():
            assert not g.contains_var(k)


def test_degree_filtered_catalog_no_negative_weight_planar():
    # planar MaxDeg ideals have non-negative weights, so no DF entries
    S = lshape()
    assert all(lab[0] != "DF" for lab in S.degree_filtered_catalog())
