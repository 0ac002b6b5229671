import pytest
from hypothesis import given

from mideal.decomposition import maximal_prime
from mideal.homology import depth_quotient
from mideal.linalg import FieldSpec, nullspace_mod_p, rank_mod_p
from mideal.localcoh import (
    ResourceLimitError,
    associated_primes_grid,
    degree_complexes,
    depth_quotient_localcoh,
    maximal_ideal_is_associated,
    membership_grid,
    reduced_homology,
    sr_depth,
)
from mideal.ring import contains, ideal, power

from strategies import ideals

import numpy as np


def closure(*facets):
    out = set()
    for f in facets:
        m = sum(1 << v for v in f)
        sub = m
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return frozenset(out)


def test_reduced_homology_examples():
    assert reduced_homology([]) == {}
    assert reduced_homology([0]) == {-1: 1}
    assert reduced_homology(closure((0,), (1,))) == {0: 1}
    circle = closure((0, 1), (1, 2), (0, 2))
    assert reduced_homology(circle) == {1: 1}
    assert reduced_homology(closure((0, 1, 2))) == {}


def test_sr_depth_examples():
    # two points: depth 1; a circle: depth 2 (Cohen-Macaulay of dimension 2)
    assert sr_depth(closure((0,), (1,))) == 1
    assert sr_depth(closure((0, 1), (1, 2), (0, 2))) == 2
    # two disjoint edges: connected components break depth at 1
    assert sr_depth(closure((0, 1), (2, 3))) == 1


def test_linalg_rank_and_nullspace():
    A = np.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank_mod_p(A, 32003) == 2
    N = nullspace_mod_p(A, 7)
    assert len(N) == 1 and not (A @ np.array(N[0]) % 7).any()
    with pytest.raises(ValueError):
        FieldSpec(4)


def test_degree_complex_witnesses_lie_outside():
    I = ideal("x,y,z", "x^2", "x*y", "y*z^2")
    for faces, a in degree_complexes(I).items():
        assert not contains(I, a)


def test_grid_limit_raises():
    I = ideal("x,y", "x^5", "y^5")
    with pytest.raises(ResourceLimitError):
        membership_grid(I, limit=3)


@given(ideals(max_gens=5))
def test_localcoh_depth_matches_betti_route(I):
    assert depth_quotient_localcoh(I) == depth_quotient(I, method="betti")


@given(ideals(max_gens=4))
def test_socle_test_matches_grid_ass(I):
    m = maximal_prime(I.ring)
    assert maximal_ideal_is_associated(I) == (m in associated_primes_grid(I))
    assert maximal_ideal_is_associated(I) == (depth_quotient(I) == 0)


def test_large_power_is_handled_by_the_grid_route():
    hh = ideal("x,y,z", "x^5", "x^4*y", "x*y^4", "y^5", "x^3*y^2*z")
    assert depth_quotient(power(hh, 5), method="localcoh") == 1
