import random
from fractions import Fraction

import pytest
from hypothesis import given

from sp3geom.algebra import LinSubspace, SymMat3, identity, matmul, matvec
from sp3geom.sp3 import (GRAM, EMBED, PROJECT, NotOnSigma, Point13, SliceNotPreserved,
                         act, alpha, complete_vector, correlation_J,
                         exp_map, is_on_sigma, is_symplectic, pairing, plane_of,
                         plucker, random_sp3, rho_dual, rho_wedge3,
                         sigma_residual, symplectic_completion,
                         symplectic_gram, symplectic_inverse, transvection,
                         unit_point)

from conftest import Y0, canonical_covector, seeds, symmats

E = [[int(i == k) for i in range(6)] for k in range(6)]
U_O = LinSubspace.span(E[:3], 6)
U_INF = LinSubspace.span(E[3:], 6)


def test_symplectic_gram():
    J = symplectic_gram()
    assert alpha(E[0], E[3]) == 1
    assert alpha(E[0], E[1]) == 0
    assert alpha(E[3], E[0]) == -1
    for i in range(3):
        for j in range(3):
            assert J[i][3 + j] == int(i == j) == -J[3 + i][j]
            assert J[i][j] == J[3 + i][3 + j] == 0


def test_embedding_is_a_section():
    assert matmul(PROJECT, EMBED) == identity(14)


def test_exp_map_examples():
    assert exp_map(SymMat3.zero()) == unit_point(0)
    assert exp_map(SymMat3.identity()) == Point13.from_blocks(1, SymMat3.identity(), SymMat3.identity(), 1)
    assert exp_map(SymMat3.diag(1, 2, 3)) == Point13.from_blocks(
        1, SymMat3.diag(1, 2, 3), SymMat3.diag(6, 3, 2), 6)


@given(symmats)
def test_exp_map_on_sigma(X):
    p = exp_map(X)
    assert len(sigma_residual(p)) == 21
    assert is_on_sigma(p)


def test_sigma_membership_examples():
    assert not is_on_sigma([1] + [0] * 12 + [1])
    assert is_on_sigma(unit_point(13))


def test_point_json_roundtrip():
    p = Point13.from_blocks(2, SymMat3.from_entries(1, 2, 3, 4, 5, 6), SymMat3.zero(), -1)
    data = p.to_json()
    assert data["u"] == "1" and data["X"][0] == "1/2"
    assert Point13.from_json(data) == p
    with pytest.raises(ValueError):
        Point13((0,) * 14)


def test_plane_of_examples():
    assert plane_of(unit_point(0)) == U_O
    assert plane_of(unit_point(13)) == U_INF
    assert plane_of(exp_map(SymMat3.identity())) == LinSubspace.span(
        [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]], 6)
    with pytest.raises(NotOnSigma):
        plane_of([1] + [0] * 12 + [1])


@given(symmats)
def test_plucker_roundtrip(X):
    # rowspan(I | X) is lagrangian for symmetric X
    M = X.full()
    P = LinSubspace.span([E[i][:3] + M[i] for i in range(3)], 6)
    p = plucker(P)
    assert p == exp_map(X)
    assert plane_of(p) == P


def test_plucker_rejects_non_lagrangian():
    with pytest.raises(ValueError):
        plucker([E[0], E[1], E[3]])


def test_symplectic_completion_examples():
    assert symplectic_completion(U_O) == identity(6)
    g = symplectic_completion(U_INF)
    assert is_symplectic(g)
    assert LinSubspace.span([matvec(g, e) for e in E[:3]], 6) == U_INF


@given(symmats)
def test_symplectic_completion_random(X):
    M = X.full()
    P = LinSubspace.span([[int(i == k) for k in range(3)] + M[i] for i in range(3)], 6)
    g = symplectic_completion(P)
    assert is_symplectic(g)
    assert LinSubspace.span([matvec(g, e) for e in E[:3]], 6) == P


def test_complete_vector():
    rng = random.Random(3)
    for _ in range(20):
        x = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
        if not any(x):
            continue
        g = complete_vector(x)
        assert is_symplectic(g)
        assert [row[0] for row in g] == x


def test_rho_examples():
    assert rho_wedge3(identity(6)) == identity(14)
    a = Fraction(2)
    g = [[(a if i < 3 else 1 / a) * int(i == j) for j in range(6)] for i in range(6)]
    r = rho_wedge3(g)
    expected = [a ** 3] + [a] * 6 + [1 / a] * 6 + [a ** -3]
    assert r == [[expected[i] * int(i == j) for j in range(14)] for i in range(14)]


def test_rho_rejects_non_symplectic():
    g = identity(6)
    g[0][0] = Fraction(2)
    with pytest.raises(SliceNotPreserved):
        rho_wedge3(g)


@given(seeds)
def test_rho_is_a_homomorphism(seed):
    rng = random.Random(seed)
    g, h = random_sp3(rng, count=4), random_sp3(rng, count=4)
    assert is_symplectic(g) and is_symplectic(h)
    assert rho_wedge3(matmul(g, h)) == matmul(rho_wedge3(g), rho_wedge3(h))
    assert matmul(g, symplectic_inverse(g)) == identity(6)


@given(seeds, symmats)
def test_sigma_is_stable(seed, X):
    g = random_sp3(random.Random(seed))
    assert is_on_sigma(act(g, exp_map(X)))


def test_transvection_keeps_origin_on_sigma():
    t = transvection([1, -2, 0, 3, 1, 1], Fraction(1, 2))
    assert is_symplectic(t)
    assert is_on_sigma(act(t, unit_point(0)))


@given(seeds, symmats)
def test_dual_action_preserves_pairing(seed, X):
    g = random_sp3(random.Random(seed), count=5)
    p = list(exp_map(X))
    c = list(range(-6, 8))
    gp = matvec(rho_wedge3(g), p)
    gc = matvec(rho_dual(g), c)
    assert pairing(gc, gp) == pairing(c, p)


def test_correlation_examples():
    assert correlation_J(unit_point(0)) == unit_point(13)
    # the covector 2 y12 + y33 corresponds to e143 + e523 + e126, i.e. the point (0:Y0:0:0)
    c = canonical_covector()
    assert correlation_J(c) == Point13.from_blocks(0, Y0, SymMat3.zero(), 0)
    for k in range(14):
        assert correlation_J(correlation_J(unit_point(k))) == unit_point(k)


@given(symmats, seeds)
def test_correlation_maps_sigma_to_sigma(X, seed):
    assert is_on_sigma(correlation_J(exp_map(X)))
    g = random_sp3(random.Random(seed), count=4)
    assert is_on_sigma(correlation_J(act(g, exp_map(X))))


def test_gram_is_antisymmetric():
    assert all(GRAM[i][j] == -GRAM[j][i] for i in range(6) for j in range(6))

