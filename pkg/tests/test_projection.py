import random

import pytest
from hypothesis import given

from sp3geom.algebra import LinSubspace, SymMat3
from sp3geom.checks import random_axis
from sp3geom.incidence import line_from_axis
from sp3geom.projection import (BaseLocusError, double_project, image_vector,
                                in_base_locus, project_geometric, project_linear,
                                projection_center)
from sp3geom.quartic import tangent_space
from sp3geom.sp3 import act, apply6, exp_map, plane_of, random_sp3, unit_point

from conftest import seeds, symmats

E = [[int(i == k) for i in range(6)] for k in range(6)]
AXIS = LinSubspace.span([E[1], E[2]], 6)
CANONICAL = projection_center(line_from_axis(AXIS))


def test_canonical_center():
    assert CANONICAL.center.dim == 10
    # the center is killed by exactly Y11, Y12, Y13, z
    assert CANONICAL.center == LinSubspace.coordinate(14, [k for k in range(14) if k not in (7, 8, 9, 13)])
    assert LinSubspace.span(CANONICAL.target_basis, 6) == LinSubspace.span(E[:4], 6)


@given(symmats)
def test_canonical_target_is_first_adjugate_row(X):
    u = exp_map(X)
    A, d = X.adjugate().full(), X.det()
    target = [A[0][0], A[0][1], A[0][2], d]
    if not any(target):
        assert in_base_locus(CANONICAL, u)
        with pytest.raises(BaseLocusError):
            double_project(CANONICAL, u)
        return
    image = double_project(CANONICAL, u)
    k = next(i for i, x in enumerate(target) if x)
    assert image == tuple(x / target[k] for x in target)
    # the image point lies on the plane of u
    assert plane_of(u).contains(image_vector(CANONICAL, image))


def test_base_locus_examples():
    assert in_base_locus(CANONICAL, unit_point(0))
    assert in_base_locus(CANONICAL, CANONICAL.line.point_at(2, -3))
    # planes through e1 + a: K_v-type points exp(a a^T) with a in <e2, e3>
    for a in ([0, 1, 0], [0, 1, 2], [0, 3, -1]):
        X = SymMat3.from_matrix([[a[i] * a[j] for j in range(3)] for i in range(3)])
        assert in_base_locus(CANONICAL, exp_map(X))
    assert not in_base_locus(CANONICAL, exp_map(SymMat3.identity()))
    assert double_project(CANONICAL, exp_map(SymMat3.identity())) == (1, 0, 0, 1)
    with pytest.raises(ValueError):
        in_base_locus(CANONICAL, [1] + [0] * 12 + [1])


def test_center_is_span_of_tangent_spaces():
    line = CANONICAL.line
    for s, t in ((1, 1), (2, -5), (0, 1)):
        assert CANONICAL.center.contains_subspace(tangent_space(line.point_at(s, t)))


@given(seeds, symmats)
def test_routes_agree_on_random_lines(seed, X):
    rng = random.Random(seed)
    pd = projection_center(line_from_axis(random_axis(rng)))
    g = random_sp3(rng, count=4)
    u = act(g, exp_map(X))
    if in_base_locus(pd, u):
        with pytest.raises(BaseLocusError):
            project_geometric(pd, u)
    else:
        assert project_geometric(pd, u) == project_linear(pd, u)


@given(seeds, symmats)
def test_projection_is_equivariant(seed, X):
    rng = random.Random(seed)
    g = random_sp3(rng, count=5)
    moved_axis = LinSubspace.span([apply6(g, b) for b in AXIS.basis], 6)
    pd = projection_center(line_from_axis(moved_axis))
    u = exp_map(X)
    if in_base_locus(CANONICAL, u):
        assert in_base_locus(pd, act(g, u))
        return
    v = image_vector(CANONICAL, double_project(CANONICAL, u))
    w = image_vector(pd, double_project(pd, act(g, u)))
    assert LinSubspace.span([apply6(g, v)], 6) == LinSubspace.span([w], 6)
