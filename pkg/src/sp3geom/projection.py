"""Double projection of Sigma from a line l_L: center P^9_L, base locus Z_L and
the map u -> P^2_u meet P^3_L."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import LinSubspace, matvec, rank, rref
from .incidence import SigmaLine
from .quartic import tangent_space
from .sp3 import (complete_plane, is_on_sigma, plane_of, rho_wedge3, symplectic_inverse)

# target coordinates (Y11, Y12, Y13, z) of the canonical line L = <e2, e3>
TARGET_INDICES = (7, 8, 9, 13)


class BaseLocusError(ValueError):
    pass


@dataclass(frozen=True)
class ProjectionData:
    line: SigmaLine
    center: LinSubspace  # P^9_L, dimension 10 of the 14-space
    frame: tuple  # g: canonical L -> L; the target basis of P^3_L is g(e1..e4)
    functionals: tuple  # 4 rows on the 14-space: the linear projection

    @property
    def target_basis(self) -> list:
        return [[self.frame[r][k] for r in range(6)] for k in range(4)]


def _frame_for(line: SigmaLine):
    # symplectic g with g(e2), g(e3) spanning L and g(e1) in the plane of the first point
    plane = plane_of(line.points[0])
    L = line.axis
    b1 = next(list(b) for b in plane.basis if not L.contains(b))
    return complete_plane([b1] + [list(v) for v in L.basis])


def projection_center(line: SigmaLine) -> ProjectionData:
    """P^9_L = span of the tangent spaces along the line, with the linear projection."""
    p, q = line.points
    center = tangent_space(p).join(tangent_space(q))
    if center.dim != 10:
        raise ValueError(f"tangent spaces along the line span dimension {center.dim}, expected 10")
    g = _frame_for(line)
    r_inv = rho_wedge3(symplectic_inverse(g))
    functionals = tuple(tuple(r_inv[k]) for k in TARGET_INDICES)
    if LinSubspace.span(functionals, 14).annihilator() != center:
        raise AssertionError("linear projection kernel differs from the span of tangent spaces")
    return ProjectionData(line, center, tuple(tuple(r) for r in g), functionals)


def in_base_locus(pd: ProjectionData, u: Sequence) -> bool:
    """u in Z_L, decided both by plane incidence and by membership in the center."""
    if not is_on_sigma(u):
        raise ValueError("point is not on Sigma")
    linear = pd.center.contains(list(u))
    geometric = plane_of(u).intersect(pd.line.space).dim >= 2
    if linear != geometric:
        raise AssertionError("base-locus characterizations disagree")
    return linear


def _normalize(v):
    for x in v:
        if x != 0:
            return tuple(Fraction(y) / x for y in v)
    raise ValueError("zero vector")


def project_linear(pd: ProjectionData, u: Sequence) -> tuple:
    return _normalize(matvec([list(f) for f in pd.functionals], list(u)))


def project_geometric(pd: ProjectionData, u: Sequence) -> tuple:
    meet = plane_of(u).intersect(pd.line.space)
    if meet.dim != 1:
        raise BaseLocusError("base_locus")
    v = meet.basis[0]
    # coordinates of v in the basis g(e1..e4)
    basis = pd.target_basis
    cols = [[basis[k][i] for k in range(4)] + [v[i]] for i in range(6)]
    red, piv = rref(cols, 5)
    if 4 in piv:
        raise AssertionError("intersection point outside P^3_L")
    return _normalize([red[i][4] for i in range(4)])


def double_project(pd: ProjectionData, u: Sequence) -> tuple:
    """Image of u in P^3_L, checked to agree between the plane and linear routes."""
    if in_base_locus(pd, u):
        raise BaseLocusError("base_locus")
    a = project_geometric(pd, u)
    b = project_linear(pd, u)
    if a != b:
        raise AssertionError(f"double projection routes disagree: {a} vs {b}")
    return a


def image_vector(pd: ProjectionData, coords: Sequence) -> list:
    """The point of V6 with the given coordinates in the target basis."""
    basis = pd.target_basis
    return [sum(c * b[i] for c, b in zip(coords, basis)) for i in range(6)]


def center_rank(pd: ProjectionData, extra: Sequence) -> int:
    return rank(list(pd.center.basis) + [list(extra)])
