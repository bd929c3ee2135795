"""Lines and 3-fold quadrics on Sigma, vertices of conics, and vertex conics of
nodal hyperplane sections."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (LinSubspace, TernaryForm, inverse,
                      matmul, matvec, rank, rref, transpose)
from .quartic import OrbitClass, WrongOrbit, classify_orbit, hat_pivot
from .sp3 import (PAIRING_WEIGHTS, Point13, alpha_perp, blocks, complete_vector,
                  is_isotropic, is_on_sigma, pairing, plane_of, plucker,
                  rho_wedge3, symplectic_completion)


@dataclass(frozen=True)
class SigmaLine:
    points: tuple  # two Point13 spanning the line
    axis: LinSubspace  # isotropic 2-space L of V6
    space: LinSubspace  # P^3_L = alpha-perp of L

    def point_at(self, s, t) -> list:
        p, q = self.points
        return [s * a + t * b for a, b in zip(p, q)]

    def to_json(self) -> dict:
        return {"axis": self.axis.to_json(), "space": self.space.to_json(),
                "span": [p.to_json() for p in self.points]}

    @classmethod
    def from_json(cls, data: dict) -> "SigmaLine":
        if "axis" in data:
            return line_from_axis(LinSubspace.span(data["axis"], 6))
        return line_from_axis(axis_of_line(*(Point13.from_json(p) for p in data["span"])))


class NotASigmaLine(ValueError):
    pass


def line_from_axis(L: LinSubspace) -> SigmaLine:
    """The line l_L of lagrangian planes through the isotropic line L."""
    if L.n != 6 or L.dim != 2:
        raise ValueError("axis must be a 2-dimensional subspace of V6")
    if not is_isotropic(L):
        raise ValueError("axis is not isotropic")
    space = alpha_perp(L)
    extra = [b for b in space.basis if not L.contains(b)]
    chosen = []
    for b in extra:
        if rank(list(L.basis) + chosen + [list(b)]) == 2 + len(chosen) + 1:
            chosen.append(list(b))
        if len(chosen) == 2:
            break
    points = tuple(plucker(LinSubspace.span(list(L.basis) + [b], 6)) for b in chosen)
    return SigmaLine(points, L, space)


def axis_of_line(p: Sequence, q: Sequence) -> LinSubspace:
    """Axis of the Sigma-line through p and q: the intersection of their planes."""
    if Point13(tuple(p)) == Point13(tuple(q)):
        raise NotASigmaLine("the two points coincide")
    L = plane_of(p).intersect(plane_of(q))
    if L.dim != 2:
        raise NotASigmaLine(f"planes meet in dimension {L.dim}, not a Sigma-line")
    return L


# ---------------------------------------------------------------------------
# quadrics Q_x

# Q_{e1}: span coordinates (u, X22, X23, X33, Y11), form u*Y11 - (X22*X33 - X23^2)
CANONICAL_SPAN_INDICES = (0, 4, 5, 6, 7)
CANONICAL_QUADRIC = (
    (0, 0, 0, 0, Fraction(1, 2)),
    (0, 0, 0, Fraction(-1, 2), 0),
    (0, 0, 1, 0, 0),
    (0, Fraction(-1, 2), 0, 0, 0),
    (Fraction(1, 2), 0, 0, 0, 0),
)


@dataclass(frozen=True)
class VertexQuadric:
    vertex: tuple
    span: LinSubspace  # P^4_x, dimension 5 in the 14-space
    frame: tuple  # 5 vectors of the 14-space in which `form` is written
    form: tuple  # 5x5 symmetric matrix

    def frame_coords(self, p: Sequence) -> list:
        """Coordinates of p in the frame (p must lie in the span)."""
        rows = [list(f) for f in self.frame]
        cols = transpose(rows)
        aug = [list(r) + [p[i]] for i, r in enumerate(cols)]
        red, piv = rref(aug, 6)
        if 5 in piv:
            raise ValueError("point not in the span of the quadric")
        return [red[i][5] for i in range(5)]

    def evaluate(self, p: Sequence):
        a = self.frame_coords(p)
        return sum(a[i] * self.form[i][j] * a[j] for i in range(5) for j in range(5))

    def point(self, a: Sequence) -> list:
        return [sum(ai * f[k] for ai, f in zip(a, self.frame)) for k in range(14)]

    def rank(self) -> int:
        return rank([list(r) for r in self.form])


def quadric_span(x: Sequence) -> VertexQuadric:
    """Q_x = {u in Sigma : x in P^2_u} with its linear span P^4_x.

    Built from the canonical Q_{e1} transported by a symplectic g with g(e1) = x.
    """
    if all(c == 0 for c in x):
        raise ValueError("vertex must be nonzero")
    g = complete_vector([Fraction(c) for c in x])
    r = rho_wedge3(g)
    frame = tuple(tuple(row[k] for row in r) for k in CANONICAL_SPAN_INDICES)
    span = LinSubspace.span(frame, 14)
    return VertexQuadric(tuple(Fraction(c) for c in x), span, frame, CANONICAL_QUADRIC)


def quadric_in_hyperplane(c: Sequence, x: Sequence) -> bool:
    """Containment oracle: Q_x lies in H_c iff c kills the span P^4_x."""
    return all(pairing(c, b) == 0 for b in quadric_span(x).span.basis)


# ---------------------------------------------------------------------------
# conics


class NoConicVertex(ValueError):
    pass


def conic_vertex(points: Sequence[Sequence]) -> tuple:
    """Vertex x(q) of a conic of rank >= 2 through three points of Sigma."""
    if len(points) != 3:
        raise ValueError("need three points")
    planes = [plane_of(p) for p in points]
    common = planes[0].intersect(planes[1]).intersect(planes[2])
    if common.dim != 1:
        raise NoConicVertex(
            f"the three lagrangian planes meet in dimension {common.dim}; "
            "a vertex exists only for conics of rank >= 2")
    return common.basis[0]


@dataclass(frozen=True)
class VertexConic:
    pivot: Point13
    plane: LinSubspace  # lagrangian plane of the pivot, echelon basis
    form: TernaryForm  # conic in coordinates of plane.basis

    def vertex(self, a: Sequence) -> list:
        return [sum(ai * b[k] for ai, b in zip(a, self.plane.basis)) for k in range(6)]

    def to_json(self) -> dict:
        return {"pivot": self.pivot.to_json(), "plane": self.plane.to_json(), "form": self.form.to_json()}


def canonical_position(c: Sequence):
    """Symplectic g and transported covector c' with hat_pivot(c') = (1:0:0:0).

    Returns (g, pivot, c') where c' = (0:0:Y:z) and the plane basis is g(e1..e3).
    """
    orbit = classify_orbit(c)
    if orbit is not OrbitClass.F_MINUS_OMEGA:
        raise WrongOrbit(OrbitClass.F_MINUS_OMEGA, orbit)
    piv = hat_pivot(c)
    plane = plane_of(piv)
    g = symplectic_completion(plane)
    # <c', p> = <c, rho(g) p>
    r = rho_wedge3(g)
    gc = [w * x for w, x in zip(PAIRING_WEIGHTS, c)]
    cp = [v / w for v, w in zip(matvec(transpose(r), gc), PAIRING_WEIGHTS)]
    return g, piv, plane, cp


def vertex_conic(c: Sequence) -> VertexConic:
    """Vertex conic q(c) = {x : Q_x in H_c} in the lagrangian plane of the hat-pivot."""
    g, piv, plane, cp = canonical_position(c)
    u, X, Y, z = blocks(cp)
    if u != 0 or any(v != 0 for row in X for v in row):
        raise AssertionError("canonical transport did not reach (0:0:Y:z)")
    return VertexConic(piv, plane, TernaryForm.from_matrix(Y))


def transport_conic(g, vc: VertexConic, new_plane: LinSubspace) -> TernaryForm:
    """Express the g-image of vc's conic in the echelon basis of new_plane."""
    images = [matvec(g, list(b)) for b in vc.plane.basis]
    N = [new_plane.coords(v) for v in images]  # g b_i = sum_j N_ij b'_j
    Ninv = inverse(N)
    # x' = N^T a  =>  a = N^{-T} x'
    sub = transpose(Ninv)
    return vc.form.substitute(sub)


def on_sigma_along(line: SigmaLine, params) -> bool:
    return all(is_on_sigma(line.point_at(s, t)) for s, t in params)


def restrict_form(frame_coords_rows, form):
    """Gram matrix A M A^T of a quadratic form restricted to rows of A."""
    A = [list(r) for r in frame_coords_rows]
    M = [list(r) for r in form]
    return matmul(matmul(A, M), transpose(A))
