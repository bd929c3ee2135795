"""The Sp3-invariant quartic F, its gradient, the orbit stratification, pivots,
tangent spaces and the cones K_u, D_u."""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Sequence

from .algebra import LinSubspace, matmul, matvec, nullspace, rank
from .sp3 import (PAIRING_WEIGHTS, Point13, blocks, from_blocks, is_on_sigma, plane_of, rho_wedge3,
                  sigma_jacobian, sigma_residual, symplectic_completion,
                  symplectic_inverse)


class OrbitClass(str, Enum):
    SIGMA = "Sigma"
    OMEGA_MINUS_SIGMA = "OmegaMinusSigma"
    F_MINUS_OMEGA = "FMinusOmega"
    GENERIC = "Generic"


def _det(M):
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def _adj(M):
    return [[M[(j + 1) % 3][(i + 1) % 3] * M[(j + 2) % 3][(i + 2) % 3]
             - M[(j + 1) % 3][(i + 2) % 3] * M[(j + 2) % 3][(i + 1) % 3] for j in range(3)]
            for i in range(3)]


def _tr(M):
    return M[0][0] + M[1][1] + M[2][2]


def _tr_prod(A, B):
    return sum(A[i][j] * B[j][i] for i in range(3) for j in range(3))


def _minor(M, i, j):
    r = [k for k in range(3) if k != i]
    c = [k for k in range(3) if k != j]
    return M[r[0]][c[0]] * M[r[1]][c[1]] - M[r[0]][c[1]] * M[r[1]][c[0]]


def F_eval(p: Sequence):
    """(uz - tr XY)^2 + 4u det Y + 4z det X - 4 sum_ij det(X_ij) det(Y_ij)."""
    u, X, Y, z = blocks(p)
    s = u * z - _tr_prod(X, Y)
    cross = sum(_minor(X, i, j) * _minor(Y, i, j) for i in range(3) for j in range(3))
    return s * s + 4 * u * _det(Y) + 4 * z * _det(X) - 4 * cross


def _grad_tr_adj(M, B):
    # gradient of tr(adj(M) B) in the trace pairing, from adj M = M^2 - tr(M) M + e2(M) I
    MB = matmul(M, B)
    BM = matmul(B, M)
    tMB, tM, tB = _tr(MB), _tr(M), _tr(B)
    return [[MB[i][j] + BM[i][j] - tM * B[i][j] - tB * M[i][j]
             + ((tM * tB - tMB) if i == j else 0) for j in range(3)] for i in range(3)]


def F_grad(p: Sequence) -> list:
    """Gradient of F with respect to the natural pairing.

    Off-diagonal entries are half the partial derivative in the slice coordinate,
    so that pairing(p, F_grad(p)) = 4 F(p) and F_grad maps F - Omega onto Sigma.
    """
    u, X, Y, z = blocks(p)
    s = u * z - _tr_prod(X, Y)
    aX, aY = _adj(X), _adj(Y)
    gu = 2 * s * z + 4 * _det(Y)
    gz = 2 * s * u + 4 * _det(X)
    hX = _grad_tr_adj(X, aY)
    hY = _grad_tr_adj(Y, aX)
    gX = [[-2 * s * Y[i][j] + 4 * z * aX[i][j] - 4 * hX[i][j] for j in range(3)] for i in range(3)]
    gY = [[-2 * s * X[i][j] + 4 * u * aY[i][j] - 4 * hY[i][j] for j in range(3)] for i in range(3)]
    return from_blocks(gu, gX, gY, gz)


def F_slice_partials(p: Sequence) -> list:
    """Plain partial derivatives in the 14 slice coordinates."""
    return [w * g for w, g in zip(PAIRING_WEIGHTS, F_grad(p))]


def classify_orbit(p: Sequence, tol=None) -> OrbitClass:
    """Orbit of p; exact when tol is None, thresholded (relative to max |p_i|) otherwise."""
    if tol is None:
        if is_on_sigma(p):
            return OrbitClass.SIGMA
        if all(g == 0 for g in F_grad(p)):
            return OrbitClass.OMEGA_MINUS_SIGMA
        if F_eval(p) == 0:
            return OrbitClass.F_MINUS_OMEGA
        return OrbitClass.GENERIC
    scale = max(abs(x) for x in p)
    q = [x / scale for x in p]
    if max(abs(r) for r in sigma_residual(q)) < tol:
        return OrbitClass.SIGMA
    if max(abs(g) for g in F_grad(q)) < tol:
        return OrbitClass.OMEGA_MINUS_SIGMA
    if abs(F_eval(q)) < tol:
        return OrbitClass.F_MINUS_OMEGA
    return OrbitClass.GENERIC


class WrongOrbit(ValueError):
    def __init__(self, expected: OrbitClass, actual: OrbitClass):
        super().__init__(f"expected a point of {expected.value}, got {actual.value}")
        self.expected = expected
        self.actual = actual


def hat_pivot(c: Sequence) -> Point13:
    """Correlative double pivot of c in F - Omega, as the gradient of F."""
    orbit = classify_orbit(c)
    if orbit is not OrbitClass.F_MINUS_OMEGA:
        raise WrongOrbit(OrbitClass.F_MINUS_OMEGA, orbit)
    return Point13(tuple(F_grad(c)))


def tangent_space(u: Sequence) -> LinSubspace:
    """Projective tangent space P^6_u as a 7-dimensional subspace of the 14-space."""
    jac = sigma_jacobian(list(u))
    ker = nullspace(jac, 14)
    if len(ker) != 7 or not is_on_sigma(u):
        raise ValueError(f"Jacobian kernel has dimension {len(ker)} (point not on Sigma?)")
    return LinSubspace.span(ker, 14)


class ConeClass(str, Enum):
    IN_KU = "InKu"
    IN_DU_ONLY = "InDuOnly"
    OUTSIDE = "Outside"


class ConeMembership(NamedTuple):
    kind: ConeClass
    in_tangent_space: bool


def cone_membership(u: Sequence, v: Sequence) -> ConeMembership:
    """Position of v relative to the Veronese cone K_u and determinantal cone D_u.

    Classified in coordinates where u = (1:0:0:0), so P^6_u = (u:X:0:0),
    K_u = (rank X <= 1) and D_u = (det X = 0).
    """
    if not is_on_sigma(u):
        raise ValueError("u is not on Sigma")
    if not tangent_space(u).contains(list(v)):
        return ConeMembership(ConeClass.OUTSIDE, False)
    g = symplectic_completion(plane_of(u))
    w = matvec(rho_wedge3(symplectic_inverse(g)), list(v))
    _, X, Y, z = blocks(w)
    assert all(y == 0 for row in Y for y in row) and z == 0
    r = rank(X)
    if r <= 1:
        return ConeMembership(ConeClass.IN_KU, True)
    if r == 2:
        return ConeMembership(ConeClass.IN_DU_ONLY, True)
    return ConeMembership(ConeClass.OUTSIDE, True)
