"""High-precision complex companion for curves without rational points.

Scalars are mpmath ``mpc`` values; every routine takes the working precision in
decimal digits and evaluates inside ``mpmath.workdps``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import mpmath
from mpmath import mp

DEFAULT_PREC = 60
MIN_PREC = 30
GUARD_DIGITS = 20


def tolerance(prec: int):
    """The single numeric knob: 10^(6 - prec)."""
    return mpmath.mpf(10) ** (6 - prec)


def check_prec(prec: int) -> int:
    if prec < MIN_PREC:
        raise ValueError(f"precision must be at least {MIN_PREC} digits")
    return prec


def to_mpc(x):
    if isinstance(x, mpmath.mpc):
        return x
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return mpmath.mpc(mpmath.mpf(x.numerator) / x.denominator)
    return mpmath.mpc(x)


def bigfloat_json(x, prec: int) -> dict:
    x = to_mpc(x)
    if x.imag == 0:
        return {"v": mpmath.nstr(x.real, prec), "prec": prec}
    return {"re": mpmath.nstr(x.real, prec), "im": mpmath.nstr(x.imag, prec), "prec": prec}


def bigfloat_from_json(data: dict):
    if "v" in data:
        return mpmath.mpc(mpmath.mpf(data["v"]))
    return mpmath.mpc(mpmath.mpf(data["re"]), mpmath.mpf(data["im"]))


@dataclass(frozen=True)
class NumPoint:
    """Homogeneous complex point; the largest-modulus coordinate is exactly 1."""

    coords: tuple
    prec: int = DEFAULT_PREC

    def __post_init__(self):
        with mp.workdps(self.prec):
            c = [to_mpc(x) for x in self.coords]
            k = max(range(len(c)), key=lambda i: abs(c[i]))
            if c[k] == 0:
                raise ValueError("zero vector is not a projective point")
            pivot = c[k]
            c = [x / pivot for x in c]
            c[k] = mpmath.mpc(1)
        object.__setattr__(self, "coords", tuple(c))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def distance(self, other: "NumPoint"):
        """max |p_i q_j - p_j q_i| for the normalized representatives."""
        with mp.workdps(self.prec):
            p, q = self.coords, other.coords
            n = len(p)
            return max(abs(p[i] * q[j] - p[j] * q[i]) for i in range(n) for j in range(i + 1, n))

    def to_json(self) -> list:
        return [bigfloat_json(x, self.prec) for x in self.coords]


class RootFindingError(ArithmeticError):
    def __init__(self, message: str, best_residual):
        super().__init__(message)
        self.best_residual = best_residual


def _horner(coeffs, z):
    p = mpmath.mpc(0)
    dp = mpmath.mpc(0)
    for a in coeffs:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def root_residual(coeffs: Sequence, z):
    """Backward error of a root: |p(z)| / max|coeff|, measured on the homogeneous
    representative (z : 1) scaled so its largest coordinate has modulus 1."""
    a = [to_mpc(c) for c in coeffs]
    n = len(a) - 1
    scale = max(abs(c) for c in a)
    r = abs(_horner(a, z)[0]) / scale
    m = abs(z)
    return r / m ** n if m > 1 else r


def roots_univariate(coeffs: Sequence, prec: int = DEFAULT_PREC, max_iter: int = 500) -> list:
    """All complex roots of a polynomial (coefficients highest degree first), by
    Aberth-Ehrlich simultaneous iteration followed by Newton polishing.

    Each root satisfies root_residual < 10^(6 - prec).
    """
    check_prec(prec)
    work = prec + GUARD_DIGITS
    with mp.workdps(work):
        a = [to_mpc(c) for c in coeffs]
        if not a or a[0] == 0:
            raise ValueError("leading coefficient must be nonzero")
        n = len(a) - 1
        if n > 8:
            raise ValueError("degree above 8 is not supported")
        if n == 0:
            return []
        lead = a[0]
        a = [c / lead for c in a]
        # Fujiwara-type bound on the root moduli
        radius = 2 * max(abs(a[k]) ** (mpmath.mpf(1) / k) for k in range(1, n + 1))
        radius = max(radius, mpmath.mpf(1)) / 2
        z = [radius * mpmath.expj(2 * mpmath.pi * k / n + mpmath.mpf("0.4")) for k in range(n)]
        eps = mpmath.mpf(10) ** (-work + 5)
        for _ in range(max_iter):
            step = mpmath.mpf(0)
            for k in range(n):
                p, dp = _horner(a, z[k])
                if p == 0:
                    continue
                ratio = p / dp if dp != 0 else mpmath.mpc(radius) / 100
                s = sum(1 / (z[k] - z[j]) for j in range(n) if j != k and z[k] != z[j])
                w = ratio / (1 - ratio * s)
                z[k] -= w
                step = max(step, abs(w) / max(1, abs(z[k])))
            if step < eps:
                break
        for k in range(n):
            for _ in range(5):
                p, dp = _horner(a, z[k])
                if dp == 0 or p == 0:
                    break
                z[k] -= p / dp
        best = max(root_residual(coeffs, zk) for zk in z)
        if best >= tolerance(prec):
            raise RootFindingError(f"root refinement did not reach {mpmath.nstr(tolerance(prec), 5)}", best)
    with mp.workdps(prec):
        return [+zk for zk in z]


def num_eval(form, p: Sequence, prec: int = DEFAULT_PREC):
    """Evaluate a TernaryForm (or any callable of three args) at a numeric point."""
    with mp.workdps(prec):
        return to_mpc(form(*[to_mpc(x) for x in p]))


def num_residual(eqs: Sequence, p: Sequence, prec: int = DEFAULT_PREC):
    """max |eq(p)| over the equations, at the normalized point."""
    with mp.workdps(prec):
        q = NumPoint(tuple(p), prec).coords
        if not eqs:
            return mpmath.mpf(0)
        return max(abs(num_eval(f, q, prec)) for f in eqs)


# ---------------------------------------------------------------------------
# numeric linear algebra


def singular_values(rows: Sequence[Sequence], prec: int = DEFAULT_PREC) -> list:
    with mp.workdps(prec):
        A = mpmath.matrix([[to_mpc(x) for x in r] for r in rows])
        S = mpmath.svd_c(A, compute_uv=False)
        return sorted((S[i] for i in range(S.rows)), reverse=True)


def kernel(rows: Sequence[Sequence], ncols: int, dim: int, prec: int = DEFAULT_PREC):
    """Orthonormal basis of the `dim` smallest right singular directions.

    Returns (basis, sigma_kernel_max, sigma_gap): the largest singular value
    discarded into the kernel and the smallest one kept, both relative to the
    largest singular value.
    """
    with mp.workdps(prec):
        A = mpmath.matrix([[to_mpc(x) for x in r] for r in rows])
        U, S, V = mpmath.svd_c(A, full_matrices=True)
        svals = [S[i] for i in range(S.rows)] + [mpmath.mpf(0)] * (ncols - S.rows)
        top = svals[0] if svals[0] != 0 else mpmath.mpf(1)
        basis = [[mpmath.conj(V[k, j]) for j in range(ncols)] for k in range(ncols - dim, ncols)]
        ker_max = svals[ncols - dim] / top if dim > 0 else mpmath.mpf(0)
        kept_min = svals[ncols - dim - 1] / top if ncols - dim - 1 >= 0 else mpmath.mpf(1)
        return basis, ker_max, kept_min


def numeric_rank(rows, prec: int = DEFAULT_PREC, threshold=None) -> int:
    thr = tolerance(prec) * 1000 if threshold is None else threshold
    sv = singular_values(rows, prec)
    if not sv or sv[0] == 0:
        return 0
    return sum(1 for s in sv if s / sv[0] > thr)


def solve_square(a, b, prec: int = DEFAULT_PREC):
    with mp.workdps(prec):
        A = mpmath.matrix([[to_mpc(x) for x in r] for r in a])
        return list(mpmath.lu_solve(A, mpmath.matrix([to_mpc(x) for x in b])))
