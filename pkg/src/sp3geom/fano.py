"""Fano threefolds X = Sigma meet P^10_X: the dual plane quartic C_X, the pivot
curve, vertex conics over C_X and the conics q_x on X.

Exact parts (dual_quartic, is_smooth_quartic, conic_on_X) work over the
rationals; sampling along C_X is numeric with tolerance 10^(6 - prec).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import mpmath
from mpmath import mp

from .algebra import (LinSubspace, TernaryForm, det, interpolate_ternary_form,
                      monomials, nullspace, rank)
from .incidence import (SigmaLine, line_from_axis, quadric_in_hyperplane,
                        quadric_span, restrict_form)
from .numeric import (DEFAULT_PREC, NumPoint, check_prec, kernel, num_eval,
                      roots_univariate, singular_values, to_mpc, tolerance)
from .quartic import F_eval, F_grad
from .report import Check
from .sp3 import (PAIRING_WEIGHTS, Point13, alpha, blocks, complete_plane,
                  rho_wedge3, sigma_residual, wedge_with_matrix)


@dataclass(frozen=True)
class FanoSection:
    covectors: tuple  # three Point13 spanning the dual plane P^2_X
    seed: int | None = None

    def __post_init__(self):
        if len(self.covectors) != 3:
            raise ValueError("a section needs three covectors")
        if rank([list(c) for c in self.covectors]) != 3:
            raise ValueError("covectors are linearly dependent")

    @property
    def p10(self) -> LinSubspace:
        """P^10_X: points killed by all three covectors (dimension 11)."""
        rows = [[w * x for w, x in zip(PAIRING_WEIGHTS, c)] for c in self.covectors]
        return LinSubspace.span(nullspace(rows, 14), 14)

    def covector_at(self, s, t, w) -> list:
        c0, c1, c2 = self.covectors
        return [s * a + t * b + w * c for a, b, c in zip(c0, c1, c2)]

    def to_json(self) -> dict:
        return {"covectors": [c.to_json() for c in self.covectors], "seed": self.seed}

    @classmethod
    def from_json(cls, data: dict) -> "FanoSection":
        return cls(tuple(Point13.from_json(c) for c in data["covectors"]), data.get("seed"))


def _random_covector(rng: random.Random) -> Point13 | None:
    v = [rng.randint(-5, 5) for _ in range(14)]
    return Point13(tuple(v)) if any(v) else None


def random_section(seed: int, max_tries: int = 100) -> FanoSection:
    """Covector entries uniform in [-5, 5], rejecting dependent or singular planes."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        cs = [_random_covector(rng) for _ in range(3)]
        if None in cs or rank([list(c) for c in cs]) != 3:
            continue
        sec = FanoSection(tuple(cs), seed)
        if dual_quartic(sec).smooth:
            return sec
    raise RuntimeError(f"no smooth section found after {max_tries} draws")


def section_through_line(axis: LinSubspace, seed: int, max_tries: int = 100) -> FanoSection:
    """Random section whose P^10_X contains the line l_L (covectors kill its span)."""
    line = line_from_axis(axis)
    rows = [[w * x for w, x in zip(PAIRING_WEIGHTS, p)] for p in line.points]
    basis = nullspace(rows, 14)  # covectors in pairing coordinates vanishing on l_L
    rng = random.Random(seed)
    for _ in range(max_tries):
        cs = []
        for _ in range(3):
            coef = [rng.randint(-5, 5) for _ in basis]
            v = [sum(a * b[k] for a, b in zip(coef, basis)) for k in range(14)]
            if not any(v):
                break
            cs.append(Point13(tuple(v)))
        if len(cs) != 3 or rank([list(c) for c in cs]) != 3:
            continue
        sec = FanoSection(tuple(cs), seed)
        if dual_quartic(sec).smooth:
            return sec
    raise RuntimeError(f"no smooth section through the line after {max_tries} draws")


# ---------------------------------------------------------------------------
# the dual plane quartic


@dataclass(frozen=True)
class DualQuartic:
    form: TernaryForm
    smooth: bool
    resultant: Fraction | None
    degenerate: bool

    def to_json(self) -> dict:
        return {"form": self.form.to_json(), "smooth": self.smooth, "degenerate": self.degenerate,
                "resultant": None if self.resultant is None else str(self.resultant)}


def dual_quartic(sec: FanoSection) -> DualQuartic:
    """C_X = F restricted to the dual plane, in the parameters (s, t, w)."""
    form = interpolate_ternary_form(4, lambda s, t, w: F_eval(sec.covector_at(s, t, w)))
    if form.is_zero:
        return DualQuartic(form, False, None, True)
    res = macaulay_resultant(form.gradient())
    return DualQuartic(form, res != 0, res, False)


class DegenerateQuartic(ValueError):
    pass


def is_smooth_quartic(q) -> bool:
    form = q.form if isinstance(q, DualQuartic) else q
    if form.is_zero or form.deg != 4:
        raise DegenerateQuartic("smoothness is defined for nonzero quartics")
    return macaulay_resultant(form.gradient()) != 0


def _macaulay_matrices(forms):
    d = [f.deg for f in forms]
    D = sum(di - 1 for di in d) + 1
    mons = monomials(D)
    col = {m: k for k, m in enumerate(mons)}
    rows, divisible = [], []
    for m in mons:
        hits = [i for i in range(3) if m[i] >= d[i]]
        divisible.append(len(hits))
        i = hits[0]
        shift = list(m)
        shift[i] -= d[i]
        row = [Fraction(0)] * len(mons)
        for e, c in forms[i].coeffs.items():
            row[col[(e[0] + shift[0], e[1] + shift[1], e[2] + shift[2])]] += c
        rows.append(row)
    extra = [k for k, n in enumerate(divisible) if n > 1]
    minor = [[rows[a][b] for b in extra] for a in extra]
    return rows, minor


def macaulay_resultant(forms: Sequence[TernaryForm], max_changes: int = 10) -> Fraction:
    """Resultant of three ternary forms as det(M) / det(E), M the Macaulay matrix in
    the critical degree and E its minor on the non-reduced monomials.

    When E is singular the forms are moved by a seeded unimodular change of
    variables, which leaves the resultant unchanged.
    """
    forms = list(forms)
    if len(forms) != 3:
        raise ValueError("need three forms")
    if any(f.is_zero for f in forms):
        return Fraction(0)
    rng = random.Random(0)
    cur = forms
    for _ in range(max_changes):
        M, E = _macaulay_matrices(cur)
        dE = det(E) if E else Fraction(1)
        if dE != 0:
            return Fraction(det(M)) / dE
        # upper unitriangular times lower unitriangular: determinant 1
        r = [rng.randint(-3, 3) for _ in range(6)]
        upper = [[1, r[0], r[1]], [0, 1, r[2]], [0, 0, 1]]
        lower = [[1, 0, 0], [r[3], 1, 0], [r[4], r[5], 1]]
        cur = [f.substitute(_matmul3(upper, lower)) for f in forms]
    raise ArithmeticError("extraneous Macaulay minor stayed singular")


def _matmul3(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


# ---------------------------------------------------------------------------
# sampling C_X


def _base_point(form: TernaryForm):
    for p in ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (2, 1, 0), (1, 2, 1)):
        if form(*p) != 0:
            return p
    raise ValueError("no base point off the curve among the candidates")


def _sort_key(z):
    return (round(float(z.real), 12), round(float(z.imag), 12))


def sample_curve(q, n: int, prec: int = DEFAULT_PREC) -> list:
    """n points of the quartic, sliced by lines through (1:0:0) (or a shifted base point).

    The line through the base point P and (0:1:k), k = 1, 2, ..., meets the
    curve in the roots a of f(a P + (0, 1, k)), a quartic with exact coefficients.
    """
    check_prec(prec)
    form = q.form if isinstance(q, DualQuartic) else q
    if n <= 0:
        return []
    if form.deg != 4 or form.is_zero:
        raise DegenerateQuartic("sampling needs a nonzero quartic")
    P = _base_point(form)
    out = []
    k = 0
    while len(out) < n:
        k += 1
        Q = (0, 1, k)
        # (a, b, 0) -> a P + b Q
        lin = [[P[i], Q[i], 0] for i in range(3)]
        g = form.substitute(lin)
        coeffs = [g.coeffs.get((4 - j, j, 0), Fraction(0)) for j in range(5)]
        roots = roots_univariate(coeffs, prec)
        with mp.workdps(prec):
            for a in sorted(roots, key=_sort_key):
                out.append(NumPoint(tuple(a * P[i] + Q[i] for i in range(3)), prec))
    return out[:n]


# ---------------------------------------------------------------------------
# pivots, planes and vertex conics along the curve


@dataclass
class SampledPoint:
    param: NumPoint
    quartic_residual: object
    gradient_norm: object = None  # max |grad F| at the normalized covector
    pivot: NumPoint | None = None
    pivot_residual: object = None
    plane: list | None = None  # 3 numeric vectors of V6
    plane_residual: object = None
    conic: list | None = None  # 3x3 Gram matrix in the plane basis
    conic_min_sv: object = None
    transport_residual: object = None
    lagrangian_residual: object = None


@dataclass
class CurveSample:
    points: list
    prec: int
    flagged: list = field(default_factory=list)  # (index, reason)
    min_distance: object = None

    def maximum(self, attr: str):
        vals = [getattr(p, attr) for p in self.points if getattr(p, attr) is not None]
        return max(vals) if vals else mpmath.mpf(0)


def _normalized_covector(sec: FanoSection, param: NumPoint) -> list:
    c = [to_mpc(x) for x in sec.covector_at(*param.coords)]
    m = max(abs(x) for x in c)
    return [x / m for x in c]


def _max_abs(v):
    return max(abs(x) for x in v)


def pivot_curve(sec: FanoSection, sample: Sequence[NumPoint], prec: int = DEFAULT_PREC,
                form: TernaryForm | None = None) -> CurveSample:
    """Numeric hat-pivots and their lagrangian planes at sampled points of C_X."""
    check_prec(prec)
    tol = tolerance(prec)
    if form is None:
        form = dual_quartic(sec).form
    cs = CurveSample([], prec)
    with mp.workdps(prec):
        fscale = max(abs(to_mpc(c)) for c in form.coeffs.values())
        for idx, param in enumerate(sample):
            param = NumPoint(tuple(param.coords), prec)
            sp = SampledPoint(param, abs(num_eval(form, param.coords, prec)) / fscale)
            if sp.quartic_residual >= tol:
                cs.flagged.append((idx, "point is not on the dual quartic"))
            c = _normalized_covector(sec, param)
            grad = F_grad(c)
            sp.gradient_norm = _max_abs(grad)
            sp.pivot = NumPoint(tuple(grad), prec)
            sp.pivot_residual = _max_abs(sigma_residual(sp.pivot.coords))
            if sp.pivot_residual >= tol:
                cs.flagged.append((idx, "pivot residual above tolerance"))
            basis, ker_max, _ = kernel(wedge_with_matrix(sp.pivot.coords), 6, 3, prec)
            sp.plane = basis
            sp.plane_residual = ker_max
            cs.points.append(sp)
        dmin = None
        for (i, a), (j, b) in combinations(enumerate(cs.points), 2):
            d = a.pivot.distance(b.pivot)
            dmin = d if dmin is None else min(dmin, d)
            if d <= 1000 * tol:
                cs.flagged.append((j, f"pivot coincides with pivot {i}"))
        cs.min_distance = dmin
    return cs


def _pick_transversal(cands):
    return max(cands, key=lambda c: abs(c[2]))


def vertex_surface(sec: FanoSection, cs: CurveSample) -> CurveSample:
    """Attach to each sampled point its vertex conic, by transporting the covector
    to canonical position (0:0:Y:z); the conic is Y in the chosen plane basis."""
    prec = cs.prec
    tol = tolerance(prec)
    with mp.workdps(prec):
        for idx, sp in enumerate(cs.points):
            c = _normalized_covector(sec, sp.param)
            g = complete_plane(sp.plane, pick=_pick_transversal)
            r = rho_wedge3(g, check=False)
            gc = [w * x for w, x in zip(PAIRING_WEIGHTS, c)]
            cp = [sum(r[i][j] * gc[i] for i in range(14)) / PAIRING_WEIGHTS[j] for j in range(14)]
            u, X, Y, z = blocks(cp)
            ysize = max(abs(y) for row in Y for y in row)
            sp.transport_residual = max([abs(u)] + [abs(x) for row in X for x in row]) / ysize
            sp.conic = [[y / ysize for y in row] for row in Y]
            sv = singular_values(sp.conic, prec)
            sp.conic_min_sv = sv[-1] / sv[0]
            b = sp.plane
            sp.lagrangian_residual = max(abs(alpha(b[i], b[j])) for i in range(3) for j in range(i + 1, 3))
            if sp.transport_residual >= tol:
                cs.flagged.append((idx, "canonical transport left u, X nonzero"))
            if sp.conic_min_sv <= 1000 * tol:
                cs.flagged.append((idx, "vertex conic is singular"))
            if sp.lagrangian_residual >= tol:
                cs.flagged.append((idx, "conic plane is not lagrangian"))
    return cs


def fibration_check(cs: CurveSample) -> Check:
    """Planes of the vertex conics of distinct sampled points span V6 pairwise."""
    tol = tolerance(cs.prec)
    worst = None
    failures = []
    pairs = 0
    with mp.workdps(cs.prec):
        for (i, a), (j, b) in combinations(enumerate(cs.points), 2):
            if a.pivot.distance(b.pivot) <= 1000 * tol:
                continue  # same fiber
            pairs += 1
            sv = singular_values(a.plane + b.plane, cs.prec)
            rel = sv[-1] / sv[0]
            worst = rel if worst is None else min(worst, rel)
            if rel <= 1000 * tol:
                failures.append((i, j))
    return Check("fibration", not failures, None,
                 {"pairs": pairs, "violations": failures, "min_singular_value": worst})


def conic_matrix_value(conic, a):
    return sum(a[i] * conic[i][j] * a[j] for i in range(3) for j in range(3))


def c_l_section_check(sec: FanoSection, line: SigmaLine, cs: CurveSample) -> Check:
    """For each sampled c: the plane of the pivot meets P^3_L in one point x(c),
    which lies on the vertex conic q(c)."""
    prec = cs.prec
    tol = tolerance(prec)
    for p in line.points:
        for c in sec.covectors:
            if sum(w * a * b for w, a, b in zip(PAIRING_WEIGHTS, c, p)) != 0:
                return Check("line-section", False, None, {"error": "the line is not contained in X"})
    space = [list(b) for b in line.space.basis]
    worst = mpmath.mpf(0)
    failures = []
    with mp.workdps(prec):
        for idx, sp in enumerate(cs.points):
            # a . plane = b . space
            cols = [list(v) for v in sp.plane] + [[-x for x in v] for v in space]
            rows = [[col[k] for col in cols] for k in range(6)]
            basis, ker_max, kept_min = kernel(rows, 7, 1, prec)
            if kept_min <= 1000 * tol:
                failures.append((idx, "plane meets P^3_L in more than a point"))
                continue
            a = basis[0][:3]
            m = max(abs(x) for x in a)
            if m <= 1000 * tol:
                failures.append((idx, "intersection lies in P^3_L only through the plane's zero"))
                continue
            a = [x / m for x in a]
            val = abs(conic_matrix_value(sp.conic, a))
            worst = max(worst, val, ker_max)
            if val >= tol:
                failures.append((idx, "x(c) is off the vertex conic"))
    return Check("line-section", not failures, worst, {"failures": failures})


# ---------------------------------------------------------------------------
# conics q_x on X


class ContainmentFailure(ValueError):
    pass


class NotTransverse(ValueError):
    pass


@dataclass(frozen=True)
class ConicOnX:
    plane: LinSubspace  # 3-dimensional subspace of the 14-space
    form: TernaryForm  # in coordinates of plane.basis
    rank: int


def conic_on_X(sec: FanoSection, x: Sequence) -> ConicOnX:
    """q_x = Q_x meet X for a vertex x on the conic of a covector of P^2_X."""
    vq = quadric_span(x)
    meet = vq.span.intersect(sec.p10)
    if meet.dim == 2:
        bad = [k for k, c in enumerate(sec.covectors) if not quadric_in_hyperplane(c, x)]
        raise ContainmentFailure(
            f"Q_x is not contained in any hyperplane of the dual plane (fails for covectors {bad})")
    if meet.dim != 3:
        raise NotTransverse(f"span of Q_x meets P^10_X in dimension {meet.dim}, expected 3")
    A = [vq.frame_coords(list(b)) for b in meet.basis]
    M = restrict_form(A, vq.form)
    form = TernaryForm.from_matrix(M)
    if form.is_zero:
        raise NotTransverse("Q_x restricts to zero on the plane")
    return ConicOnX(meet, form, rank(M))


# ---------------------------------------------------------------------------
# end-to-end checks


def _check_max(name, cs, attr, tol):
    r = cs.maximum(attr)
    return Check(name, r < tol, r)


def analyse_section(sec: FanoSection, n: int, prec: int = DEFAULT_PREC, line: SigmaLine | None = None) -> list:
    """Sample n points of C_X and run the pivot, conic, fibration (and line) checks."""
    tol = tolerance(prec)
    dq = dual_quartic(sec)
    checks = [Check("smooth-quartic", dq.smooth, None, {"degenerate": dq.degenerate})]
    if not dq.smooth:
        return checks
    sample = sample_curve(dq, n, prec)
    cs = pivot_curve(sec, sample, prec, dq.form)
    vertex_surface(sec, cs)
    with mp.workdps(prec):
        checks.append(_check_max("quartic-residual", cs, "quartic_residual", tol))
        checks.append(_check_max("pivots", cs, "pivot_residual", tol))
        checks.append(_check_max("planes", cs, "plane_residual", tol))
        dist_ok = cs.min_distance is None or cs.min_distance > 1000 * tol
        checks.append(Check("pivots-distinct", dist_ok, None, {"min_distance": cs.min_distance}))
        gmin = min((p.gradient_norm for p in cs.points), default=None)
        checks.append(Check("off-omega", gmin is None or gmin > 1000 * tol, None, {"min_gradient": gmin}))
        checks.append(_check_max("conic-transport", cs, "transport_residual", tol))
        checks.append(_check_max("lagrangian", cs, "lagrangian_residual", tol))
        cmin = min((p.conic_min_sv for p in cs.points), default=None)
        checks.append(Check("smooth-conics", cmin is None or cmin > 1000 * tol, None, {"min_singular_value": cmin}))
        checks.append(fibration_check(cs))
        if line is not None:
            checks.append(c_l_section_check(sec, line, cs))
    return checks
