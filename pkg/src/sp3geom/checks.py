"""Seeded invariant suites run by ``sp3geom verify-lemmas``.

Each suite takes a ``random.Random`` and a trial count and returns a list of
Check records.  Exact suites count failures; the section suite is numeric.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import LinSubspace, SymMat3, TernaryForm, matvec
from .fano import analyse_section, random_section, section_through_line
from .incidence import (line_from_axis, quadric_span, transport_conic,
                        vertex_conic)
from .numeric import DEFAULT_PREC
from .projection import BaseLocusError, double_project, in_base_locus, projection_center
from .quartic import (ConeClass, F_eval, F_grad, OrbitClass, classify_orbit,
                      cone_membership, hat_pivot, tangent_space)
from .report import Check
from .sp3 import (Point13, act, act_dual, alpha_perp, apply6, correlation_J,
                  exp_map, from_blocks, is_on_sigma, pairing, plane_of,
                  plucker, random_sp3, random_symmetric, rho_wedge3)

CANONICAL_AXIS = LinSubspace.span([[0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]], 6)


def _count(name, results):
    results = list(results)
    bad = [i for i, ok in enumerate(results) if not ok]
    return Check(name, not bad, None, {"trials": len(results), "failures": bad[:10]})


def random_point(rng: random.Random, lo: int = -5, hi: int = 5) -> list:
    return [Fraction(rng.randint(lo, hi)) for _ in range(14)]


def random_chart_point(rng: random.Random) -> Point13:
    return exp_map(random_symmetric(rng))


def random_axis(rng: random.Random) -> LinSubspace:
    g = random_sp3(rng)
    return LinSubspace.span([apply6(g, b) for b in CANONICAL_AXIS.basis], 6)


def random_nodal_covector(rng: random.Random) -> Point13:
    """A covector of F - Omega: the canonical (0:0:Y:z) moved by a random g."""
    while True:
        Y = random_symmetric(rng)
        if Y.det() != 0:
            break
    c = from_blocks(0, [[0] * 3] * 3, Y.full(), rng.randint(-3, 3))
    return act_dual(random_sp3(rng), c)


def projectively_equal(f: TernaryForm, g: TernaryForm) -> bool:
    if set(f.coeffs) != set(g.coeffs) or not f.coeffs:
        return f.coeffs == g.coeffs
    k = next(iter(f.coeffs))
    r = g.coeffs[k] / f.coeffs[k]
    return all(g.coeffs[e] == r * c for e, c in f.coeffs.items())


# ---------------------------------------------------------------------------


def suite_core(rng: random.Random, trials: int) -> list:
    if trials <= 0:
        return []
    checks = []
    mats = [SymMat3.from_entries(*(rng.randint(-9, 9) for _ in range(6))) for _ in range(trials)]
    checks.append(_count("adjugate", (
        SymMat3.from_matrix([[sum(M.full()[i][k] * M.adjugate().full()[k][j] for k in range(3))
                              for j in range(3)] for i in range(3)]) == SymMat3.identity().scale(M.det())
        for M in mats)))
    pts = [random_chart_point(rng) for _ in range(trials)]
    checks.append(_count("exp-cramer", (is_on_sigma(p) for p in pts)))
    checks.append(_count("plucker-roundtrip", (plucker(plane_of(p)) == p for p in pts)))
    checks.append(_count("sigma-stable", (is_on_sigma(act(random_sp3(rng), p)) for p in pts)))
    checks.append(_count("gradient-vanishes-on-sigma", (all(g == 0 for g in F_grad(p)) for p in pts)))
    gen = [random_point(rng) for _ in range(trials)]
    checks.append(_count("euler", (pairing(p, F_grad(p)) == 4 * F_eval(p) for p in gen)))
    checks.append(_count("invariance", (F_eval(matvec(rho_wedge3(random_sp3(rng)), p)) == F_eval(p)
                                        for p in gen)))
    return checks


def suite_incidence(rng: random.Random, trials: int) -> list:
    if trials <= 0:
        return []
    checks = []
    lines = [line_from_axis(random_axis(rng)) for _ in range(trials)]
    checks.append(_count("line-on-sigma", (
        all(is_on_sigma(ln.point_at(rng.randint(-9, 9), rng.randint(-9, 9))) for _ in range(5))
        for ln in lines)))
    checks.append(_count("line-space", (ln.space == alpha_perp(ln.axis) and ln.space.dim == 4 for ln in lines)))
    xs = []
    while len(xs) < trials:
        x = [rng.randint(-4, 4) for _ in range(6)]
        if any(x):
            xs.append(x)
    checks.append(_count("quadric-rank-5", (quadric_span(x).rank() == 5 and quadric_span(x).span.dim == 5
                                            for x in xs)))
    covs = [random_nodal_covector(rng) for _ in range(trials)]
    checks.append(_count("nodal-orbit", (classify_orbit(c) is OrbitClass.F_MINUS_OMEGA for c in covs)))
    checks.append(_count("pivot-node", (pairing(c, hat_pivot(c)) == 0 for c in covs)))
    checks.append(_count("tangent-in-hyperplane", (
        all(pairing(c, b) == 0 for b in tangent_space(hat_pivot(c)).basis) for c in covs)))
    checks.append(_count("vertex-conic-equivariance", (_equivariance_trial(rng) for _ in range(trials))))
    checks.append(_count("pivot-fibers", (_fiber_trial(rng) for _ in range(trials))))
    return checks


def _equivariance_trial(rng: random.Random) -> bool:
    c = random_nodal_covector(rng)
    g = random_sp3(rng)
    vc = vertex_conic(c)
    moved = vertex_conic(act_dual(g, c))
    image = LinSubspace.span([apply6(g, b) for b in vc.plane.basis], 6)
    if image != moved.plane:
        return False
    return projectively_equal(transport_conic(g, vc, moved.plane), moved.form)


def _fiber_trial(rng: random.Random) -> bool:
    u = random_chart_point(rng)
    T = tangent_space(u)
    while True:
        coef = [rng.randint(-3, 3) for _ in T.basis]
        v = [sum(a * b[k] for a, b in zip(coef, T.basis)) for k in range(14)]
        if any(v) and cone_membership(u, v).kind is ConeClass.OUTSIDE:
            break
    return hat_pivot(v) == correlation_J(u)


def suite_projection(rng: random.Random, trials: int) -> list:
    if trials <= 0:
        return []
    pd = projection_center(line_from_axis(random_axis(rng)))
    agree, base = 0, 0
    for _ in range(trials):
        p = random_chart_point(rng)
        try:
            double_project(pd, p)  # raises if the two routes disagree
            agree += 1
        except BaseLocusError:
            base += 1
    checks = [Check("projection-agreement", agree + base == trials, None,
                    {"trials": trials, "agree": agree, "base_locus": base})]
    # points of the line itself and of the pencil lie in the base locus
    line = pd.line
    on_line = [line.point_at(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(min(trials, 20))]
    checks.append(_count("line-in-base-locus", (in_base_locus(pd, p) for p in on_line)))
    return checks


def suite_section(rng: random.Random, trials: int, points: int = 20, prec: int = DEFAULT_PREC) -> list:
    checks = []
    for k in range(trials):
        seed = rng.getrandbits(32)
        if k % 2 == 0:
            sec = random_section(seed)
            line = None
        else:
            axis = random_axis(random.Random(seed))
            sec = section_through_line(axis, seed)
            line = line_from_axis(axis)
        for c in analyse_section(sec, points, prec, line):
            c.name = f"section[{k}].{c.name}"
            c.detail["seed"] = seed
            checks.append(c)
    return checks


SUITES = {
    "core": suite_core,
    "incidence": suite_incidence,
    "projection": suite_projection,
    "section": suite_section,
}


def run_suite(name: str, seed: int, trials: int, points: int = 20, prec: int = DEFAULT_PREC) -> list:
    rng = random.Random(seed)
    if name == "section":
        return suite_section(rng, trials, points, prec)
    return SUITES[name](rng, trials)
