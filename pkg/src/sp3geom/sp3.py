"""The symplectic space (V6, alpha), the group Sp3 and the Pluecker geometry of
the lagrangian grassmannian in P^13(u:X:Y:z).

Indices on V6 are 0-based here: e1..e6 are 0..5.  A wedge label is an ordered
triple (a, b, c); its coordinate is the coefficient of e_a ^ e_b ^ e_c, i.e. the
sorted coefficient times the sign of the sorting permutation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .algebra import (LinSubspace, SymMat3, adjugate, det3, identity, matmul,
                      matvec, nullspace, rat, rat_str, transpose)

# slice coordinate order: u, X11 X12 X13 X22 X23 X33, Y11 Y12 Y13 Y22 Y23 Y33, z
SYM_PAIRS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
OFFDIAG = (2, 3, 5, 8, 9, 11)
PAIRING_WEIGHTS = tuple(Fraction(2) if k in OFFDIAG else Fraction(1) for k in range(14))
COORD_NAMES = (("u",) + tuple(f"X{i + 1}{j + 1}" for i, j in SYM_PAIRS)
               + tuple(f"Y{i + 1}{j + 1}" for i, j in SYM_PAIRS) + ("z",))

WEDGE3 = tuple(combinations(range(6), 3))
WEDGE4 = tuple(combinations(range(6), 4))
_W3_INDEX = {t: k for k, t in enumerate(WEDGE3)}


def _x_label(i: int, j: int) -> tuple[int, int, int]:
    # X_ij: slot j of e1^e2^e3 replaced by e_{3+i}
    lab = [0, 1, 2]
    lab[j] = 3 + i
    return tuple(lab)


def _y_label(i: int, j: int) -> tuple[int, int, int]:
    # Y_ij: slot j of e4^e5^e6 replaced by e_i
    lab = [3, 4, 5]
    lab[j] = i
    return tuple(lab)


def perm_sign(seq: Sequence[int]) -> int:
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
            elif seq[i] == seq[j]:
                return 0
    return s


def _labels_for(k: int) -> list[tuple[int, int, int]]:
    """All ordered wedge labels carrying slice coordinate k (two for off-diagonal entries)."""
    if k == 0:
        return [(0, 1, 2)]
    if k == 13:
        return [(3, 4, 5)]
    i, j = SYM_PAIRS[(k - 1) % 6]
    lab = _x_label if k <= 6 else _y_label
    return [lab(i, j)] if i == j else [lab(i, j), lab(j, i)]


SLICE_LABELS = tuple(tuple(_labels_for(k)) for k in range(14))


def _build_embedding():
    emb = [[Fraction(0)] * 14 for _ in range(20)]
    proj = [[Fraction(0)] * 20 for _ in range(14)]
    for k, labels in enumerate(SLICE_LABELS):
        for n, lab in enumerate(labels):
            s = perm_sign(lab)
            idx = _W3_INDEX[tuple(sorted(lab))]
            emb[idx][k] = Fraction(s)
            if n == 0:
                proj[k][idx] = Fraction(s)
    return emb, proj


# EMBED: 20x14, slice -> wedge (sorted basis); PROJECT: 14x20 reads upper-triangle labels
EMBED, PROJECT = _build_embedding()


def slice_equations():
    """The six linear forms on the 20-space cutting out the symmetric slice."""
    eqs = []
    for labels in SLICE_LABELS:
        if len(labels) == 2:
            row = [Fraction(0)] * 20
            for lab, sg in zip(labels, (1, -1)):
                row[_W3_INDEX[tuple(sorted(lab))]] += sg * perm_sign(lab)
            eqs.append(row)
    return eqs


SLICE_EQUATIONS = slice_equations()


def to_wedge(p: Sequence) -> list:
    return matvec(EMBED, list(p))


def from_wedge(w: Sequence, check: bool = True) -> list:
    if check and any(x != 0 for x in matvec(SLICE_EQUATIONS, w)):
        raise ValueError("wedge vector is not in the symmetric slice")
    return matvec(PROJECT, list(w))


def pairing(c: Sequence, p: Sequence):
    """Natural pairing of a covector with a point: c_u u + tr(c_X X) + tr(c_Y Y) + c_z z."""
    return sum(w * a * b for w, a, b in zip(PAIRING_WEIGHTS, c, p))


# ---------------------------------------------------------------------------
# points


def normalize(v: Sequence) -> tuple:
    for x in v:
        if x != 0:
            return tuple(rat(y) / rat(x) for y in v)
    raise ValueError("zero vector is not a projective point")


@dataclass(frozen=True)
class Point13:
    """Point of P^13(u:X:Y:z), scaled so the first nonzero coordinate is 1."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 14:
            raise ValueError("Point13 needs 14 coordinates")
        object.__setattr__(self, "coords", normalize(self.coords))

    @classmethod
    def from_blocks(cls, u, X: SymMat3, Y: SymMat3, z) -> "Point13":
        return cls((rat(u),) + tuple(X.entries) + tuple(Y.entries) + (rat(z),))

    @property
    def u(self):
        return self.coords[0]

    @property
    def X(self) -> SymMat3:
        return SymMat3(self.coords[1:7])

    @property
    def Y(self) -> SymMat3:
        return SymMat3(self.coords[7:13])

    @property
    def z(self):
        return self.coords[13]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return 14

    def __getitem__(self, k):
        return self.coords[k]

    def to_json(self) -> dict:
        return {"u": rat_str(self.u), "X": self.X.to_json(), "Y": self.Y.to_json(), "z": rat_str(self.z)}

    @classmethod
    def from_json(cls, data: dict) -> "Point13":
        return cls.from_blocks(data["u"], SymMat3.from_json(data["X"]), SymMat3.from_json(data["Y"]), data["z"])

    def __repr__(self):
        return f"Point13({':'.join(str(x) for x in self.coords)})"


def blocks(p: Sequence):
    """(u, X, Y, z) with X, Y as full 3x3 lists; works for any scalar type."""
    X = [[None] * 3 for _ in range(3)]
    Y = [[None] * 3 for _ in range(3)]
    for n, (i, j) in enumerate(SYM_PAIRS):
        X[i][j] = X[j][i] = p[1 + n]
        Y[i][j] = Y[j][i] = p[7 + n]
    return p[0], X, Y, p[13]


def from_blocks(u, X, Y, z) -> list:
    return [u] + [X[i][j] for i, j in SYM_PAIRS] + [Y[i][j] for i, j in SYM_PAIRS] + [z]


def unit_point(k: int) -> Point13:
    return Point13(tuple(int(i == k) for i in range(14)))


# ---------------------------------------------------------------------------
# symplectic form and group


def symplectic_gram():
    J = [[Fraction(0)] * 6 for _ in range(6)]
    for i in range(3):
        J[i][3 + i] = Fraction(1)
        J[3 + i][i] = Fraction(-1)
    return J


GRAM = symplectic_gram()


def alpha(v: Sequence, w: Sequence):
    return sum(v[i] * w[3 + i] - v[3 + i] * w[i] for i in range(3))


def is_isotropic(space: LinSubspace) -> bool:
    b = space.basis
    return all(alpha(b[i], b[j]) == 0 for i in range(len(b)) for j in range(i + 1, len(b)))


def alpha_perp(space: LinSubspace) -> LinSubspace:
    """{v : alpha(v, w) = 0 for all w in space}."""
    rows = [[-w[3 + i] for i in range(3)] + [w[i] for i in range(3)] for w in space.basis]
    return LinSubspace.span(nullspace(rows, 6), 6) if rows else LinSubspace.whole(6)


def is_symplectic(g) -> bool:
    return matmul(matmul(transpose(g), GRAM), g) == GRAM


def symplectic_inverse(g):
    """g^{-1} = -J g^T J for g in Sp3."""
    return [[-x for x in row] for row in matmul(matmul(GRAM, transpose(g)), GRAM)]


def transvection(v: Sequence, lam=1):
    """x -> x + lam * alpha(x, v) v, exactly symplectic."""
    v = [rat(x) if not _inexact(x) else x for x in v]
    m = identity(6)
    for col in range(6):
        e = [int(i == col) for i in range(6)]
        a = alpha(e, v)
        for r in range(6):
            m[r][col] = m[r][col] + lam * a * v[r]
    return m


def _inexact(x) -> bool:
    return not isinstance(x, (int, Fraction))


def random_sp3(rng: random.Random, count: int | None = None, height: int = 2):
    """Product of 6..12 transvections with small integer vectors and rational parameters."""
    if count is None:
        count = rng.randint(6, 12)
    g = identity(6)
    for _ in range(count):
        v = [rng.randint(-height, height) for _ in range(6)]
        lam = Fraction(rng.choice([-2, -1, 1, 2]), rng.choice([1, 2, 3]))
        g = matmul(transvection(v, lam), g)
    return g


def random_symmetric(rng: random.Random, lo: int = -5, hi: int = 5) -> SymMat3:
    return SymMat3.from_entries(*(rng.randint(lo, hi) for _ in range(6)))


# ---------------------------------------------------------------------------
# exp map and the Cramer equations


def exp_map(X: SymMat3) -> Point13:
    return Point13.from_blocks(1, X, adjugate(X), X.det())


def _adj_full(M):
    return [[M[(j + 1) % 3][(i + 1) % 3] * M[(j + 2) % 3][(i + 2) % 3]
             - M[(j + 1) % 3][(i + 2) % 3] * M[(j + 2) % 3][(i + 1) % 3] for j in range(3)]
            for i in range(3)]


def sigma_residual(p: Sequence) -> list:
    """The 21 Cramer quadrics adj X - uY, adj Y - zX (upper triangles), XY - uzI."""
    u, X, Y, z = blocks(p)
    aX, aY = _adj_full(X), _adj_full(Y)
    out = [aX[i][j] - u * Y[i][j] for i, j in SYM_PAIRS]
    out += [aY[i][j] - z * X[i][j] for i, j in SYM_PAIRS]
    XY = matmul(X, Y)
    out += [XY[i][j] - (u * z if i == j else 0) for i in range(3) for j in range(3)]
    return out


def is_on_sigma(p: Sequence) -> bool:
    return all(r == 0 for r in sigma_residual(p))


def sigma_jacobian(p: Sequence) -> list[list]:
    """21x14 Jacobian of the Cramer quadrics at p (polarization of each quadric)."""
    cols = []
    for k in range(14):
        plus = list(p)
        minus = list(p)
        plus[k] = plus[k] + 1
        minus[k] = minus[k] - 1
        rp, rm = sigma_residual(plus), sigma_residual(minus)
        cols.append([(a - b) / 2 for a, b in zip(rp, rm)])
    return transpose(cols)


# ---------------------------------------------------------------------------
# wedge powers and the Pluecker correspondence


def wedge3_vector(b: Sequence[Sequence]) -> list:
    """Sorted-basis coordinates of b0 ^ b1 ^ b2 (3x3 minors)."""
    return [det3([[b[r][c] for c in idx] for r in range(3)]) for idx in WEDGE3]


def wedge3_matrix(g) -> list[list]:
    """20x20 matrix of wedge^3 g on the sorted basis: entry (I, J) = det g[I, J]."""
    return [[det3([[g[r][c] for c in J] for r in I]) for J in WEDGE3] for I in WEDGE3]


def plucker(plane) -> Point13:
    """Pluecker point of a lagrangian plane (LinSubspace of V6 or 3 basis vectors)."""
    basis = plane.basis if isinstance(plane, LinSubspace) else plane
    if len(basis) != 3:
        raise ValueError("a plane needs three basis vectors")
    w = wedge3_vector(basis)
    if any(x != 0 for x in matvec(SLICE_EQUATIONS, w)):
        raise ValueError("plane is not lagrangian")
    return Point13(tuple(from_wedge(w, check=False)))


def plucker_raw(basis: Sequence[Sequence]) -> list:
    """Slice coordinates of b0^b1^b2 without normalization (any scalar type)."""
    return matvec(PROJECT, wedge3_vector(basis))


def wedge_with_matrix(p: Sequence) -> list[list]:
    """15x6 matrix of v -> v ^ omega from V6 to wedge^4 V6, omega the wedge of p."""
    w = to_wedge(p)
    m = []
    for quad in WEDGE4:
        row = [0] * 6
        for pos, k in enumerate(quad):
            rest = quad[:pos] + quad[pos + 1:]
            row[k] = row[k] + (-1) ** pos * w[_W3_INDEX[rest]]
        m.append(row)
    return m


class NotOnSigma(ValueError):
    pass


def plane_of(p: Sequence) -> LinSubspace:
    """Lagrangian plane of a point of Sigma: kernel of v -> v ^ omega."""
    ker = nullspace(wedge_with_matrix(p), 6)
    if len(ker) != 3:
        raise NotOnSigma(f"kernel of v^omega has dimension {len(ker)}, point is not on Sigma")
    return LinSubspace.span(ker, 6)


# ---------------------------------------------------------------------------
# completion to symplectic bases


def _coordinate_lagrangians():
    # U_infinity first so that U_o completes to the identity
    out = []
    for mask in range(8):
        flip = [(mask >> i) & 1 for i in range(3)]
        out.append([(i if f else 3 + i) for i, f in enumerate(flip)])
    return out


COORDINATE_LAGRANGIANS = _coordinate_lagrangians()


def complete_plane(basis: Sequence[Sequence], pick=None):
    """Symplectic g with g(e_i) = basis[i] (i = 1, 2, 3) for a lagrangian basis.

    The complement g(U_infinity) is a coordinate lagrangian transversal to the
    plane, dual to the basis under alpha.  `pick(candidates)` chooses among
    transversal coordinate lagrangians (default: the first one).
    """
    cands = []
    for K in COORDINATE_LAGRANGIANS:
        gram = [[alpha(b, [int(i == k) for i in range(6)]) for k in K] for b in basis]
        d = det3(gram)
        if d != 0:
            cands.append((K, gram, d))
    if not cands:
        raise ValueError("basis does not span a lagrangian plane")
    K, gram, d = cands[0] if pick is None else pick(cands)
    inv = _inv3(gram, d)
    h = []
    for j in range(3):
        v = [0] * 6
        for kk, k in enumerate(K):
            v[k] = v[k] + inv[kk][j]
        h.append(v)
    cols = [list(b) for b in basis] + h
    return transpose(cols)


def _inv3(m, d):
    adj = _adj_full(m) if _is_sym(m) else _adj_general(m)
    return [[x / d for x in row] for row in adj]


def _is_sym(m):
    return all(m[i][j] == m[j][i] for i in range(3) for j in range(3))


def _adj_general(m):
    return [[(m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
              - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]) for j in range(3)]
            for i in range(3)]


def symplectic_completion(P: LinSubspace):
    """g in Sp3 with g(U_o) = P, g(e_i) the echelon basis of P."""
    if P.n != 6 or P.dim != 3 or not is_isotropic(P):
        raise ValueError("input is not a lagrangian plane")
    return complete_plane([list(b) for b in P.basis])


def complete_vector(x: Sequence, pick=None):
    """Symplectic g with g(e1) = x, by symplectic Gram-Schmidt over the standard basis."""
    if all(c == 0 for c in x):
        raise ValueError("zero vector")
    pick = pick or (lambda vals: next(i for i, v in enumerate(vals) if v != 0))
    pool = [[Fraction(int(i == k)) for i in range(6)] for k in range(6)]
    fs, hs = [], []
    f = list(x)
    while True:
        vals = [alpha(f, e) for e in pool]
        k = pick(vals)
        h = [c / vals[k] for c in pool[k]]
        fs.append(f)
        hs.append(h)
        if len(fs) == 3:
            break
        pool = [_project_off(v, f, h) for v in pool]
        norms = [max(abs(c) for c in v) if _inexact(v[0]) else int(any(c != 0 for c in v)) for v in pool]
        f = pool[pick(norms)]
    return transpose(fs + hs)


def _project_off(v, f, h):
    # component of v alpha-orthogonal to the hyperbolic pair (f, h)
    a, b = alpha(v, h), alpha(v, f)
    return [vi - a * fi + b * hi for vi, fi, hi in zip(v, f, h)]


# ---------------------------------------------------------------------------
# induced action on P^13


class SliceNotPreserved(ValueError):
    pass


def rho_wedge3(g, check: bool = True):
    """14x14 matrix of wedge^3 g restricted to the symmetric slice."""
    W = wedge3_matrix(g)
    WE = matmul(W, EMBED)
    if check and not _inexact(WE[0][0]):
        if any(x != 0 for row in matmul(SLICE_EQUATIONS, WE) for x in row):
            raise SliceNotPreserved("wedge^3 g does not preserve the slice; g is not symplectic")
    return matmul(PROJECT, WE)


def rho_dual(g, check: bool = True):
    """Contragredient action on covectors in pairing coordinates: <rho_dual c, rho p> = <c, p>."""
    r_inv = rho_wedge3(symplectic_inverse(g), check)
    return [[r_inv[j][i] * PAIRING_WEIGHTS[j] / PAIRING_WEIGHTS[i] for j in range(14)] for i in range(14)]


def act(g, p: Sequence) -> Point13:
    return Point13(tuple(matvec(rho_wedge3(g), list(p))))


def act_dual(g, c: Sequence) -> Point13:
    return Point13(tuple(matvec(rho_dual(g), list(c))))


def apply6(g, v: Sequence) -> list:
    return matvec(g, list(v))


# ---------------------------------------------------------------------------
# the correlation induced by alpha


def _correlation_wedge():
    # J(e_i) = x_{i+3}, J(e_{i+3}) = -x_i on V6
    img = {}
    for i in range(3):
        img[i] = (3 + i, 1)
        img[3 + i] = (i, -1)
    m = [[Fraction(0)] * 20 for _ in range(20)]
    for col, (a, b, c) in enumerate(WEDGE3):
        (a2, sa), (b2, sb), (c2, sc) = img[a], img[b], img[c]
        lab = (a2, b2, c2)
        row = _W3_INDEX[tuple(sorted(lab))]
        m[row][col] = Fraction(sa * sb * sc * perm_sign(lab))
    return m


CORRELATION_WEDGE = _correlation_wedge()


def _covector_coords(xi: Sequence) -> list:
    """Pairing coordinates of a 3-form (sorted basis), symmetrized over the slice."""
    out = []
    for labels in SLICE_LABELS:
        vals = [perm_sign(lab) * xi[_W3_INDEX[tuple(sorted(lab))]] for lab in labels]
        out.append(sum(vals) / len(vals))
    return out


def correlation_raw(p: Sequence) -> list:
    return _covector_coords(matvec(CORRELATION_WEDGE, to_wedge(p)))


def correlation_J(p: Sequence) -> Point13:
    """Correlative (dual) point of p under the isomorphism V6 -> V6^ induced by alpha."""
    return Point13(tuple(correlation_raw(p)))


# ---------------------------------------------------------------------------
# misc


def vector_json(v: Sequence) -> list[str]:
    return [rat_str(x) for x in v]


def matrix_json(m) -> list[str]:
    return [rat_str(x) for row in m for x in row]


def matrix_from_json(data, n: int = 6):
    vals = [rat(x) for x in data]
    if len(vals) != n * n:
        raise ValueError(f"expected {n * n} entries")
    return [vals[i * n:(i + 1) * n] for i in range(n)]
