"""Exact rational kernel: symmetric 3x3 matrices, subspaces, ternary forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Rat = Fraction


def rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def rat_str(x: Fraction) -> str:
    return str(Fraction(x))


# ---------------------------------------------------------------------------
# dense exact linear algebra


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [[rat(x) for x in r] for r in rows]
    if not m:
        return [], []
    n = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        if inv != 1:
            m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                ri = m[i]
                rr = m[r]
                m[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : M v = 0} for the matrix with the given rows."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Unique solution of a square system; raises on singular input."""
    n = len(a)
    aug = [list(map(rat, row)) + [rat(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug, n + 1)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def det(m: Sequence[Sequence]) -> object:
    """Determinant by fraction-free-ish elimination; works for any field elements."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return Fraction(1)
    if n == 3:
        return det3(a)
    sign = 1
    result = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            return a[0][0] * 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        p = a[c][c]
        result = result * p
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * result


def det3(a) -> object:
    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(a):
    n = len(a)
    aug = [list(map(rat, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("singular matrix")
    return [r[n:] for r in red]


# ---------------------------------------------------------------------------
# symmetric 3x3 matrices

_SYM_INDEX = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


@dataclass(frozen=True)
class SymMat3:
    """Symmetric 3x3 matrix stored as (m11, m12, m13, m22, m23, m33)."""

    entries: tuple

    def __post_init__(self):
        if len(self.entries) != 6:
            raise ValueError("SymMat3 needs six entries")

    @classmethod
    def from_entries(cls, *e) -> "SymMat3":
        if len(e) == 1:
            e = tuple(e[0])
        return cls(tuple(rat(x) for x in e))

    @classmethod
    def from_matrix(cls, m) -> "SymMat3":
        for i in range(3):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix is not symmetric")
        return cls(tuple(m[i][j] for i, j in _SYM_INDEX))

    @classmethod
    def zero(cls) -> "SymMat3":
        return cls((Fraction(0),) * 6)

    @classmethod
    def identity(cls) -> "SymMat3":
        return cls.diag(1, 1, 1)

    @classmethod
    def diag(cls, a, b, c) -> "SymMat3":
        z = Fraction(0)
        return cls((rat(a), z, z, rat(b), z, rat(c)))

    def __getitem__(self, ij):
        i, j = ij
        if i > j:
            i, j = j, i
        return self.entries[_SYM_INDEX.index((i, j))]

    def full(self) -> list[list]:
        return [[self[i, j] for j in range(3)] for i in range(3)]

    def det(self):
        return det3(self.full())

    def trace(self):
        return self.entries[0] + self.entries[3] + self.entries[5]

    def adjugate(self) -> "SymMat3":
        return adjugate(self)

    def rank(self) -> int:
        return rank(self.full())

    def __add__(self, other: "SymMat3") -> "SymMat3":
        return SymMat3(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, k) -> "SymMat3":
        return SymMat3(tuple(k * a for a in self.entries))

    def to_json(self) -> list[str]:
        return [rat_str(x) for x in self.entries]

    @classmethod
    def from_json(cls, data) -> "SymMat3":
        return cls.from_entries(*data)


def adjugate(m: SymMat3) -> SymMat3:
    """Classical adjoint: m * adjugate(m) = det(m) * I."""
    a, b, c, d, e, f = m.entries
    # a b c / b d e / c e f
    return SymMat3((d * f - e * e, c * e - b * f, b * e - c * d,
                    a * f - c * c, b * c - a * e, a * d - b * b))


def sym_mul(a, b):
    """Plain 3x3 product of two symmetric matrices (result need not be symmetric)."""
    return matmul(a.full() if isinstance(a, SymMat3) else a,
                  b.full() if isinstance(b, SymMat3) else b)


# ---------------------------------------------------------------------------
# linear subspaces in reduced row echelon form


@dataclass(frozen=True)
class LinSubspace:
    n: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], n: int | None = None) -> "LinSubspace":
        vecs = [[rat(x) for x in v] for v in vectors]
        if n is None:
            if not vecs:
                raise ValueError("ambient dimension needed for an empty span")
            n = len(vecs[0])
        for v in vecs:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
        red, _ = rref(vecs, n) if vecs else ([], [])
        return cls(n, tuple(tuple(r) for r in red))

    @classmethod
    def whole(cls, n: int) -> "LinSubspace":
        return cls.span(identity(n), n)

    @classmethod
    def zero(cls, n: int) -> "LinSubspace":
        return cls(n, ())

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "LinSubspace":
        return cls.span([[int(i == k) for i in range(n)] for k in indices], n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "LinSubspace"):
        if self.n != other.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.n:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.n}")
        return rank(list(self.basis) + [list(v)]) == self.dim

    def contains_subspace(self, other: "LinSubspace") -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.basis)

    def join(self, other: "LinSubspace") -> "LinSubspace":
        self._check(other)
        return LinSubspace.span(list(self.basis) + list(other.basis), self.n)

    def annihilator(self) -> "LinSubspace":
        """Orthogonal complement under the standard dot product."""
        return LinSubspace.span(nullspace(self.basis, self.n), self.n)

    def intersect(self, other: "LinSubspace") -> "LinSubspace":
        self._check(other)
        return self.annihilator().join(other.annihilator()).annihilator()

    def coords(self, v: Sequence) -> list[Fraction]:
        """Coordinates of v in the echelon basis (v must lie in the subspace)."""
        _, pivots = rref(self.basis, self.n)
        c = [rat(v[p]) for p in pivots]
        back = [sum(ci * b[k] for ci, b in zip(c, self.basis)) for k in range(self.n)]
        if any(x != rat(y) for x, y in zip(back, v)):
            raise ValueError("vector not in subspace")
        return c

    def to_json(self) -> list[list[str]]:
        return [[rat_str(x) for x in b] for b in self.basis]


# ---------------------------------------------------------------------------
# ternary forms


def monomials(d: int) -> list[tuple[int, int, int]]:
    """Exponent triples of degree d, lexicographically descending (s^d first)."""
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


@dataclass(frozen=True)
class TernaryForm:
    deg: int
    coeffs: dict = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        clean = {}
        for e, c in self.coeffs.items():
            e = tuple(int(x) for x in e)
            if len(e) != 3 or sum(e) != self.deg or min(e) < 0:
                raise ValueError(f"exponent {e} invalid for degree {self.deg}")
            c = rat(c) if not _is_numeric_nonrational(c) else c
            if c != 0:
                clean[e] = c
        object.__setattr__(self, "coeffs", clean)

    def __eq__(self, other):
        return isinstance(other, TernaryForm) and self.deg == other.deg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.deg, tuple(sorted(self.coeffs.items()))))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, s, t, w):
        total = 0
        for (a, b, c), k in self.coeffs.items():
            total = total + k * s ** a * t ** b * w ** c
        return total

    def partial(self, var: int) -> "TernaryForm":
        out = {}
        for e, k in self.coeffs.items():
            if e[var] == 0:
                continue
            e2 = list(e)
            e2[var] -= 1
            out[tuple(e2)] = out.get(tuple(e2), 0) + k * e[var]
        return TernaryForm(self.deg - 1, out)

    def gradient(self) -> tuple["TernaryForm", "TernaryForm", "TernaryForm"]:
        return self.partial(0), self.partial(1), self.partial(2)

    def __add__(self, other: "TernaryForm") -> "TernaryForm":
        if self.deg != other.deg:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for e, k in other.coeffs.items():
            out[e] = out.get(e, 0) + k
        return TernaryForm(self.deg, out)

    def __mul__(self, other: "TernaryForm") -> "TernaryForm":
        out: dict = {}
        for e1, k1 in self.coeffs.items():
            for e2, k2 in other.coeffs.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + k1 * k2
        return TernaryForm(self.deg + other.deg, out)

    def scale(self, k) -> "TernaryForm":
        return TernaryForm(self.deg, {e: k * c for e, c in self.coeffs.items()})

    def substitute(self, lin: Sequence[Sequence]) -> "TernaryForm":
        """Compose with the linear substitution (s,t,w) -> rows of `lin` applied to (s,t,w)."""
        lin_forms = [TernaryForm(1, {(1, 0, 0): r[0], (0, 1, 0): r[1], (0, 0, 1): r[2]}) for r in lin]
        result = TernaryForm(self.deg, {})
        for (a, b, c), k in self.coeffs.items():
            term = TernaryForm(0, {(0, 0, 0): k})
            for f, p in zip(lin_forms, (a, b, c)):
                for _ in range(p):
                    term = term * f
            result = result + term
        return result

    def matrix(self):
        """Symmetric Gram matrix of a quadratic form."""
        if self.deg != 2:
            raise ValueError("matrix() only defined for conics")
        m = [[Fraction(0)] * 3 for _ in range(3)]
        for e, k in self.coeffs.items():
            idx = [i for i in range(3) for _ in range(e[i])]
            i, j = idx
            if i == j:
                m[i][i] += k
            else:
                m[i][j] += k / 2
                m[j][i] += k / 2
        return m

    @classmethod
    def from_matrix(cls, m) -> "TernaryForm":
        out = {}
        for i in range(3):
            for j in range(i, 3):
                e = [0, 0, 0]
                e[i] += 1
                e[j] += 1
                out[tuple(e)] = m[i][j] if i == j else 2 * m[i][j]
        return cls(2, out)

    def to_json(self) -> dict:
        return {"deg": self.deg,
                "coeffs": {f"{a},{b},{c}": rat_str(k)
                           for (a, b, c), k in sorted(self.coeffs.items(), reverse=True)}}

    @classmethod
    def from_json(cls, data: dict) -> "TernaryForm":
        return cls(int(data["deg"]),
                   {tuple(int(x) for x in key.split(",")): rat(v) for key, v in data["coeffs"].items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, k in sorted(self.coeffs.items(), reverse=True):
            mono = "".join(v + (f"^{p}" if p > 1 else "") for v, p in zip("stw", e) if p)
            parts.append(f"{k}*{mono}" if mono else f"{k}")
        return " + ".join(parts)


def _is_numeric_nonrational(c) -> bool:
    return not isinstance(c, (int, Fraction))


class InterpolationError(ValueError):
    """The evaluator does not agree with any homogeneous form of the requested degree."""


def interpolation_nodes(d: int) -> list[tuple[int, int, int]]:
    """Unisolvent nodes: a degree-(d-1) grid on w=1 plus d+1 points on the line w=0."""
    nodes = [(i, j, 1) for i in range(d) for j in range(d - i)]
    nodes += [(i, 1, 0) for i in range(d)]
    nodes.append((1, 0, 0))
    return nodes


def verification_nodes(d: int) -> list[tuple[int, int, int]]:
    fresh = [(2 * d + 3, -5, 7), (-3, 4, 11), (5, 9, -2), (13, -7, 3), (1, 1, 1), (-2, 3, 1)]
    fresh += [(i + 1, -(2 * i + 3), 2) for i in range(d + 1)]
    return fresh


def interpolate_ternary_form(d: int, evaluator: Callable[[int, int, int], object]) -> TernaryForm:
    """Recover a degree-d ternary form from a black-box evaluator, exactly.

    An identically zero evaluator returns the zero form (``form.is_zero``).
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    mons = monomials(d)
    nodes = interpolation_nodes(d)
    assert len(nodes) == len(mons)
    a = [[Fraction(s) ** m[0] * Fraction(t) ** m[1] * Fraction(w) ** m[2] for m in mons]
         for s, t, w in nodes]
    b = [rat(evaluator(*p)) for p in nodes]
    coeffs = solve(a, b)
    form = TernaryForm(d, dict(zip(mons, coeffs)))
    for p in verification_nodes(d):
        got = rat(evaluator(*p))
        if form(*(Fraction(x) for x in p)) != got:
            raise InterpolationError(f"evaluator is not a degree-{d} form (mismatch at {p})")
    return form
