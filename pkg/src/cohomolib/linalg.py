"""Exact linear algebra over the rationals (or any exact field).

Vectors are dicts {index: scalar}; dense matrices are lists of lists.  All
routines are field-agnostic: they only use +, -, *, / and truthiness, so
Fraction and QuadExt entries both work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def vec_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out

def vec_scale(u: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in u.items()}

def vec_sub_scaled(u: dict, v: dict, c) -> dict:
    """u - c*v, dropping zeros."""
    if not c:
        return dict(u)
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) - c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


@dataclass
class SparseMatrix:
    """Column-major sparse matrix with exact entries."""

    rows: int
    cols: int
    col: list = field(default_factory=list)  # list of dicts {row: scalar}

    @staticmethod
    def zero(rows: int, cols: int) -> "SparseMatrix":
        return SparseMatrix(rows, cols, [dict() for _ in range(cols)])

    def set(self, i: int, j: int, x) -> None:
        if x:
            self.col[j][i] = x
        else:
            self.col[j].pop(i, None)

    def get(self, i: int, j: int):
        return self.col[j].get(i, Fraction(0))

    def matvec(self, v: dict) -> dict:
        out: dict = {}
        for j, c in v.items():
            if not c:
                continue
            for i, x in self.col[j].items():
                y = out.get(i, 0) + c * x
                if y:
                    out[i] = y
                else:
                    out.pop(i, None)
        return out

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return SparseMatrix(self.rows, other.cols,
                            [self.matvec(c) for c in other.col])

    def add_scaled(self, other: "SparseMatrix", c) -> "SparseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        cols = [vec_add(a, vec_scale(b, c)) for a, b in zip(self.col, other.col)]
        return SparseMatrix(self.rows, self.cols, cols)

    def scaled(self, c) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, [vec_scale(col, c) for col in self.col])

    def commutator(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.matmul(other).add_scaled(other.matmul(self), -1)

    def is_zero(self) -> bool:
        return all(not c for c in self.col)

    def entries(self):
        for j, c in enumerate(self.col):
            for i, x in c.items():
                yield i, j, x

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(a == b for a, b in zip(self.col, other.col))


class SpanBasis:
    """Row span maintained in reduced echelon form, over dict-vectors."""

    def __init__(self):
        self.pivots: dict = {}   # pivot index -> normalized vector

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        for p in sorted(set(v) & set(self.pivots)):
            c = v.get(p)
            if c:
                v = vec_sub_scaled(v, self.pivots[p], c)
        return v

    def add(self, v: dict) -> bool:
        """Insert v if independent; return whether the span grew."""
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p]
        v = vec_scale(v, inv)
        for q, w in self.pivots.items():
            c = w.get(p)
            if c:
                self.pivots[q] = vec_sub_scaled(w, v, c)
        self.pivots[p] = v
        return True

    def __len__(self):
        return len(self.pivots)

    def vectors(self):
        return [self.pivots[p] for p in sorted(self.pivots)]


def rref(mat: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a dense matrix; returns (rref, pivot columns)."""
    m = [list(row) for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(mat: list[list]) -> int:
    return len(rref(mat)[1])


def nullspace(mat: list[list], ncols: int) -> list[list]:
    """Basis of the right kernel of a dense matrix with ncols columns."""
    if not mat:
        return [[Fraction(1) if j == i else Fraction(0) for j in range(ncols)]
                for i in range(ncols)]
    red, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def det(mat: list[list]):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    m = [list(row) for row in mat]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return 0 * m[0][0] if m else Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        piv = m[c][c]
        result = result * piv
        inv = 1 / piv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result * sign


def solve(mat: list[list], rhs: list) -> list:
    """Solve a square nonsingular system exactly."""
    n = len(mat)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def invert(mat: list[list]) -> list[list]:
    """Exact inverse of a square matrix."""
    n = len(mat)
    aug = [list(row) + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
           for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]
