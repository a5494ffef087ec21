"""Exact root-system arithmetic for semisimple complex Lie algebras.

Conventions used throughout the package:

* Roots are stored in simple-root coordinates as integer tuples.
* Weights are stored in fundamental-weight coordinates as exact rationals;
  coordinate i of a weight lambda is the pairing <lambda, alpha_i^vee>.
* The Cartan matrix entry a[i][j] equals <alpha_j, alpha_i^vee>, so the
  fundamental coordinates of a root are obtained by applying the Cartan
  matrix to its simple-root coordinates.
* The invariant bilinear form on the span of the roots is the symmetrized
  Cartan matrix, normalized so long roots of each simple factor have
  squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .config import UserError
from .linalg import invert

Root = tuple[int, ...]

# (minimal rank, maximal rank or None for unbounded)
_SERIES = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (4, None),
           "E": (6, 8), "F": (4, 4), "G": (2, 2)}

# number of positive roots per simple factor, from the classification
_POSITIVE_COUNT = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


@dataclass(frozen=True)
class CartanType:
    """A product of simple series, e.g. A2 or A1xA1."""

    factors: tuple[tuple[str, int], ...]

    @property
    def total_rank(self) -> int:
        return sum(r for _, r in self.factors)

    @staticmethod
    def parse(text: str, allow_c2: bool = False) -> "CartanType":
        factors = []
        for part in text.strip().split("x"):
            m = re.fullmatch(r"([A-Ga-g])(\d+)", part.strip())
            if not m:
                raise UserError(f"malformed Cartan type {part!r}")
            series, rank = m.group(1).upper(), int(m.group(2))
            lo, hi = _SERIES.get(series, (None, None))
            if lo is None:
                raise UserError(f"unknown series {series!r}")
            min_rank = lo
            if series == "C" and not allow_c2:
                min_rank = 3
            if rank < min_rank or (hi is not None and rank > hi):
                raise UserError(f"rank {rank} is not admissible for series {series}")
            factors.append((series, rank))
        if not factors:
            raise UserError("empty Cartan type")
        return CartanType(tuple(factors))

    def __str__(self):
        return "x".join(f"{s}{r}" for s, r in self.factors)


@dataclass(frozen=True)
class Weight:
    """A point of h* in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def of(*coords) -> "Weight":
        return Weight(tuple(Fraction(c) for c in coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k) -> "Weight":
        k = Fraction(k)
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __repr__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @staticmethod
    def from_json(data: Sequence[str]) -> "Weight":
        try:
            return Weight(tuple(Fraction(s) for s in data))
        except (ValueError, ZeroDivisionError) as exc:
            raise UserError(f"malformed weight {data!r}") from exc


def _cartan_block(series: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(upto):
        for i in range(upto):
            a[i][i + 1] = -1
            a[i + 1][i] = -1

    if series == "A":
        chain(rank - 1)
    elif series == "B":
        # last simple root is short
        chain(rank - 2)
        a[rank - 2][rank - 1] = -1
        a[rank - 1][rank - 2] = -2
    elif series == "C":
        # last simple root is long
        chain(rank - 2)
        a[rank - 2][rank - 1] = -2
        a[rank - 1][rank - 2] = -1
    elif series == "D":
        chain(rank - 2)
        a[rank - 3][rank - 1] = -1
        a[rank - 1][rank - 3] = -1
    elif series == "E":
        chain(rank - 2)
        a[rank - 4][rank - 1] = -1
        a[rank - 1][rank - 4] = -1
    elif series == "F":
        a[0][1] = a[1][0] = -1
        a[1][2] = -1
        a[2][1] = -2
        a[2][3] = a[3][2] = -1
    elif series == "G":
        a[0][1] = -3
        a[1][0] = -1
    return a


class RootSystem:
    """Roots, invariant form and coordinate conversions for one Cartan type."""

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.total_rank
        self.cartan = self._assemble_cartan()
        self._cartan_frac = [[Fraction(x) for x in row] for row in self.cartan]
        self._cartan_inv = invert(self._cartan_frac)
        self.symmetrizer = self._symmetrizer()
        # form[i][j] = (alpha_i, alpha_j)
        self.form = [[self.symmetrizer[i] * self.cartan[i][j] for j in range(self.rank)]
                     for i in range(self.rank)]
        self.positive_roots = self._close_positive_roots()
        self._positive_set = set(self.positive_roots)
        self._root_set = self._positive_set | {tuple(-x for x in r) for r in self.positive_roots}
        expected = sum(_POSITIVE_COUNT[s](r) for s, r in cartan_type.factors)
        assert len(self.positive_roots) == expected, "positive-root count disagrees with the classification"
        self.rho = self.half_sum(self.positive_roots)
        assert all(c == 1 for c in self.rho.coords)
        # index ranges of the simple factors, for ideal identification
        self.factor_spans: list[tuple[int, int]] = []
        start = 0
        for _, r in cartan_type.factors:
            self.factor_spans.append((start, start + r))
            start += r

    # -- construction helpers -------------------------------------------------

    def _assemble_cartan(self) -> list[list[int]]:
        n = self.rank
        a = [[0] * n for _ in range(n)]
        start = 0
        for series, r in self.cartan_type.factors:
            block = _cartan_block(series, r)
            for i in range(r):
                for j in range(r):
                    a[start + i][start + j] = block[i][j]
            start += r
        return a

    def _symmetrizer(self) -> list[Fraction]:
        """d_i with d_i * a[i][j] symmetric and long roots of norm 2 (d = 1)."""
        n = self.rank
        d: list[Fraction | None] = [None] * n
        for i in range(n):
            if d[i] is not None:
                continue
            d[i] = Fraction(1)
            stack = [i]
            comp = [i]
            while stack:
                u = stack.pop()
                for v in range(n):
                    if v != u and self.cartan[u][v] != 0 and d[v] is None:
                        d[v] = d[u] * Fraction(self.cartan[u][v], self.cartan[v][u])
                        stack.append(v)
                        comp.append(v)
            top = max(d[v] for v in comp)
            for v in comp:
                d[v] = d[v] / top
        return d  # type: ignore[return-value]

    def _close_positive_roots(self) -> list[Root]:
        """All roots via the reflection orbit of the simple roots."""
        n = self.rank
        simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        roots = set(simples)
        frontier = set(simples)
        while frontier:
            new = set()
            for c in frontier:
                for i in range(n):
                    p = sum(self.cartan[i][j] * c[j] for j in range(n))
                    r = list(c)
                    r[i] -= p
                    r = tuple(r)
                    if r not in roots and any(r):
                        new.add(r)
            roots |= new
            frontier = new
        pos = [r for r in roots if all(x >= 0 for x in r)]
        pos.sort(key=lambda r: (sum(r), r))
        return pos

    # -- basic queries ---------------------------------------------------------

    def is_root(self, r: Root) -> bool:
        return tuple(r) in self._root_set

    def is_positive_root(self, r: Root) -> bool:
        return tuple(r) in self._positive_set

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def root_norm2(self, r: Root) -> Fraction:
        """(r, r) with respect to the invariant form."""
        return sum(self.form[i][j] * r[i] * r[j]
                   for i in range(self.rank) for j in range(self.rank) if r[i] and r[j])

    def root_inner(self, r: Root, s: Root) -> Fraction:
        return sum(self.form[i][j] * r[i] * s[j]
                   for i in range(self.rank) for j in range(self.rank) if r[i] and s[j])

    # -- coordinate conversions -------------------------------------------------

    def root_to_weight(self, r: Sequence) -> Weight:
        """Fundamental coordinates of a vector given in simple-root coordinates."""
        return Weight(tuple(sum(self._cartan_frac[i][j] * Fraction(r[j]) for j in range(self.rank))
                            for i in range(self.rank)))

    def to_root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        return tuple(sum(self._cartan_inv[i][j] * w.coords[j] for j in range(self.rank))
                     for i in range(self.rank))

    # -- pairings and sums -------------------------------------------------------

    def coroot_coeffs(self, alpha: Root) -> tuple[Fraction, ...]:
        """Coefficients of alpha^vee over the simple coroots."""
        if not self.is_root(alpha):
            raise UserError(f"{alpha} is not a root")
        d_alpha = self.root_norm2(alpha) / 2
        return tuple(Fraction(alpha[j]) * self.symmetrizer[j] / d_alpha
                     for j in range(self.rank))

    def pairing(self, w: Weight, alpha: Root) -> Fraction:
        """<w, alpha^vee> = 2 (w, alpha) / (alpha, alpha)."""
        coeffs = self.coroot_coeffs(alpha)
        return sum(c * x for c, x in zip(coeffs, w.coords))

    def inner(self, u: Weight, v: Weight) -> Fraction:
        """Invariant form on h*, evaluated on two weights."""
        ru = self.to_root_coords(u)
        rv = self.to_root_coords(v)
        return sum(self.form[i][j] * ru[i] * rv[j]
                   for i in range(self.rank) for j in range(self.rank))

    def fundamental_weight(self, j: int) -> Weight:
        return Weight(tuple(Fraction(1 if i == j else 0) for i in range(self.rank)))

    def zero_weight(self) -> Weight:
        return Weight(tuple(Fraction(0) for _ in range(self.rank)))

    def sum_of(self, roots: Iterable[Root]) -> Weight:
        total = [0] * self.rank
        for r in roots:
            for i, x in enumerate(r):
                total[i] += x
        return self.root_to_weight(total)

    def half_sum(self, roots: Iterable[Root]) -> Weight:
        return self.sum_of(roots) * Fraction(1, 2)

    def height(self, w: Weight) -> Fraction:
        """Sum of simple-root coordinates; integers on the root lattice."""
        return sum(self.to_root_coords(w))

    def factor_of_simple(self, i: int) -> int:
        for k, (lo, hi) in enumerate(self.factor_spans):
            if lo <= i < hi:
                return k
        raise UserError(f"simple-root index {i} out of range")

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"


@lru_cache(maxsize=None)
def _cached_system(text: str) -> RootSystem:
    return RootSystem(CartanType.parse(text))


def build_root_system(t: CartanType | str) -> RootSystem:
    """Construct (and cache) the root system of the given type."""
    if isinstance(t, str):
        return _cached_system(str(CartanType.parse(t)))
    return _cached_system(str(t))


def product_system(a: RootSystem, b: RootSystem) -> RootSystem:
    return build_root_system(f"{a.cartan_type}x{b.cartan_type}")
