"""Weyl group elements: lengths, inversion sets, linear and affine actions.

Elements are identified by their integer action matrix on simple-root
coordinates (column j holds w(alpha_j)); the canonical reduced word is the
lexicographically least one, recovered greedily from the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import Config, DEFAULT, BudgetError, UserError
from .linalg import invert
from .rootdata import Root, RootSystem, Weight

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _reflection_matrix(system: RootSystem, i: int) -> Matrix:
    # s_i(alpha_j) = alpha_j - a[i][j] alpha_i
    n = system.rank
    m = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for j in range(n):
        m[i][j] -= system.cartan[i][j]
    return tuple(tuple(row) for row in m)


class WeylElement:
    """A Weyl group element acting on simple-root coordinates."""

    __slots__ = ("system", "matrix", "_word", "_inverse")

    def __init__(self, system: RootSystem, matrix: Matrix):
        self.system = system
        self.matrix = matrix
        self._word: tuple[int, ...] | None = None
        self._inverse: "WeylElement | None" = None

    # -- group structure ---------------------------------------------------

    @staticmethod
    def identity(system: RootSystem) -> "WeylElement":
        return WeylElement(system, _identity(system.rank))

    @staticmethod
    def simple_reflection(system: RootSystem, i: int) -> "WeylElement":
        if not 0 <= i < system.rank:
            raise UserError(f"simple-reflection index {i} out of range")
        return WeylElement(system, _reflection_matrix(system, i))

    @staticmethod
    def from_word(system: RootSystem, word) -> "WeylElement":
        """Product s_{word[0]} s_{word[1]} ... (0-based indices)."""
        w = WeylElement.identity(system)
        for i in word:
            w = w * WeylElement.simple_reflection(system, i)
        return w

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.system is not other.system:
            raise UserError("rank mismatch: elements of different Weyl groups")
        return WeylElement(self.system, _matmul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        if self._inverse is None:
            inv = invert([[Fraction(x) for x in row] for row in self.matrix])
            m = tuple(tuple(int(x) for x in row) for row in inv)
            self._inverse = WeylElement(self.system, m)
            self._inverse._inverse = self
        return self._inverse

    def __eq__(self, other):
        return (isinstance(other, WeylElement)
                and self.system is other.system and self.matrix == other.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == _identity(self.system.rank)

    # -- actions --------------------------------------------------------------

    def act_root(self, r: Root) -> Root:
        n = self.system.rank
        return tuple(sum(self.matrix[i][j] * r[j] for j in range(n)) for i in range(n))

    def act_linear(self, w: Weight) -> Weight:
        if w.rank != self.system.rank:
            raise UserError("rank mismatch between weight and Weyl element")
        rc = self.system.to_root_coords(w)
        n = self.system.rank
        out = tuple(sum(self.matrix[i][j] * rc[j] for j in range(n)) for i in range(n))
        return self.system.root_to_weight(out)

    def act_affine(self, w: Weight) -> Weight:
        """Dot action w . lambda = w(lambda + rho) - rho."""
        rho = self.system.rho
        return self.act_linear(w + rho) - rho

    # -- words, lengths, inversions ---------------------------------------------

    def inversion_set(self) -> frozenset[Root]:
        return frozenset(a for a in self.system.positive_roots
                         if any(x < 0 for x in self.act_root(a)))

    @property
    def word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word, built greedily from the left."""
        if self._word is None:
            letters = []
            vinv = self.inverse()
            n = self.system.rank
            while True:
                i = next((i for i in range(n)
                          if any(x < 0 for x in vinv.act_root(self.system.simple_root(i)))),
                         None)
                if i is None:
                    break
                letters.append(i)
                vinv = vinv * WeylElement.simple_reflection(self.system, i)
            self._word = tuple(letters)
        return self._word

    def length(self) -> int:
        return len(self.word)

    def word_1based(self) -> list[int]:
        return [i + 1 for i in self.word]

    def __repr__(self):
        if self.is_identity():
            return "e"
        return "s" + ".s".join(str(i + 1) for i in self.word)


def act_linear(w: WeylElement, lam: Weight) -> Weight:
    return w.act_linear(lam)


def act_affine(w: WeylElement, lam: Weight) -> Weight:
    return w.act_affine(lam)


def inversion_set(w: WeylElement) -> frozenset[Root]:
    return w.inversion_set()


def from_inversion_set(system: RootSystem, phi) -> WeylElement | None:
    """The unique w with Phi_w = phi, or None when phi is not an inversion set."""
    phi = {tuple(r) for r in phi}
    if not all(system.is_positive_root(r) for r in phi):
        return None
    letters_rev = []
    current = phi
    while current:
        i = next((i for i in range(system.rank) if system.simple_root(i) in current), None)
        if i is None:
            return None
        s = WeylElement.simple_reflection(system, i)
        nxt = set()
        for r in current:
            if r == system.simple_root(i):
                continue
            img = s.act_root(r)
            if any(x < 0 for x in img):
                return None
            nxt.add(img)
        letters_rev.append(i)
        current = nxt
    w = WeylElement.from_word(system, reversed(letters_rev))
    if w.inversion_set() != frozenset(phi):
        return None
    return w


def enumerate_weyl(system: RootSystem, config: Config = DEFAULT,
                   max_length: int | None = None) -> list[list[WeylElement]]:
    """All elements grouped by length (optionally truncated at max_length)."""
    groups = _enumerate_cached(system, config.weyl_bound)
    if max_length is not None:
        return groups[:max_length + 1]
    return groups


_enum_cache: dict[tuple[int, int], list[list[WeylElement]]] = {}


def _enumerate_cached(system: RootSystem, bound: int) -> list[list[WeylElement]]:
    key = (id(system), bound)
    if key in _enum_cache:
        return _enum_cache[key]
    identity = WeylElement.identity(system)
    seen = {identity.matrix: identity}
    groups = [[identity]]
    frontier = [identity]
    total = 1
    reflections = [WeylElement.simple_reflection(system, i) for i in range(system.rank)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in reflections:
                v = w * s
                if v.matrix not in seen:
                    seen[v.matrix] = v
                    nxt.append(v)
                    total += 1
                    if total > bound:
                        raise BudgetError(f"Weyl group larger than bound {bound}")
        if nxt:
            groups.append(nxt)
        frontier = nxt
    _enum_cache[key] = groups
    return groups


def weyl_order(system: RootSystem, config: Config = DEFAULT) -> int:
    return sum(len(g) for g in enumerate_weyl(system, config))


def longest_element(system: RootSystem) -> WeylElement:
    w = from_inversion_set(system, system.positive_roots)
    assert w is not None
    return w


@dataclass(frozen=True)
class RegularizationResult:
    regular: bool
    w_lambda: WeylElement | None
    dominant: Weight | None
    length: int | None
    witness: Root | None = None  # positive root with vanishing pairing, when singular


def make_dominant(system: RootSystem, lam: Weight) -> RegularizationResult:
    """Regularize lambda under the dot action by the standard ascent loop."""
    if not lam.is_integral():
        raise UserError("make_dominant expects an integral weight")
    nu = lam + system.rho
    u = WeylElement.identity(system)
    steps = 0
    limit = len(system.positive_roots)
    while True:
        i = next((i for i, c in enumerate(nu.coords) if c < 0), None)
        if i is None:
            break
        s = WeylElement.simple_reflection(system, i)
        nu = s.act_linear(nu)
        u = s * u
        steps += 1
        assert steps <= limit, "ascent loop failed to terminate"
    zero = next((i for i, c in enumerate(nu.coords) if c == 0), None)
    if zero is not None:
        root = u.inverse().act_root(system.simple_root(zero))
        if any(x < 0 for x in root):
            root = tuple(-x for x in root)
        return RegularizationResult(False, None, None, None, witness=root)
    return RegularizationResult(True, u, nu - system.rho, u.length())
