"""Integer Chevalley basis: structure constants with extraspecial-pair signs.

Basis of the algebra: root vectors x_beta for every root beta, plus the
simple coroots h_i = alpha_i^vee.  Brackets:

    [h_i, h_j] = 0
    [h_i, x_b] = <b, alpha_i^vee> x_b
    [x_a, x_b] = N(a, b) x_{a+b}        when a+b is a root
    [x_a, x_{-a}] = a^vee               expanded over simple coroots

Signs are pinned by requiring N(xi, eta) = p + 1 > 0 on the extraspecial
pair (xi, eta) of each non-simple positive root, xi minimal in height-lex
order; every other constant follows from the Jacobi identity.  The recursion
keeps all constants exact; the test suite re-verifies Jacobi exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .config import UserError
from .rootdata import Root, RootSystem

BasisKey = tuple  # ("x", root) or ("h", simple index)


def _neg(r: Root) -> Root:
    return tuple(-x for x in r)


def _add(r: Root, s: Root) -> Root:
    return tuple(a + b for a, b in zip(r, s))


def _sub(r: Root, s: Root) -> Root:
    return tuple(a - b for a, b in zip(r, s))


def _is_positive(r: Root) -> bool:
    return all(x >= 0 for x in r) and any(x > 0 for x in r)


class ChevalleyBasis:
    """Structure constants for one root system, computed on demand."""

    def __init__(self, system: RootSystem):
        self.system = system
        self._order = {r: k for k, r in enumerate(system.positive_roots)}
        self._extraspecial: dict[Root, tuple[Root, Root]] = {}
        self._n_pos: dict[tuple[Root, Root], Fraction] = {}
        self._compute_positive_constants()

    # -- extraspecial pairs and base constants ----------------------------------

    def extraspecial_pair(self, gamma: Root) -> tuple[Root, Root]:
        """(xi, eta) with xi + eta = gamma and xi minimal in the root order."""
        pair = self._extraspecial.get(gamma)
        if pair is None:
            raise UserError(f"{gamma} is not a non-simple positive root")
        return pair

    def _string_down(self, alpha: Root, beta: Root) -> int:
        """Largest p with beta - p*alpha a root."""
        p = 0
        cur = _sub(beta, alpha)
        while self.system.is_root(cur):
            p += 1
            cur = _sub(cur, alpha)
        return p

    def _compute_positive_constants(self) -> None:
        sys = self.system
        for gamma in sys.positive_roots:
            if sum(gamma) == 1:
                continue
            pairs = []
            for alpha in sys.positive_roots:
                beta = _sub(gamma, alpha)
                if _is_positive(beta) and sys.is_positive_root(beta) \
                        and self._order[alpha] < self._order[beta]:
                    pairs.append((alpha, beta))
            pairs.sort(key=lambda ab: self._order[ab[0]])
            assert pairs, f"no positive decomposition for {gamma}"
            xi, eta = pairs[0]
            self._extraspecial[gamma] = (xi, eta)
            self._n_pos[(xi, eta)] = Fraction(self._string_down(xi, eta) + 1)
            for alpha, beta in pairs[1:]:
                self._n_pos[(alpha, beta)] = self._derive(alpha, beta, gamma, xi, eta)

    def _derive(self, alpha: Root, beta: Root, gamma: Root, xi: Root, eta: Root) -> Fraction:
        # Jacobi on (x_{-xi}, x_alpha, x_beta); both correction terms involve
        # pairs whose sum has smaller height, so _n_pos is already filled.
        sys = self.system
        n_gamma_negxi = self._mixed(gamma, xi)  # N(gamma, -xi), gamma - xi = eta
        assert n_gamma_negxi != 0
        total = Fraction(0)
        diff = _sub(alpha, xi)
        if sys.is_root(diff):
            # N(-xi, alpha) * N(alpha - xi, beta)
            total += (-self._mixed(alpha, xi)) * self._n_signed(diff, beta)
        diff = _sub(beta, xi)
        if sys.is_root(diff):
            # N(beta, -xi) * N(beta - xi, alpha)
            total += self._mixed(beta, xi) * self._n_signed(diff, alpha)
        return -total / n_gamma_negxi

    def _n_signed(self, a: Root, b: Root) -> Fraction:
        """N(a, b) for positive roots a, b with a + b a positive root."""
        key = (a, b)
        if key in self._n_pos:
            return self._n_pos[key]
        swapped = self._n_pos.get((b, a))
        if swapped is None:
            raise AssertionError(f"constant for {a}+{b} not yet available")
        return -swapped

    def _mixed(self, x: Root, y: Root) -> Fraction:
        """N(x, -y) for positive roots x != y with x - y a root."""
        sys = self.system
        z = _sub(x, y)
        if _is_positive(z):
            return -sys.root_norm2(z) / sys.root_norm2(x) * self._n_signed(y, z)
        zp = _neg(z)
        return sys.root_norm2(zp) / sys.root_norm2(y) * self._n_signed(zp, x)

    # -- public bracket --------------------------------------------------------

    def structure_constant(self, a: Root, b: Root) -> Fraction:
        """N(a, b) for roots a, b with a + b a root."""
        sys = self.system
        s = _add(a, b)
        if not sys.is_root(s):
            raise UserError(f"{a} + {b} is not a root")
        pa, pb = _is_positive(a), _is_positive(b)
        if pa and pb:
            return self._n_signed(a, b)
        if not pa and not pb:
            return -self.structure_constant(_neg(a), _neg(b))
        if pa:  # b negative
            return self._mixed_general(a, _neg(b))
        return -self._mixed_general(b, _neg(a))

    def _mixed_general(self, x: Root, y: Root) -> Fraction:
        return self._mixed(x, y)

    def coroot_terms(self, alpha: Root) -> dict[BasisKey, Fraction]:
        """alpha^vee over the simple coroots, as bracket [x_alpha, x_{-alpha}]."""
        coeffs = self.system.coroot_coeffs(alpha)
        return {("h", i): c for i, c in enumerate(coeffs) if c}

    def bracket_basis(self, u: BasisKey, v: BasisKey) -> dict[BasisKey, Fraction]:
        sys = self.system
        if u[0] == "h" and v[0] == "h":
            return {}
        if u[0] == "h":
            pair = sys.pairing(sys.root_to_weight(v[1]), sys.simple_root(u[1]))
            return {v: pair} if pair else {}
        if v[0] == "h":
            out = self.bracket_basis(v, u)
            return {k: -c for k, c in out.items()}
        a, b = u[1], v[1]
        if _add(a, b) == tuple(0 for _ in a):
            return self.coroot_terms(a)
        if sys.is_root(_add(a, b)):
            return {("x", _add(a, b)): self.structure_constant(a, b)}
        return {}

    def bracket(self, x: dict[BasisKey, Fraction], y: dict[BasisKey, Fraction]) -> dict[BasisKey, Fraction]:
        """Bracket of two elements given as {basis key: coefficient}."""
        out: dict[BasisKey, Fraction] = {}
        for ku, cu in x.items():
            if not cu:
                continue
            for kv, cv in y.items():
                if not cv:
                    continue
                for k, c in self.bracket_basis(ku, kv).items():
                    val = out.get(k, 0) + cu * cv * c
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out

    def weight_of(self, key: BasisKey):
        if key[0] == "h":
            return self.system.zero_weight()
        return self.system.root_to_weight(key[1])

    def basis_keys(self) -> list[BasisKey]:
        """Root vectors and simple coroots, positive roots first."""
        keys: list[BasisKey] = [("x", r) for r in self.system.positive_roots]
        keys += [("h", i) for i in range(self.system.rank)]
        keys += [("x", _neg(r)) for r in reversed(self.system.positive_roots)]
        return keys


_basis_cache: dict[int, ChevalleyBasis] = {}


def chevalley_basis(system: RootSystem) -> ChevalleyBasis:
    key = id(system)
    if key not in _basis_cache:
        _basis_cache[key] = ChevalleyBasis(system)
    return _basis_cache[key]
