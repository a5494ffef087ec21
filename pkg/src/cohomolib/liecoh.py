"""Cohomology of the nilradical with module coefficients.

Two independent routes: the closed-form weight-by-weight description in terms
of Weyl group elements of a given length, and a brute-force cochain complex
over exact rationals.  The test suite requires them to agree in dimension and
weight multiset for every degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .chevalley import chevalley_basis
from .config import Config, DEFAULT, BudgetError, UserError
from .hwmodule import HWModule, construct_module
from .linalg import rank as mat_rank
from .rootdata import Root, RootSystem, Weight
from .weyl import WeylElement, enumerate_weyl


@dataclass(frozen=True)
class CohomologyEntry:
    weight: Weight
    dim: int
    w: WeylElement | None = None            # harmonic label, when available
    cocycle_roots: frozenset | None = None  # inversion set of w^{-1}

    def to_json(self):
        out = {"weight": self.weight.to_json(), "dim": self.dim}
        if self.w is not None:
            out["w_word"] = self.w.word_1based()
        return out


@dataclass
class CohomologySlice:
    q: int
    entries: list[CohomologyEntry]

    def total_dim(self) -> int:
        return sum(e.dim for e in self.entries)

    def weight_multiset(self) -> dict[tuple, int]:
        out: dict[tuple, int] = {}
        for e in self.entries:
            out[e.weight.coords] = out.get(e.weight.coords, 0) + e.dim
        return out

    def to_json(self):
        return {"q": self.q, "entries": [e.to_json() for e in self.entries]}


def kostant_cohomology(system: RootSystem, mu: Weight, q: int,
                       config: Config = DEFAULT) -> CohomologySlice:
    """H^q(n, V(mu)): one line per Weyl element of length q, at weight w.mu."""
    if not (mu.is_dominant() and mu.is_integral()):
        raise UserError(f"{mu} is not dominant integral")
    groups = enumerate_weyl(system, config, max_length=q)
    entries = []
    if q < len(groups):
        for w in groups[q]:
            entries.append(CohomologyEntry(
                weight=w.act_affine(mu), dim=1, w=w,
                cocycle_roots=w.inverse().inversion_set()))
    entries.sort(key=lambda e: e.weight.coords)
    return CohomologySlice(q, entries)


def trivial_coeff_cohomology(system: RootSystem, q: int,
                             config: Config = DEFAULT) -> CohomologySlice:
    """H^q(n) with trivial coefficients; the mu = 0 slice of the above."""
    return kostant_cohomology(system, system.zero_weight(), q, config)


# ---------------------------------------------------------------------------
# Brute-force cochain complex
# ---------------------------------------------------------------------------

def _cochain_basis(system: RootSystem, module: HWModule, q: int):
    """Basis (Phi, v-index) of Hom(Lambda^q n, V) with attached weights."""
    pos = system.positive_roots
    basis = []
    for phi in combinations(range(len(pos)), q):
        phi_weight = system.sum_of(pos[i] for i in phi)
        for v in range(module.dim):
            basis.append((phi, v, module.basis_weights[v] - phi_weight))
    return basis


def _differential(system: RootSystem, module: HWModule, q: int,
                  basis_q, basis_q1) -> dict[tuple[int, int], Fraction]:
    """Matrix of d: C^q -> C^{q+1} as {(row, col): value}."""
    cb = chevalley_basis(system)
    pos = system.positive_roots
    npos = len(pos)
    index_q1 = {(phi, v): k for k, (phi, v, _) in enumerate(basis_q1)}
    action = {i: module.matrix_of_basis(("x", pos[i])) for i in range(npos)}

    entries: dict[tuple[int, int], Fraction] = {}

    def put(row, col, val):
        if val:
            acc = entries.get((row, col), Fraction(0)) + val
            if acc:
                entries[(row, col)] = acc
            else:
                entries.pop((row, col), None)

    for col, (phi, v, _) in enumerate(basis_q):
        phi_set = set(phi)
        # module-action terms: insert one extra root alpha
        for a in range(npos):
            if a in phi_set:
                continue
            psi = tuple(sorted(phi_set | {a}))
            i = psi.index(a)  # 0-based position of alpha in psi
            sign = Fraction(-1) ** i  # (-1)^{(i+1)+1}
            img = action[a].col[v]
            for vr, c in img.items():
                put(index_q1[(psi, vr)], col, sign * c)
        # bracket terms: replace gamma in phi by a pair (a, b) with a + b = gamma
        for g_pos, g in enumerate(phi):
            gamma = pos[g]
            rest = [x for x in phi if x != g]
            rest_set = set(rest)
            for a in range(npos):
                for b in range(a + 1, npos):
                    if a in rest_set or b in rest_set:
                        continue
                    if tuple(p + r for p, r in zip(pos[a], pos[b])) != gamma:
                        continue
                    n_ab = cb.structure_constant(pos[a], pos[b])
                    psi = tuple(sorted(rest + [a, b]))
                    i = psi.index(a) + 1
                    j = psi.index(b) + 1
                    smaller = sum(1 for x in rest if x < g)
                    sign = Fraction(-1) ** (i + j + smaller)
                    put(index_q1[(psi, v)], col, sign * n_ab)
    return entries


def chevalley_eilenberg_cohomology(system: RootSystem, mu: Weight, q: int,
                                   config: Config = DEFAULT,
                                   module: HWModule | None = None) -> CohomologySlice:
    """H^q(n, V(mu)) from exact kernel/image ranks, weight block by block."""
    if module is None:
        module = construct_module(system, mu, config)
    npos = len(system.positive_roots)
    from math import comb
    if module.dim * comb(npos, max(q, 1)) > 200 * config.max_dim:
        raise BudgetError("cochain complex exceeds budget")

    basis_prev = _cochain_basis(system, module, q - 1) if q > 0 else []
    basis_q = _cochain_basis(system, module, q)
    basis_next = _cochain_basis(system, module, q + 1) if q < npos else []

    d_in = _differential(system, module, q - 1, basis_prev, basis_q) if q > 0 else {}
    d_out = _differential(system, module, q, basis_q, basis_next) if q < npos else {}

    by_weight: dict[tuple, list[int]] = {}
    for k, (_, _, w) in enumerate(basis_q):
        by_weight.setdefault(w.coords, []).append(k)

    in_cols: dict[int, dict[int, Fraction]] = {}
    for (r, c), val in d_in.items():
        in_cols.setdefault(c, {})[r] = val
    out_cols: dict[int, dict[int, Fraction]] = {}
    for (r, c), val in d_out.items():
        out_cols.setdefault(c, {})[r] = val

    prev_weight_cols: dict[tuple, list[int]] = {}
    for k, (_, _, w) in enumerate(basis_prev):
        prev_weight_cols.setdefault(w.coords, []).append(k)

    entries = []
    for wt, idxs in sorted(by_weight.items()):
        local = {g: n for n, g in enumerate(idxs)}
        # rank of d_out restricted to this weight block
        rows_out = sorted({r for c in idxs for r in out_cols.get(c, {})})
        rmap = {r: n for n, r in enumerate(rows_out)}
        mat_out = [[Fraction(0)] * len(idxs) for _ in rows_out]
        for c in idxs:
            for r, val in out_cols.get(c, {}).items():
                mat_out[rmap[r]][local[c]] = val
        rank_out = mat_rank(mat_out) if rows_out else 0
        # rank of d_in landing in this weight block
        prev_idxs = prev_weight_cols.get(wt, [])
        mat_in = [[Fraction(0)] * len(prev_idxs) for _ in idxs]
        for n, c in enumerate(prev_idxs):
            for r, val in in_cols.get(c, {}).items():
                mat_in[local[r]][n] = val
        rank_in = mat_rank(mat_in) if prev_idxs else 0
        h = len(idxs) - rank_out - rank_in
        assert h >= 0
        if h:
            entries.append(CohomologyEntry(weight=Weight(wt), dim=h))
    return CohomologySlice(q, entries)
