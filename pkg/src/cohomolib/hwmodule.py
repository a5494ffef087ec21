"""Explicit irreducible highest-weight modules and character arithmetic.

Modules are built by spanning with lowering operators from the highest
vector inside the Verma module and quotienting out the radical of the
contravariant form, weight space by weight space.  Everything is exact;
multiplicities are cross-checked against Freudenthal's recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chevalley import ChevalleyBasis, chevalley_basis
from .config import Config, DEFAULT, BudgetError, UserError
from .linalg import SpanBasis, SparseMatrix, rref, solve
from .rootdata import Root, RootSystem, Weight
from .weyl import WeylElement, enumerate_weyl


def weyl_dimension(system: RootSystem, lam: Weight) -> int:
    """dim V(lambda) by the Weyl dimension formula."""
    if not (lam.is_integral() and lam.is_dominant()):
        raise UserError(f"{lam} is not dominant integral")
    num = Fraction(1)
    den = Fraction(1)
    rho = system.rho
    for alpha in system.positive_roots:
        num *= system.pairing(lam + rho, alpha)
        den *= system.pairing(rho, alpha)
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


@dataclass
class FormalCharacter:
    """Multiset of weights with integer multiplicities."""

    mult: dict[Weight, int] = field(default_factory=dict)

    def dim(self) -> int:
        return sum(self.mult.values())

    def get(self, w: Weight) -> int:
        return self.mult.get(w, 0)

    def support(self):
        return self.mult.keys()

    def add(self, w: Weight, m: int = 1) -> None:
        v = self.mult.get(w, 0) + m
        if v:
            self.mult[w] = v
        else:
            self.mult.pop(w, None)

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = FormalCharacter()
        for w1, m1 in self.mult.items():
            for w2, m2 in other.mult.items():
                out.add(w1 + w2, m1 * m2)
        return out

    def adams(self, k: int) -> "FormalCharacter":
        """Weights scaled by k, multiplicities unchanged."""
        return FormalCharacter({w * k: m for w, m in self.mult.items()})

    def copy(self) -> "FormalCharacter":
        return FormalCharacter(dict(self.mult))

    def to_json(self) -> dict[str, int]:
        return {",".join(str(c) for c in w.coords): m
                for w, m in sorted(self.mult.items(), key=lambda p: p[0].coords)}


_freudenthal_cache: dict[tuple[int, tuple], FormalCharacter] = {}


def freudenthal_character(system: RootSystem, lam: Weight,
                          config: Config = DEFAULT) -> FormalCharacter:
    """Weights and multiplicities of V(lambda) by Freudenthal's recursion."""
    dim = weyl_dimension(system, lam)
    if dim > config.max_dim:
        raise BudgetError(f"dim V({lam}) = {dim} exceeds max_dim = {config.max_dim}")
    key = (id(system), lam.coords)
    cached = _freudenthal_cache.get(key)
    if cached is not None:
        return cached.copy()

    rho = system.rho
    top_norm = system.inner(lam + rho, lam + rho)
    pos_weights = [system.root_to_weight(a) for a in system.positive_roots]
    mult: dict[Weight, int] = {lam: 1}
    level = [lam]
    while level:
        candidates = set()
        for mu in level:
            for i in range(system.rank):
                candidates.add(mu - system.root_to_weight(system.simple_root(i)))
        nxt = []
        for mu in sorted(candidates, key=lambda w: w.coords):
            denom = top_norm - system.inner(mu + rho, mu + rho)
            if denom <= 0:
                continue  # only lambda itself sits on the critical sphere
            total = Fraction(0)
            for aw in pos_weights:
                k = 1
                while True:
                    up = mu + aw * k
                    if any(c < 0 for c in system.to_root_coords(lam - up)):
                        break  # left the cone below lambda; no weights beyond
                    m_up = mult.get(up, 0)
                    if m_up:
                        total += m_up * system.inner(up, aw)
                    k += 1
            m = 2 * total / denom
            assert m.denominator == 1, "Freudenthal recursion produced a non-integer"
            m = int(m)
            if m > 0:
                mult[mu] = m
                nxt.append(mu)
        level = nxt
    char = FormalCharacter(mult)
    assert char.dim() == dim, "Freudenthal total mass disagrees with Weyl dimension"
    _freudenthal_cache[key] = char.copy()
    return char


def multiplicity_in_character(system: RootSystem, char: FormalCharacter,
                              lam: Weight, config: Config = DEFAULT) -> int:
    """Multiplicity of V(lambda) in a genuine character, by Weyl alternation.

    mult = sum over w of (-1)^l(w) * char(w . lambda); independent of the
    peeling route, so it doubles as an oracle for decompose_character.
    """
    total = 0
    for group in enumerate_weyl(system, config):
        for w in group:
            m = char.get(w.act_affine(lam))
            if m:
                total += m if w.length() % 2 == 0 else -m
    return total


def decompose_character(system: RootSystem, char: FormalCharacter,
                        config: Config = DEFAULT) -> list[tuple[Weight, int]]:
    """Greedy highest-weight peeling; errors if the input is not a character."""
    rest = char.copy()
    out: list[tuple[Weight, int]] = []
    while rest.mult:
        top = max(rest.mult, key=lambda w: (system.height(w), w.coords))
        m = rest.get(top)
        if m < 0 or not (top.is_dominant() and top.is_integral()):
            raise UserError("input is not the character of a finite-dimensional module")
        piece = freudenthal_character(system, top, config)
        for w, k in piece.mult.items():
            rest.add(w, -m * k)
        out.append((top, m))
    out.sort(key=lambda p: (system.height(p[0]), p[0].coords), reverse=True)
    return out


def trivial_multiplicity(system: RootSystem, char: FormalCharacter,
                         config: Config = DEFAULT) -> int:
    """Multiplicity of the trivial module V(0) in a genuine character."""
    return multiplicity_in_character(system, char, system.zero_weight(), config)


def tensor_decompose(system: RootSystem, lam1: Weight, lam2: Weight,
                     config: Config = DEFAULT) -> list[tuple[Weight, int]]:
    """Decomposition of V(lam1) (x) V(lam2) by peeling the product character."""
    d1 = weyl_dimension(system, lam1)
    d2 = weyl_dimension(system, lam2)
    if d1 > config.max_dim or d2 > config.max_dim:
        raise BudgetError(f"tensor factor dimensions {d1}, {d2} exceed max_dim")
    # peeling is character-level work, so constituents may exceed max_dim
    big = Config(max_dim=max(config.max_dim, d1 * d2), weyl_bound=config.weyl_bound,
                 height_bound=config.height_bound)
    prod = freudenthal_character(system, lam1, big) * freudenthal_character(system, lam2, big)
    parts = decompose_character(system, prod, big)
    assert sum(m * weyl_dimension(system, mu) for mu, m in parts) == d1 * d2, \
        "tensor decomposition does not conserve dimension"
    return parts


def symmetric_power_character(system: RootSystem, char: FormalCharacter,
                              k: int) -> FormalCharacter:
    """Character of S^k of a module with the given character.

    Newton's identity on Adams operations:
        k * s_k = sum_{j=1..k} psi_j * s_{k-j}.
    """
    if k < 0:
        raise UserError("negative symmetric power")
    sym: list[FormalCharacter] = [FormalCharacter({system.zero_weight(): 1})]
    adams = [None] + [char.adams(j) for j in range(1, k + 1)]
    for n in range(1, k + 1):
        acc: dict[Weight, Fraction] = {}
        for j in range(1, n + 1):
            for w1, m1 in adams[j].mult.items():
                for w2, m2 in sym[n - j].mult.items():
                    w = w1 + w2
                    acc[w] = acc.get(w, Fraction(0)) + m1 * m2
        out = FormalCharacter()
        for w, v in acc.items():
            q = v / n
            assert q.denominator == 1
            if q:
                out.add(w, int(q))
        sym.append(out)
    return sym[k]


# ---------------------------------------------------------------------------
# Explicit modules
# ---------------------------------------------------------------------------

@dataclass
class HWModule:
    """An irreducible module with exact matrices for the Chevalley generators.

    Basis vectors are grouped by weight; `weight_index[w]` is the (start, end)
    slice of the global basis, `gram[w]` the contravariant Gram matrix on it.
    """

    system: RootSystem
    highest: Weight
    basis_weights: list[Weight]
    weight_index: dict[Weight, tuple[int, int]]
    gen_e: list[SparseMatrix]
    gen_f: list[SparseMatrix]
    gen_h: list[SparseMatrix]
    gram: dict[Weight, list[list[Fraction]]]
    _matrix_cache: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis_weights)

    def weight_space(self, w: Weight) -> range:
        lo, hi = self.weight_index.get(w, (0, 0))
        return range(lo, hi)

    def character(self) -> FormalCharacter:
        ch = FormalCharacter()
        for w, (lo, hi) in self.weight_index.items():
            ch.add(w, hi - lo)
        return ch

    def highest_vector(self) -> dict[int, Fraction]:
        lo, hi = self.weight_index[self.highest]
        assert hi - lo == 1
        return {lo: Fraction(1)}

    def matrix_of_basis(self, key) -> SparseMatrix:
        """Action matrix of a Chevalley basis element ("x", root) or ("h", i)."""
        cached = self._matrix_cache.get(key)
        if cached is not None:
            return cached
        cb = chevalley_basis(self.system)
        kind, payload = key
        if kind == "h":
            mat = self.gen_h[payload]
        else:
            root = payload
            pos = all(x >= 0 for x in root)
            base = root if pos else tuple(-x for x in root)
            if sum(base) == 1:
                i = base.index(1)
                mat = self.gen_e[i] if pos else self.gen_f[i]
            else:
                xi, eta = cb.extraspecial_pair(base)
                n = cb.structure_constant(xi, eta)
                if pos:
                    a = self.matrix_of_basis(("x", xi))
                    b = self.matrix_of_basis(("x", eta))
                    mat = a.commutator(b).scaled(1 / n)
                else:
                    a = self.matrix_of_basis(("x", tuple(-x for x in xi)))
                    b = self.matrix_of_basis(("x", tuple(-x for x in eta)))
                    mat = a.commutator(b).scaled(-1 / n)
        self._matrix_cache[key] = mat
        return mat

    def matrix_of(self, element: dict) -> SparseMatrix:
        """Action matrix of an algebra element {basis key: coefficient}."""
        out = SparseMatrix.zero(self.dim, self.dim)
        for key, c in element.items():
            if c:
                out = out.add_scaled(self.matrix_of_basis(key), c)
        return out


def construct_module(system: RootSystem, lam: Weight,
                     config: Config = DEFAULT) -> HWModule:
    """Build V(lambda) explicitly; all bracket identities hold exactly."""
    target = freudenthal_character(system, lam, config)  # gates the budget too
    rank = system.rank
    simple_weights = [system.root_to_weight(system.simple_root(i)) for i in range(rank)]

    by_depth: dict[int, list[Weight]] = {}
    for w in target.support():
        d = int(system.height(lam - w))
        by_depth.setdefault(d, []).append(w)
    depths = sorted(by_depth)
    for d in depths:
        by_depth[d].sort(key=lambda w: w.coords)

    # per-weight data filled during the sweep
    basis_labels: dict[Weight, list[tuple[int, int]]] = {}   # (i, parent index)
    gram: dict[Weight, list[list[Fraction]]] = {}
    f_act: dict[tuple[Weight, int], list[list[Fraction]]] = {}  # (source weight, i)
    e_act: dict[tuple[Weight, int], list[list[Fraction]]] = {}  # (source weight, i)

    basis_labels[lam] = [(-1, -1)]
    gram[lam] = [[Fraction(1)]]
    for i in range(rank):
        e_act[(lam, i)] = [[]]  # highest vector is killed by every raising operator

    def pairing_cache(w: Weight, i: int) -> Fraction:
        return w.coords[i]

    for d in depths:
        if d == 0:
            continue
        for mu in by_depth[d]:
            span: list[tuple[int, int]] = []
            for i in range(rank):
                parent = mu + simple_weights[i]
                for k in range(len(basis_labels.get(parent, []))):
                    span.append((i, k))
            tdim = target.get(mu)
            n = len(span)
            G = [[Fraction(0)] * n for _ in range(n)]
            for a, (i, k) in enumerate(span):
                pa = mu + simple_weights[i]
                for b, (j, m) in enumerate(span):
                    if b < a:
                        G[a][b] = G[b][a]
                        continue
                    pb = mu + simple_weights[j]
                    # <f_i b_k, f_j b_m> = <e_j b_k, e_i b_m> + [i==j] <mu+a_i, a_i^vee> <b_k, b_m>
                    up = pa + simple_weights[j]
                    val = Fraction(0)
                    if up in gram:
                        x = e_act[(pa, j)][k]
                        y = e_act[(pb, i)][m]
                        g = gram[up]
                        for r, xr in enumerate(x):
                            if xr:
                                val += xr * sum(g[r][s] * y[s] for s in range(len(y)) if y[s])
                    if i == j:
                        val += pairing_cache(pa, i) * gram[pa][k][m]
                    G[a][b] = val
            _, pivots = rref(G)
            assert len(pivots) == tdim, \
                f"contravariant rank {len(pivots)} disagrees with multiplicity {tdim} at {mu}"
            sel = pivots
            basis_labels[mu] = [span[p] for p in sel]
            gram[mu] = [[G[p][q] for q in sel] for p in sel]
            gsel = gram[mu]
            # f-action from every parent basis vector into the new basis
            for i in range(rank):
                parent = mu + simple_weights[i]
                if parent not in basis_labels:
                    continue
                cols = []
                for k in range(len(basis_labels[parent])):
                    c = span.index((i, k))
                    rhs = [G[c][p] for p in sel]
                    cols.append(solve(gsel, rhs) if tdim else [])
                f_act[(mu, i)] = cols
            # e-action on the new basis vectors
            for i in range(rank):
                up_w = mu + simple_weights[i]
                updim = len(basis_labels.get(up_w, []))
                cols = []
                for (j, k) in basis_labels[mu]:
                    pa = mu + simple_weights[j]
                    vec = [Fraction(0)] * updim
                    if up_w in basis_labels:
                        two_up = pa + simple_weights[i]
                        if two_up in basis_labels:
                            ek = e_act[(pa, i)][k]
                            fj = f_act.get((up_w, j))
                            if fj is not None:
                                for r, c in enumerate(ek):
                                    if c:
                                        col = fj[r]
                                        for s, x in enumerate(col):
                                            vec[s] += c * x
                        if i == j:
                            vec[k] += pairing_cache(pa, i)  # pa == up_w here
                    cols.append(vec)
                e_act[(mu, i)] = cols

    # global ordering: by (depth, lex), matching the sweep
    ordered_weights: list[Weight] = []
    for d in depths:
        ordered_weights.extend(by_depth[d])
    weight_index: dict[Weight, tuple[int, int]] = {}
    basis_weights: list[Weight] = []
    pos = 0
    for w in ordered_weights:
        k = len(basis_labels[w])
        weight_index[w] = (pos, pos + k)
        basis_weights.extend([w] * k)
        pos += k
    dim = pos

    gen_e = [SparseMatrix.zero(dim, dim) for _ in range(rank)]
    gen_f = [SparseMatrix.zero(dim, dim) for _ in range(rank)]
    gen_h = [SparseMatrix.zero(dim, dim) for _ in range(rank)]
    for w in ordered_weights:
        lo, hi = weight_index[w]
        for i in range(rank):
            for k in range(hi - lo):
                gen_h[i].set(lo + k, lo + k, w.coords[i])
            up_w = w + simple_weights[i]
            if up_w in weight_index:
                ulo, _ = weight_index[up_w]
                cols = e_act[(w, i)]
                for k in range(hi - lo):
                    for r, c in enumerate(cols[k]):
                        if c:
                            gen_e[i].set(ulo + r, lo + k, c)
            down_w = w - simple_weights[i]
            if down_w in weight_index:
                dlo, _ = weight_index[down_w]
                cols = f_act.get((down_w, i))
                if cols is not None:
                    for k in range(hi - lo):
                        for r, c in enumerate(cols[k]):
                            if c:
                                gen_f[i].set(dlo + r, lo + k, c)

    mod = HWModule(system, lam, basis_weights, weight_index,
                   gen_e, gen_f, gen_h, gram)
    _verify_module(mod)
    return mod


def _verify_module(mod: HWModule) -> None:
    sys_ = mod.system
    rank = sys_.rank
    for i in range(rank):
        for j in range(rank):
            comm = mod.gen_e[i].commutator(mod.gen_f[j])
            expect = mod.gen_h[i] if i == j else SparseMatrix.zero(mod.dim, mod.dim)
            assert comm == expect, "[e_i, f_j] != delta_ij h_i"
            he = mod.gen_h[i].commutator(mod.gen_e[j])
            assert he == mod.gen_e[j].scaled(Fraction(sys_.cartan[i][j])), "[h_i, e_j] failed"
            hf = mod.gen_h[i].commutator(mod.gen_f[j])
            assert hf == mod.gen_f[j].scaled(Fraction(-sys_.cartan[i][j])), "[h_i, f_j] failed"
    hv = mod.highest_vector()
    for i in range(rank):
        assert not mod.gen_e[i].matvec(hv), "highest vector not singular"


def generated_submodule(space_weights: list[Weight], v: dict[int, Fraction],
                        generators: list[SparseMatrix]) -> tuple[list[dict], FormalCharacter]:
    """Smallest generator-invariant subspace containing v, with its character.

    `space_weights[i]` is the weight attached to basis index i (callers push
    ambient weights through an embedding's restriction when branching).  The
    generators must shift these weights homogeneously, which holds for all
    weight-vector generators used here.
    """
    if not v:
        raise UserError("generated_submodule needs a nonzero vector")
    spans: dict[tuple, SpanBasis] = {}

    def weight_key(vec: dict) -> tuple:
        ws = {space_weights[i].coords for i in vec}
        assert len(ws) == 1, "generator image is not weight-homogeneous"
        return next(iter(ws))

    frontier = [dict(v)]
    spans.setdefault(weight_key(v), SpanBasis()).add(v)
    while frontier:
        nxt = []
        for vec in frontier:
            for g in generators:
                img = g.matvec(vec)
                if not img:
                    continue
                if spans.setdefault(weight_key(img), SpanBasis()).add(img):
                    nxt.append(img)
        frontier = nxt
    char = FormalCharacter()
    basis = []
    for key in sorted(spans):
        sp = spans[key]
        if len(sp):
            char.add(Weight(key), len(sp))
            basis.extend(sp.vectors())
    return basis, char
