"""Embeddings of semisimple Lie algebras with their flag-manifold data.

A descriptor carries the images of the small algebra's Chevalley generators
inside the big algebra (always validated against the Serre and bracket
relations), the induced restriction of weights, and the pullback machinery
on wedge powers of the nilradical that feeds the first nonvanishing
condition of the decision pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from .chevalley import chevalley_basis
from .config import Config, DEFAULT, UserError
from .hwmodule import construct_module, weyl_dimension
from .linalg import det, rref, solve
from .rootdata import CartanType, Root, RootSystem, Weight, build_root_system
from .weyl import WeylElement, from_inversion_set

AlgElem = dict  # {("x", root) | ("h", i): scalar}


def _neg(r: Root) -> Root:
    return tuple(-x for x in r)


def _scale_elem(e: AlgElem, c) -> AlgElem:
    return {k: c * v for k, v in e.items() if v}


def _add_elem(a: AlgElem, b: AlgElem) -> AlgElem:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


@dataclass
class EmbeddingDescriptor:
    variant: str
    small: RootSystem
    big: RootSystem
    image_e: list[AlgElem]
    image_f: list[AlgElem]
    image_h: list[AlgElem]
    # regular embeddings: small simple index -> ambient root
    subset_simple: list[Root] | None = None
    subset_positive: list[Root] | None = None
    # adjoint embeddings
    h1: tuple | None = None
    ordering: str | None = None
    unit_scale: dict[Root, int] = field(default_factory=dict)
    # composed embeddings, listed from the innermost map outwards
    stages: list["EmbeddingDescriptor"] | None = None
    _image_x: dict[Root, AlgElem] = field(default_factory=dict)
    _iota_star: list[list[Fraction]] | None = None

    # -- images -----------------------------------------------------------

    def image_of_basis(self, key) -> AlgElem:
        if key[0] == "h":
            return self.image_h[key[1]]
        return self.image_x(key[1])

    def image_x(self, beta: Root) -> AlgElem:
        """Image of the root vector x_beta, via the extraspecial recursion."""
        cached = self._image_x.get(beta)
        if cached is not None:
            return cached
        if self.variant == "composed":
            elem: AlgElem = {("x", beta): Fraction(1)}
            for stage in self.stages:
                elem = stage.image_of_element(elem)
            self._image_x[beta] = elem
            return elem
        cb = chevalley_basis(self.small)
        positive = all(x >= 0 for x in beta)
        base = beta if positive else _neg(beta)
        if not self.small.is_positive_root(base):
            raise UserError(f"{beta} is not a root of the small system")
        if sum(base) == 1:
            i = base.index(1)
            out = self.image_e[i] if positive else self.image_f[i]
        else:
            xi, eta = cb.extraspecial_pair(base)
            n = cb.structure_constant(xi, eta)
            bb = chevalley_basis(self.big)
            if positive:
                out = _scale_elem(bb.bracket(self.image_x(xi), self.image_x(eta)), 1 / n)
            else:
                out = _scale_elem(bb.bracket(self.image_x(_neg(xi)), self.image_x(_neg(eta))), -1 / n)
        self._image_x[beta] = out
        return out

    def image_of_element(self, elem: AlgElem) -> AlgElem:
        out: AlgElem = {}
        for key, c in elem.items():
            if c:
                out = _add_elem(out, _scale_elem(self.image_of_basis(key), c))
        return out

    # -- weight restriction --------------------------------------------------

    @property
    def iota_star(self) -> list[list[Fraction]]:
        """Matrix of the weight restriction in fundamental coordinates."""
        if self._iota_star is None:
            if self.variant == "composed":
                mats = [st.iota_star for st in self.stages]
                m = mats[-1]
                for prev in reversed(mats[:-1]):
                    m = [[sum(prev[i][k] * m[k][j] for k in range(len(m)))
                          for j in range(len(m[0]))] for i in range(len(prev))]
                self._iota_star = m
            else:
                rows = []
                for i in range(self.small.rank):
                    img = self.image_h[i]
                    assert all(k[0] == "h" for k in img), "Cartan image leaves the Cartan"
                    row = [Fraction(0)] * self.big.rank
                    for (_, j), c in img.items():
                        row[j] = Fraction(c)
                    rows.append(row)
                self._iota_star = rows
        return self._iota_star

    def restrict_weight(self, lam: Weight) -> Weight:
        if lam.rank != self.big.rank:
            raise UserError("rank mismatch: weight does not live on the big system")
        m = self.iota_star
        return Weight(tuple(sum(m[i][j] * lam.coords[j] for j in range(self.big.rank))
                            for i in range(self.small.rank)))

    # -- nilradical pullback ----------------------------------------------------

    def wedge_unit(self, root: Root):
        return self.unit_scale.get(root, 1)

    def positive_coefficient(self, elem: AlgElem, root: Root):
        """Coefficient of the big root vector at `root`, in paper units."""
        return elem.get(("x", root), Fraction(0)) * self.wedge_unit(root)

    def phi_o_matrix(self) -> list[list]:
        """Matrix of the nilradical map; rows over big, columns over small."""
        cols = []
        for beta in self.small.positive_roots:
            img = self.image_x(beta)
            bad = [k for k in img if k[0] == "h" or not all(x >= 0 for x in k[1])]
            assert not bad, "nilradical image has Cartan or negative components"
            cols.append([self.positive_coefficient(img, r) for r in self.big.positive_roots])
        return [[cols[j][i] for j in range(len(cols))]
                for i in range(len(self.big.positive_roots))]

    def wedge_pullback(self, phi_tilde) -> dict[frozenset, object]:
        """Pullback of the dual wedge basis vector at a set of big roots.

        Only weight-compatible subsets of the small positive roots can carry
        a nonzero coefficient, so the determinant is evaluated just there.
        """
        phi_tilde = sorted(phi_tilde, key=lambda r: (sum(r), r))
        for r in phi_tilde:
            if not self.big.is_positive_root(r):
                raise UserError(f"{r} is not a positive root of the big system")
        q = len(phi_tilde)
        target = self.restrict_weight(self.big.sum_of(phi_tilde))
        images = {r: self.image_x(r) for r in self.small.positive_roots}
        out: dict[frozenset, object] = {}
        for phi in combinations(self.small.positive_roots, q):
            if self.small.sum_of(phi) != target:
                continue
            mat = [[self.positive_coefficient(images[b], bt) for b in phi]
                   for bt in phi_tilde]
            d = det(mat) if q else Fraction(1)
            if d:
                out[frozenset(phi)] = d
        return out

    def condition_i(self, w_tilde: WeylElement):
        """(w, a) when the wedge pullback is a single inversion-set line."""
        wedge = self.wedge_pullback(w_tilde.inversion_set())
        if len(wedge) != 1:
            return None
        phi, a = next(iter(wedge.items()))
        w = from_inversion_set(self.small, phi)
        if w is None:
            return None
        return w, a

    # -- validation ----------------------------------------------------------

    def validate(self) -> None:
        """Check that the generator images satisfy the small Serre relations."""
        if self.variant == "composed":
            for a, b in zip(self.stages, self.stages[1:]):
                if a.big is not b.small:
                    raise UserError("composed stages do not chain")
            for stage in self.stages:
                stage.validate()
            return
        cb = chevalley_basis(self.big)
        small = self.small
        rank = small.rank

        def expect(actual: AlgElem, wanted: AlgElem, what: str):
            if _add_elem(actual, _scale_elem(wanted, -1)):
                raise UserError(f"embedding images violate {what}")

        for i in range(rank):
            for j in range(rank):
                expect(cb.bracket(self.image_h[i], self.image_h[j]), {}, "[h,h] = 0")
                aij = Fraction(small.cartan[i][j])
                expect(cb.bracket(self.image_h[i], self.image_e[j]),
                       _scale_elem(self.image_e[j], aij), "[h_i, e_j] = a_ij e_j")
                expect(cb.bracket(self.image_h[i], self.image_f[j]),
                       _scale_elem(self.image_f[j], -aij), "[h_i, f_j] = -a_ij f_j")
                expect(cb.bracket(self.image_e[i], self.image_f[j]),
                       self.image_h[i] if i == j else {}, "[e_i, f_j] = delta h_i")
                if i != j:
                    n = 1 - small.cartan[i][j]
                    ad_e = self.image_e[j]
                    ad_f = self.image_f[j]
                    for _ in range(n):
                        ad_e = cb.bracket(self.image_e[i], ad_e)
                        ad_f = cb.bracket(self.image_f[i], ad_f)
                    expect(ad_e, {}, "Serre relation on e")
                    expect(ad_f, {}, "Serre relation on f")

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        if self.variant == "diagonal":
            return {"variant": "diagonal", "type": str(self.small.cartan_type)}
        if self.variant == "regular_subsystem":
            return {"variant": "regular_subsystem", "ambient": str(self.big.cartan_type),
                    "positive_roots": [list(r) for r in self.subset_positive]}
        if self.variant == "principal_sl2":
            return {"variant": "principal_sl2", "ambient": str(self.big.cartan_type)}
        if self.variant == "adjoint_into_sl":
            return {"variant": "adjoint_into_sl", "type": str(self.small.cartan_type),
                    "h1": [str(c) for c in self.h1], "ordering": self.ordering}
        if self.variant == "composed":
            return {"variant": "composed", "stages": [s.to_json() for s in self.stages]}
        return {"variant": "explicit", "small": str(self.small.cartan_type),
                "big": str(self.big.cartan_type),
                "images": {"e": [_elem_json(e) for e in self.image_e],
                           "f": [_elem_json(e) for e in self.image_f],
                           "h": [_elem_json(e) for e in self.image_h]}}


def _elem_json(e: AlgElem) -> list:
    out = []
    for k, v in sorted(e.items(), key=str):
        if k[0] == "x":
            out.append(["x", list(k[1]), str(v)])
        else:
            out.append(["h", k[1], str(v)])
    return out


def _elem_from_json(data, system: RootSystem) -> AlgElem:
    out: AlgElem = {}
    for item in data:
        kind = item[0]
        if kind == "x":
            key = ("x", tuple(int(x) for x in item[1]))
            if not system.is_root(key[1]):
                raise UserError(f"{item[1]} is not a root of {system.cartan_type}")
        elif kind == "h":
            key = ("h", int(item[1]))
        else:
            raise UserError(f"unknown basis label {item!r}")
        out[key] = out.get(key, Fraction(0)) + Fraction(item[2])
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def build_diagonal(system: RootSystem) -> EmbeddingDescriptor:
    t = str(system.cartan_type)
    big = build_root_system(f"{t}x{t}")
    rank = system.rank

    def left(r: Root) -> Root:
        return tuple(r) + (0,) * rank

    def right(r: Root) -> Root:
        return (0,) * rank + tuple(r)

    image_e = [{("x", left(system.simple_root(i))): Fraction(1),
                ("x", right(system.simple_root(i))): Fraction(1)} for i in range(rank)]
    image_f = [{("x", _neg(left(system.simple_root(i)))): Fraction(1),
                ("x", _neg(right(system.simple_root(i)))): Fraction(1)} for i in range(rank)]
    image_h = [{("h", i): Fraction(1), ("h", i + rank): Fraction(1)} for i in range(rank)]
    desc = EmbeddingDescriptor("diagonal", system, big, image_e, image_f, image_h)
    desc.validate()
    return desc


def _component_split(simples: list[Root], system: RootSystem) -> list[list[int]]:
    n = len(simples)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for v in range(n):
                if not seen[v] and system.root_inner(simples[u], simples[v]) != 0:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def _recognize_component(simples: list[Root], system: RootSystem):
    """Match a connected sub-Cartan matrix against the classification.

    Returns (type string, permutation) with permutation[i] = index into
    `simples` realizing simple root i of the standard ordering.
    """
    rank = len(simples)
    pair = [[2 * system.root_inner(a, b) / system.root_norm2(a) for b in simples]
            for a in simples]
    candidates = []
    for series in "ABCDEFG":
        try:
            candidates.append(CartanType.parse(f"{series}{rank}", allow_c2=True))
        except UserError:
            continue
    for cand in candidates:
        std = build_root_system(str(cand))
        for perm in permutations(range(rank)):
            ok = all(std.cartan[i][j] == pair[perm[i]][perm[j]]
                     for i in range(rank) for j in range(rank))
            if ok:
                return str(cand), list(perm)
    raise UserError("subsystem does not match any admissible Cartan type")


def build_regular_subsystem(big: RootSystem, positive_subset) -> EmbeddingDescriptor:
    """Regular subalgebra from a closed symmetric root subsystem of the big one."""
    pos = [tuple(int(x) for x in r) for r in positive_subset]
    if len(set(pos)) != len(pos):
        raise UserError("duplicate roots in subsystem")
    for r in pos:
        if not big.is_positive_root(r):
            raise UserError(f"{r} is not a positive root of {big.cartan_type}")
    full = set(pos) | {_neg(r) for r in pos}
    for a in full:
        for b in full:
            s = tuple(x + y for x, y in zip(a, b))
            if big.is_root(s) and s not in full:
                raise UserError("subsystem is not closed under root addition")
    pos_set = set(pos)
    simples = [r for r in pos
               if not any(tuple(a + b for a, b in zip(p, q)) == r
                          for p in pos_set for q in pos_set)]
    simples.sort(key=lambda r: (sum(r), r))
    comps = _component_split(simples, big)
    # deterministic factor order: by first appearance in height-lex order
    comps.sort(key=lambda c: min(c))
    factor_types = []
    mapping: list[Root] = []
    for comp in comps:
        sub = [simples[i] for i in comp]
        tname, perm = _recognize_component(sub, big)
        factor_types.append(tname)
        mapping.extend(sub[p] for p in perm)
    small = build_root_system("x".join(factor_types))
    if len(pos) != len(small.positive_roots):
        raise UserError("subsystem size does not match the recognized type")
    image_e = [{("x", mapping[i]): Fraction(1)} for i in range(small.rank)]
    image_f = [{("x", _neg(mapping[i])): Fraction(1)} for i in range(small.rank)]
    image_h = []
    for i in range(small.rank):
        coeffs = big.coroot_coeffs(mapping[i])
        image_h.append({("h", j): c for j, c in enumerate(coeffs) if c})
    desc = EmbeddingDescriptor("regular_subsystem", small, big,
                               image_e, image_f, image_h,
                               subset_simple=mapping, subset_positive=pos)
    desc.validate()
    return desc


def principal_cartan_coefficients(big: RootSystem) -> list[Fraction]:
    """c with alpha_j(sum_k c_k alpha_k^vee) = 2 for every simple root."""
    n = big.rank
    mat = [[Fraction(big.cartan[k][j]) for k in range(n)] for j in range(n)]
    return solve(mat, [Fraction(2)] * n)


def build_principal_sl2(big: RootSystem) -> EmbeddingDescriptor:
    """The three-dimensional subalgebra through a principal nilpotent element."""
    small = build_root_system("A1")
    c = principal_cartan_coefficients(big)
    image_e = [{("x", big.simple_root(j)): Fraction(1) for j in range(big.rank)}]
    image_f = [{("x", _neg(big.simple_root(j))): c[j] for j in range(big.rank) if c[j]}]
    image_h = [{("h", j): c[j] for j in range(big.rank) if c[j]}]
    desc = EmbeddingDescriptor("principal_sl2", small, big, image_e, image_f, image_h)
    desc.validate()
    return desc


def principal_fundamental_values(big: RootSystem) -> list[Fraction]:
    """Restrictions of the fundamental weights along a principal sl2."""
    c = principal_cartan_coefficients(big)
    return list(c)


def principal_value_class(big: RootSystem, j: int) -> int:
    """1, 2 or 3 according to the simple ideal holding simple root j."""
    k = big.factor_of_simple(j)
    series, rank = big.cartan_type.factors[k]
    if (series, rank) == ("A", 1):
        return 1
    if (series, rank) == ("A", 2):
        return 2
    return 3


def build_explicit(small: RootSystem, big: RootSystem,
                   image_e, image_f, image_h) -> EmbeddingDescriptor:
    desc = EmbeddingDescriptor("explicit", small, big,
                               list(image_e), list(image_f), list(image_h))
    desc.validate()
    return desc


def build_composed(stages: list[EmbeddingDescriptor]) -> EmbeddingDescriptor:
    if not stages:
        raise UserError("composed embedding needs at least one stage")
    desc = EmbeddingDescriptor("composed", stages[0].small, stages[-1].big,
                               [], [], [], stages=list(stages),
                               unit_scale=stages[-1].unit_scale)
    desc.validate()
    return desc


# ---------------------------------------------------------------------------
# The adjoint embedding g -> sl(g)
# ---------------------------------------------------------------------------

_natural_cache: dict[int, tuple[dict, dict]] = {}


def _natural_data(ambient: RootSystem, config: Config) -> tuple[dict, dict]:
    """(units, positions) of the abstract root vectors in the defining module.

    In the defining module of sl_n, sorted by weight, every root vector acts
    as +-1 times a matrix unit; the sign converts between the abstract basis
    and the matrix-unit basis the closed-form product lives in.
    """
    key = id(ambient)
    if key in _natural_cache:
        return _natural_cache[key]
    big = Config(max_dim=max(config.max_dim, ambient.rank + 1),
                 weyl_bound=config.weyl_bound, height_bound=config.height_bound)
    nat = construct_module(ambient, ambient.fundamental_weight(0), big)
    units: dict[Root, int] = {}
    positions: dict[Root, tuple[int, int]] = {}
    for r in ambient.positive_roots:
        entries = list(nat.matrix_of_basis(("x", r)).entries())
        assert len(entries) == 1
        i, j, val = entries[0]
        assert val in (1, -1)
        units[r] = int(val)
        positions[r] = (i, j)
        down = list(nat.matrix_of_basis(("x", _neg(r))).entries())
        assert down == [(j, i, val)], "lowering operator is not the signed transpose"
        units[_neg(r)] = int(val)
    _natural_cache[key] = (units, positions)
    return units, positions


def evaluate_root_at(system: RootSystem, beta: Root, h_coroot_coords):
    """beta(h) for h given in simple-coroot coordinates."""
    fund = system.root_to_weight(beta)
    total = 0
    for i, c in enumerate(h_coroot_coords):
        if c:
            total = total + c * fund.coords[i]
    return total


def adjoint_setup(system: RootSystem, h1, config: Config = DEFAULT):
    """Adjoint embedding of g into sl(g) through a flag anchored at h1.

    h1 is a regular Cartan element in simple-coroot coordinates (rational or
    quadratic-field scalars).  Returns (descriptor, w_tilde, Phi_w_tilde, c)
    where c is the closed-form product over positive roots of -beta(h1).
    """
    h1 = tuple(h1)
    if len(h1) != system.rank:
        raise UserError("h1 has the wrong rank")
    for beta in system.positive_roots:
        if not evaluate_root_at(system, beta, h1):
            raise UserError(f"h1 is singular: root {beta} vanishes on it")
    r = len(system.positive_roots)
    ell = system.rank
    n = ell + 2 * r
    ambient = build_root_system(f"A{n - 1}")
    cb = chevalley_basis(system)

    # ordered basis: positive root vectors by height-lex, the Cartan flag
    # starting at h1, then the negative root vectors in reverse order
    h_basis: list[tuple] = [h1]
    for j in range(ell):
        cand = tuple(Fraction(1) if k == j else Fraction(0) for k in range(ell))
        trial = h_basis + [cand]
        m = [[trial[a][b] for b in range(ell)] for a in range(len(trial))]
        if len(rref(m)[1]) == len(trial):
            h_basis.append(cand)
        if len(h_basis) == ell:
            break
    assert len(h_basis) == ell
    basis_keys = [("x", b) for b in system.positive_roots]
    basis_keys += [("H", j) for j in range(ell)]
    basis_keys += [("x", _neg(b)) for b in reversed(system.positive_roots)]
    index = {k: i for i, k in enumerate(basis_keys)}

    h_mat = [[h_basis[c][rw] for c in range(ell)] for rw in range(ell)]

    def expand_h(coords) -> list:
        return solve([[h_mat[i][j] for j in range(ell)] for i in range(ell)], list(coords))

    def ad_matrix(elem: AlgElem) -> list[list]:
        cols = []
        for key in basis_keys:
            if key[0] == "H":
                target = {("h", j): h_basis[key[1]][j] for j in range(ell)
                          if h_basis[key[1]][j]}
            else:
                target = {key: Fraction(1)}
            br = cb.bracket(elem, target)
            col = [Fraction(0)] * n
            hpart = [Fraction(0)] * ell
            for k, v in br.items():
                if k[0] == "x":
                    col[index[("x", k[1])]] = col[index[("x", k[1])]] + v
                else:
                    hpart[k[1]] = hpart[k[1]] + v
            if any(x for x in hpart):
                for j, c in enumerate(expand_h(hpart)):
                    col[r + j] = col[r + j] + c
            cols.append(col)
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    units, positions = _natural_data(ambient, config)
    pos_of_unit = {pos: root for root, pos in positions.items()}

    def to_ambient(mat: list[list]) -> AlgElem:
        out: AlgElem = {}
        for i in range(n):
            for j in range(n):
                if i == j or not mat[i][j]:
                    continue
                root = pos_of_unit[(i, j)] if i < j else _neg(pos_of_unit[(j, i)])
                out[("x", root)] = mat[i][j] * units[root]
        diag = [mat[i][i] for i in range(n)]
        if any(x for x in diag):
            d = [diag[j] - diag[j + 1] for j in range(n - 1)]
            amat = [[Fraction(ambient.cartan[k][j]) for k in range(n - 1)]
                    for j in range(n - 1)]
            for j, c in enumerate(solve(amat, d)):
                if c:
                    out[("h", j)] = c
        return out

    image_e = []
    image_f = []
    image_h = []
    for i in range(system.rank):
        a = system.simple_root(i)
        image_e.append(to_ambient(ad_matrix({("x", a): Fraction(1)})))
        image_f.append(to_ambient(ad_matrix({("x", _neg(a)): Fraction(1)})))
        image_h.append(to_ambient(ad_matrix(cb.coroot_terms(a))))

    desc = EmbeddingDescriptor("adjoint_into_sl", system, ambient,
                               image_e, image_f, image_h,
                               h1=h1, ordering="height-lex", unit_scale=units)
    desc.validate()

    w_tilde = WeylElement.from_word(ambient, range(r))
    phi = w_tilde.inversion_set()
    assert phi == frozenset(pos_of_unit[(j, r)] for j in range(r))
    c = Fraction(1)
    for beta in system.positive_roots:
        c = c * (-evaluate_root_at(system, beta, h1))
    return desc, w_tilde, phi, c


# ---------------------------------------------------------------------------
# Descriptor JSON round trip
# ---------------------------------------------------------------------------

def descriptor_from_json(data: dict, config: Config = DEFAULT) -> EmbeddingDescriptor:
    if not isinstance(data, dict) or "variant" not in data:
        raise UserError("descriptor JSON must be an object with a 'variant' field")
    variant = data["variant"]
    try:
        if variant == "diagonal":
            return build_diagonal(build_root_system(data["type"]))
        if variant == "regular_subsystem":
            big = build_root_system(data["ambient"])
            return build_regular_subsystem(big, [tuple(r) for r in data["positive_roots"]])
        if variant == "principal_sl2":
            return build_principal_sl2(build_root_system(data["ambient"]))
        if variant == "adjoint_into_sl":
            system = build_root_system(data["type"])
            h1 = tuple(Fraction(s) for s in data["h1"])
            desc, _, _, _ = adjoint_setup(system, h1, config)
            return desc
        if variant == "composed":
            return build_composed([descriptor_from_json(s, config) for s in data["stages"]])
        if variant == "explicit":
            small = build_root_system(data["small"])
            big = build_root_system(data["big"])
            images = data["images"]
            return build_explicit(
                small, big,
                [_elem_from_json(e, big) for e in images["e"]],
                [_elem_from_json(e, big) for e in images["f"]],
                [_elem_from_json(e, big) for e in images["h"]])
    except KeyError as exc:
        raise UserError(f"descriptor JSON missing field {exc}") from exc
    raise UserError(f"unknown descriptor variant {variant!r}")
