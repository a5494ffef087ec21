"""Decision pipeline for cohomological pullbacks, with fast paths.

The general route checks, in order: regularity upstairs, regularity of the
restricted weight, degree equality with the wedge-pullback condition, and
finally occurrence of the expected component in the submodule generated by
the relevant extreme weight vector of an explicitly constructed module.
Diagonal, regular, principal-curve and adjoint-invariant specializations
shortcut the last step where that is proved sound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .bwb import resolve
from .chevalley import chevalley_basis
from .config import Config, DEFAULT, BudgetError, UserError
from .embed import (EmbeddingDescriptor, adjoint_setup, build_diagonal,
                    evaluate_root_at, principal_fundamental_values,
                    principal_value_class)
from .hwmodule import (FormalCharacter, construct_module, freudenthal_character,
                       generated_submodule, multiplicity_in_character,
                       symmetric_power_character, trivial_multiplicity,
                       weyl_dimension)
from .linalg import nullspace
from .rootdata import Root, RootSystem, Weight, build_root_system
from .weyl import WeylElement, enumerate_weyl, from_inversion_set, longest_element

ZERO_REASONS = ("SingularBig", "SingularSmall", "DegreeMismatch",
                "ConditionIFails", "ConditionIIFails", "BudgetExceeded")


@dataclass(frozen=True)
class PullbackResult:
    verdict: str                    # "nonzero" or "zero"
    reason: str | None = None       # one of ZERO_REASONS when zero
    q: int | None = None
    w_tilde: WeylElement | None = None
    w: WeylElement | None = None
    mu_tilde: Weight | None = None
    mu: Weight | None = None
    component_note: str | None = None
    path: str = "general"

    @property
    def nonzero(self) -> bool:
        return self.verdict == "nonzero"

    @property
    def conclusive(self) -> bool:
        return self.reason != "BudgetExceeded"

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "path": self.path}
        if self.reason:
            out["reason"] = self.reason
        if self.nonzero:
            out.update(q=self.q, w_word=self.w.word_1based(),
                       wt_word=self.w_tilde.word_1based(),
                       mu=self.mu.to_json(), mu_tilde=self.mu_tilde.to_json())
            if self.component_note:
                out["component_note"] = self.component_note
        return out


def _zero(reason: str, path: str = "general", **kw) -> PullbackResult:
    return PullbackResult("zero", reason=reason, path=path, **kw)


def _nonzero(q, w_tilde, w, mu_tilde, mu, note, path) -> PullbackResult:
    return PullbackResult("nonzero", q=q, w_tilde=w_tilde, w=w,
                          mu_tilde=mu_tilde, mu=mu, component_note=note, path=path)


# ---------------------------------------------------------------------------
# Condition (ii): the generated-submodule engine
# ---------------------------------------------------------------------------

def condition_ii_multiplicity(E: EmbeddingDescriptor, w: WeylElement,
                              w_tilde: WeylElement, mu_tilde: Weight,
                              mu: Weight, config: Config = DEFAULT) -> int:
    """Multiplicity of V(mu) in the small-algebra submodule generated by the
    extreme weight vector of weight w_tilde^{-1}(mu_tilde) in V(mu_tilde)."""
    dim = weyl_dimension(E.big, mu_tilde)
    if dim > config.max_dim:
        raise BudgetError(f"dim V({mu_tilde}) = {dim} exceeds max_dim")
    module = construct_module(E.big, mu_tilde, config)
    extreme = w_tilde.inverse().act_linear(mu_tilde)
    span = module.weight_space(extreme)
    assert len(span) == 1, "extreme weight space is not one-dimensional"
    v = {span.start: Fraction(1)}
    gens = []
    for i in range(E.small.rank):
        a = E.small.simple_root(i)
        gens.append(module.matrix_of(E.image_x(a)))
        gens.append(module.matrix_of(E.image_x(tuple(-x for x in a))))
    small_weights = [E.restrict_weight(wt) for wt in module.basis_weights]
    _, char = generated_submodule(small_weights, v, gens)
    return multiplicity_in_character(E.small, char, mu, config)


def decide_pullback(E: EmbeddingDescriptor, lam_tilde: Weight,
                    config: Config = DEFAULT) -> PullbackResult:
    """The general decision pipeline on an arbitrary descriptor."""
    res_big = resolve(E.big, lam_tilde)
    if not res_big.regular:
        return _zero("SingularBig")
    lam = E.restrict_weight(lam_tilde)
    if not lam.is_integral():
        raise UserError("restricted weight is not integral")
    res_small = resolve(E.small, lam)
    if not res_small.regular:
        return _zero("SingularSmall")
    if res_big.q != res_small.q:
        return _zero("DegreeMismatch")
    ci = E.condition_i(res_big.w)
    if ci is None or ci[0] != res_small.w:
        return _zero("ConditionIFails")
    w_tilde, w = res_big.w, res_small.w
    mu_tilde, mu = res_big.mu, res_small.mu
    if w_tilde.is_identity():
        # dominant case: pullbacks on global sections never vanish, and the
        # component is generated by the highest weight vector upstairs
        return _nonzero(0, w_tilde, w, mu_tilde, mu,
                        f"highest component V({mu}) in V({mu_tilde})", "general")
    try:
        mult = condition_ii_multiplicity(E, w, w_tilde, mu_tilde, mu, config)
    except BudgetError:
        return _zero("BudgetExceeded", q=res_big.q)
    if mult >= 1:
        return _nonzero(res_big.q, w_tilde, w, mu_tilde, mu,
                        f"V({mu}) in V({mu_tilde}), multiplicity >= {mult} in the generated submodule",
                        "general")
    return _zero("ConditionIIFails", q=res_big.q)


# ---------------------------------------------------------------------------
# Diagonal fast path
# ---------------------------------------------------------------------------

def diagonal_decide(system: RootSystem, lam1: Weight, lam2: Weight,
                    config: Config = DEFAULT) -> PullbackResult:
    """Cup-product nonvanishing by the disjoint-inversion-set criterion."""
    E = _diagonal_cached(system)
    r1 = resolve(system, lam1)
    r2 = resolve(system, lam2)
    if not (r1.regular and r2.regular):
        return _zero("SingularBig", path="diagonal-fast")
    lam = lam1 + lam2
    r = resolve(system, lam)
    if not r.regular:
        return _zero("SingularSmall", path="diagonal-fast")
    phi1 = r1.w.inversion_set()
    phi2 = r2.w.inversion_set()
    if r1.q + r2.q != r.q:
        return _zero("DegreeMismatch", path="diagonal-fast")
    if not (phi1.isdisjoint(phi2) and phi1 | phi2 == r.w.inversion_set()):
        return _zero("ConditionIFails", path="diagonal-fast")
    w_tilde = _product_element(E.big, r1.w, r2.w)
    mu_tilde = Weight(r1.mu.coords + r2.mu.coords)
    note = f"V({r.mu}) in V({r1.mu}) (x) V({r2.mu})"
    return _nonzero(r.q, w_tilde, r.w, mu_tilde, r.mu, note, "diagonal-fast")


def _product_element(big: RootSystem, w1: WeylElement, w2: WeylElement) -> WeylElement:
    rank = w1.system.rank
    word = list(w1.word) + [i + rank for i in w2.word]
    return WeylElement.from_word(big, word)


_diag_cache: dict[int, EmbeddingDescriptor] = {}


def _diagonal_cached(system: RootSystem) -> EmbeddingDescriptor:
    if id(system) not in _diag_cache:
        _diag_cache[id(system)] = build_diagonal(system)
    return _diag_cache[id(system)]


def enumerate_disjoint_triples(system: RootSystem, config: Config = DEFAULT):
    """All (w1, w2, w) with the inversion set of w partitioned by the factors."""
    groups = enumerate_weyl(system, config)
    order = sum(len(g) for g in groups)
    if order * order > config.weyl_bound:
        raise BudgetError("too many Weyl pairs for the configured bound")
    elements = [w for g in groups for w in g]
    triples = []
    for w1 in elements:
        p1 = w1.inversion_set()
        for w2 in elements:
            p2 = w2.inversion_set()
            if not p1.isdisjoint(p2):
                continue
            w = from_inversion_set(system, p1 | p2)
            if w is not None:
                triples.append((w1, w2, w))
    triples.sort(key=lambda t: (t[2].length(), t[2].word, t[0].word))
    return triples


# ---------------------------------------------------------------------------
# Regular fast path
# ---------------------------------------------------------------------------

def regular_decide(E: EmbeddingDescriptor, lam_tilde: Weight,
                   config: Config = DEFAULT) -> PullbackResult:
    """Nonvanishing for a regular subalgebra: the inversion set must sit
    inside the subsystem, and the component is then the highest one."""
    if E.variant != "regular_subsystem":
        raise UserError("regular_decide needs a regular-subsystem descriptor")
    res_big = resolve(E.big, lam_tilde)
    if not res_big.regular:
        return _zero("SingularBig", path="regular-fast")
    lam = E.restrict_weight(lam_tilde)
    res_small = resolve(E.small, lam)
    if not res_small.regular:
        return _zero("SingularSmall", path="regular-fast")
    subset = set(E.subset_positive)
    if not set(res_big.w.inversion_set()) <= subset:
        if res_big.q != res_small.q:
            return _zero("DegreeMismatch", path="regular-fast")
        return _zero("ConditionIFails", path="regular-fast")
    ci = E.condition_i(res_big.w)
    assert ci is not None and ci[0] == res_small.w, \
        "wedge pullback disagrees with the subsystem criterion"
    w = res_small.w
    mu_tilde, mu = res_big.mu, res_small.mu
    assert E.restrict_weight(mu_tilde) == mu, "restricted dominant images disagree"
    note = f"highest component V({mu}) in V({mu_tilde})"
    return _nonzero(res_big.q, res_big.w, w, mu_tilde, mu, note, "regular-fast")


# ---------------------------------------------------------------------------
# Principal rational curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrincipalVerdict:
    case: str                      # "i" | "ii" | "iii" | "zero"
    j: int                         # simple-root index of the reflection (0-based)
    restricted: Fraction
    m: int | None = None           # even power in case (ii)
    component: Weight | None = None
    reason: str | None = None

    def to_json(self):
        out = {"case": self.case, "j": self.j + 1, "restricted": str(self.restricted)}
        if self.m is not None:
            out["m"] = self.m
        if self.component is not None:
            out["component"] = self.component.to_json()
        if self.reason:
            out["reason"] = self.reason
        return out


def principal_classify(big: RootSystem, lam_tilde: Weight,
                       config: Config = DEFAULT) -> PrincipalVerdict:
    """Trichotomy for degree-one pullbacks along a principal rational curve."""
    res = resolve(big, lam_tilde)
    if not (res.regular and res.q == 1):
        raise UserError("principal_classify expects a weight of length 1")
    j = res.w.word[0]
    values = principal_fundamental_values(big)
    lam = sum(c * v for c, v in zip(res.mu.coords, values)) - 2 * (res.mu.coords[j] + 1)
    if lam == -1:
        return PrincipalVerdict("zero", j, lam, reason="SingularSmall")
    if lam >= 0:
        return PrincipalVerdict("zero", j, lam, reason="DegreeMismatch")
    cls = principal_value_class(big, j)
    if cls == 1:
        return PrincipalVerdict("i" if not res.mu.is_zero() else "iii", j, lam,
                                component=Weight.of(-lam - 2))
    if res.mu.is_zero():
        return PrincipalVerdict("iii", j, lam, component=Weight.of(0))
    if cls == 2:
        assert all(c == 0 for k, c in enumerate(res.mu.coords) if k != j)
        m = int(res.mu.coords[j])
        if m % 2 == 0:
            return PrincipalVerdict("ii", j, lam, m=m, component=Weight.of(0))
        return PrincipalVerdict("zero", j, lam, m=m, reason="ConditionIIFails")
    raise AssertionError("length-one restriction is impossible for this ideal")


# ---------------------------------------------------------------------------
# Invariants of symmetric powers of the adjoint module
# ---------------------------------------------------------------------------

def adjoint_character(system: RootSystem, config: Config = DEFAULT) -> FormalCharacter:
    """Character of the adjoint module (sum over the simple ideals)."""
    char = FormalCharacter()
    for lo, hi in system.factor_spans:
        theta = max((r for r in system.positive_roots
                     if any(r[lo:hi]) and not any(r[:lo]) and not any(r[hi:])),
                    key=lambda r: (sum(r), r))
        for w, m in freudenthal_character(system, system.root_to_weight(theta), config).mult.items():
            char.add(w, m)
    return char


_invariant_cache: dict[tuple[int, int], list[dict]] = {}


def invariant_monomials(system: RootSystem, k: int) -> list[dict]:
    """Basis of the ad-invariants of the k-th symmetric power of the algebra.

    Vectors are dicts over degree-k monomials in the Chevalley basis (tuples
    of basis keys, sorted); only weight-zero monomials can contribute.
    """
    key = (id(system), k)
    if key in _invariant_cache:
        return _invariant_cache[key]
    from math import comb
    n_basis = len(system.positive_roots) * 2 + system.rank
    if comb(n_basis + k - 1, k) > 500000:
        raise BudgetError(f"symmetric power S^{k} of a {n_basis}-dimensional algebra "
                          "is too large to enumerate")
    cb = chevalley_basis(system)
    keys = cb.basis_keys()
    weights = {b: cb.weight_of(b) for b in keys}
    zero = system.zero_weight()

    def monomial_weight(mon):
        total = zero
        for b in mon:
            total = total + weights[b]
        return total

    zero_mons = [mon for mon in combinations_with_replacement(keys, k)
                 if monomial_weight(mon) == zero]
    index = {mon: i for i, mon in enumerate(zero_mons)}

    rows = []
    for i in range(system.rank):
        gen = {("x", system.simple_root(i)): Fraction(1)}
        target_rows: dict[tuple, dict[int, Fraction]] = {}
        for col, mon in enumerate(zero_mons):
            for pos in range(k):
                img = cb.bracket(gen, {mon[pos]: Fraction(1)})
                for b, c in img.items():
                    new = tuple(sorted(mon[:pos] + (b,) + mon[pos + 1:], key=str))
                    target_rows.setdefault(new, {})[col] = \
                        target_rows.setdefault(new, {}).get(col, Fraction(0)) + c
        for _, row in sorted(target_rows.items(), key=lambda p: str(p[0])):
            dense = [Fraction(0)] * len(zero_mons)
            for col, c in row.items():
                if c:
                    dense[col] = c
            if any(dense):
                rows.append(dense)
    kernel = nullspace(rows, len(zero_mons))
    basis = []
    for vec in kernel:
        basis.append({zero_mons[i]: c for i, c in enumerate(vec) if c})
    _invariant_cache[key] = basis
    return basis


def _coroot_form(system: RootSystem) -> list[list[Fraction]]:
    """Invariant form on the Cartan in the simple-coroot basis.

    The coroot alpha_i^vee is dual to 2 alpha_i / (alpha_i, alpha_i), so the
    form value is (alpha_i, alpha_j) divided by both symmetrizer weights.
    """
    n = system.rank
    return [[system.form[i][j] / (system.symmetrizer[i] * system.symmetrizer[j])
             for j in range(n)] for i in range(n)]


def invariant_pairing_nonzero(system: RootSystem, h1, k: int) -> bool:
    """Whether some ad-invariant of S^k(g) pairs nontrivially against h1^k.

    The pairing of a monomial against h1^k factors as the product of the
    form values of its factors against h1, so root-vector factors kill a
    monomial and only the Cartan monomials are evaluated.
    """
    if k == 0:
        return True
    invariants = invariant_monomials(system, k)
    if not invariants:
        return False
    form = _coroot_form(system)
    n = system.rank
    kappa_h1 = [sum(form[i][j] * h1[j] for j in range(n)) for i in range(n)]

    def functional(mon) -> object:
        val = 1
        for b in mon:
            if b[0] == "x":
                return 0
            val = val * kappa_h1[b[1]]
        return val

    for vec in invariants:
        total = 0
        for mon, c in vec.items():
            f = functional(mon)
            if f:
                total = total + c * f
        if total:
            return True
    return False


def _weyl_orbit_of_cartan(system: RootSystem, h1, config: Config) -> list[tuple]:
    """Fundamental-coordinate values of the Weyl orbit of a Cartan element."""
    orbit = []
    for group in enumerate_weyl(system, config):
        for w in group:
            coords = [0] * system.rank
            for i, c in enumerate(h1):
                if not c:
                    continue
                img = system.coroot_coeffs(w.act_root(system.simple_root(i)))
                for j, x in enumerate(img):
                    if x:
                        coords[j] = coords[j] + c * x
            orbit.append(tuple(coords))
    return orbit


def cartan_restriction_nonzero(system: RootSystem, h1, k: int,
                               config: Config = DEFAULT) -> bool:
    """Independent oracle for the invariant pairing, via restriction to h.

    Degree-k ad-invariants restrict isomorphically onto degree-k reflection
    invariants of the Cartan, which are spanned by orbit sums of monomials;
    the pairing is nonzero exactly when some orbit sum is nonzero at h1.
    """
    if k == 0:
        return True
    orbit = _weyl_orbit_of_cartan(system, h1, config)
    for expo in combinations_with_replacement(range(system.rank), k):
        total = 0
        for point in orbit:
            val = 1
            for i in expo:
                val = val * point[i]
            total = total + val
        if total:
            return True
    return False


_adjoint_cache: dict = {}


def _adjoint_data(system: RootSystem, h1: tuple, config: Config):
    key = (id(system), tuple(h1))
    if key not in _adjoint_cache:
        _adjoint_cache[key] = adjoint_setup(system, h1, config)
    return _adjoint_cache[key]


def adjoint_pullback(system: RootSystem, h1, k: int,
                     config: Config = DEFAULT) -> PullbackResult:
    """Canonical-sheaf pullback hitting degree-k invariant polynomials."""
    desc, w_tilde, _, _ = _adjoint_data(system, tuple(h1), config)
    ambient = desc.big
    r = len(system.positive_roots)
    mu_tilde = ambient.fundamental_weight(0) * k
    lam_tilde = w_tilde.inverse().act_affine(mu_tilde)
    lam = desc.restrict_weight(lam_tilde)
    assert lam == system.rho * -2, "restricted weight is not the canonical one"
    res = resolve(system, lam)
    assert res.regular and res.q == r and res.w == longest_element(system), \
        "canonical weight did not resolve to the top degree"
    if invariant_pairing_nonzero(system, tuple(h1), k):
        note = f"invariant line in degree-{k} symmetric power"
        return _nonzero(r, w_tilde, res.w, mu_tilde, res.mu, note, "adjoint-invariants")
    return _zero("ConditionIIFails", path="adjoint-invariants", q=r)


def invariant_degrees(system: RootSystem, kmax: int,
                      config: Config = DEFAULT) -> list[int]:
    """Degrees of the generators of the invariant algebra, up to kmax."""
    char = adjoint_character(system, config)
    dims = []
    for k in range(kmax + 1):
        dims.append(trivial_multiplicity(system, symmetric_power_character(system, char, k),
                                         config))
    degrees: list[int] = []
    series = [1] + [0] * kmax
    for k in range(1, kmax + 1):
        extra = dims[k] - series[k]
        if extra < 0:
            raise AssertionError("invariant dimension series is not a free-algebra series")
        for _ in range(extra):
            degrees.append(k)
            for j in range(k, kmax + 1):  # multiply the series by 1/(1 - t^k)
                series[j] += series[j - k]
    return degrees


# ---------------------------------------------------------------------------
# Composed embeddings
# ---------------------------------------------------------------------------

def dispatch_decide(E: EmbeddingDescriptor, lam_tilde: Weight,
                    config: Config = DEFAULT) -> PullbackResult:
    """Route one descriptor to its authoritative decision procedure."""
    if E.variant == "diagonal":
        rank = E.small.rank
        return diagonal_decide(E.small, Weight(lam_tilde.coords[:rank]),
                               Weight(lam_tilde.coords[rank:]), config)
    if E.variant == "regular_subsystem":
        return regular_decide(E, lam_tilde, config)
    if E.variant == "composed":
        return composed_decide(E, lam_tilde, config)
    if E.variant == "principal_sl2":
        return _principal_decide(E, lam_tilde, config)
    if E.variant == "adjoint_into_sl":
        return _adjoint_descriptor_decide(E, lam_tilde, config)
    return decide_pullback(E, lam_tilde, config)


def _principal_decide(E: EmbeddingDescriptor, lam_tilde: Weight,
                      config: Config) -> PullbackResult:
    res_big = resolve(E.big, lam_tilde)
    if not res_big.regular:
        return _zero("SingularBig", path="principal-curve")
    lam = E.restrict_weight(lam_tilde)
    res_small = resolve(E.small, lam)
    if not res_small.regular:
        return _zero("SingularSmall", path="principal-curve")
    if res_big.q != res_small.q:
        return _zero("DegreeMismatch", path="principal-curve")
    if res_big.q == 0:
        return _nonzero(0, res_big.w, res_small.w, res_big.mu, res_small.mu,
                        f"highest component V({res_small.mu}) in V({res_big.mu})",
                        "principal-curve")
    verdict = principal_classify(E.big, lam_tilde, config)
    if verdict.case == "zero":
        return _zero(verdict.reason, path="principal-curve", q=1)
    note = {"i": f"highest component V({verdict.component})",
            "ii": f"invariant line in an even symmetric power (m = {verdict.m})",
            "iii": "trivial module to trivial module"}[verdict.case]
    return _nonzero(1, res_big.w, res_small.w, res_big.mu, res_small.mu,
                    note, "principal-curve")


def _adjoint_descriptor_decide(E: EmbeddingDescriptor, lam_tilde: Weight,
                               config: Config) -> PullbackResult:
    res_big = resolve(E.big, lam_tilde)
    if not res_big.regular:
        return _zero("SingularBig", path="adjoint-invariants")
    lam = E.restrict_weight(lam_tilde)
    res_small = resolve(E.small, lam)
    if not res_small.regular:
        return _zero("SingularSmall", path="adjoint-invariants")
    if res_big.q != res_small.q:
        return _zero("DegreeMismatch", path="adjoint-invariants")
    ci = E.condition_i(res_big.w)
    if ci is None or ci[0] != res_small.w:
        return _zero("ConditionIFails", path="adjoint-invariants")
    if res_big.w.is_identity():
        return _nonzero(0, res_big.w, res_small.w, res_big.mu, res_small.mu,
                        "highest component", "adjoint-invariants")
    # the canonical-flag pair: top degree downstairs, k-th power of the
    # fundamental ray upstairs; the invariant pairing decides condition (ii)
    mu_tilde = res_big.mu
    first = mu_tilde.coords[0]
    if all(c == 0 for c in mu_tilde.coords[1:]) and \
            res_small.w == longest_element(E.small) and first.denominator == 1:
        if invariant_pairing_nonzero(E.small, E.h1, int(first)):
            return _nonzero(res_big.q, res_big.w, res_small.w, mu_tilde, res_small.mu,
                            f"invariant line in degree-{int(first)} symmetric power",
                            "adjoint-invariants")
        return _zero("ConditionIIFails", path="adjoint-invariants", q=res_big.q)
    return decide_pullback(E, lam_tilde, config)


def composed_decide(E: EmbeddingDescriptor, lam_tilde: Weight,
                    config: Config = DEFAULT) -> PullbackResult:
    """Stage-by-stage decision; the composition is nonzero iff every stage is."""
    if E.variant != "composed":
        raise UserError("composed_decide needs a composed descriptor")
    current = lam_tilde
    outer: PullbackResult | None = None
    inner: PullbackResult | None = None
    for stage in reversed(E.stages):
        res = dispatch_decide(stage, current, config)
        if not res.nonzero:
            return PullbackResult("zero", reason=res.reason, path="composed:" + res.path)
        if outer is None:
            outer = res
        inner = res
        current = stage.restrict_weight(current)
    assert outer is not None
    assert outer.q == inner.q, "stages decided in different degrees"
    note = f"V({inner.mu}) in V({outer.mu_tilde}) through {len(E.stages)} stages"
    return _nonzero(outer.q, outer.w_tilde, inner.w, outer.mu_tilde, inner.mu,
                    note, "composed")


def trivial_morphisms(E: EmbeddingDescriptor, up_to_length: int,
                      config: Config = DEFAULT) -> list[WeylElement]:
    """Big Weyl elements whose dot-zero weight pulls back nontrivially."""
    groups = enumerate_weyl(E.big, config, max_length=up_to_length)
    out = []
    for group in groups:
        for w_tilde in group:
            if E.variant == "composed":
                lam = w_tilde.inverse().act_affine(E.big.zero_weight())
                if composed_decide(E, lam, config).nonzero:
                    out.append(w_tilde)
            elif E.condition_i(w_tilde) is not None:
                out.append(w_tilde)
    out.sort(key=lambda w: (w.length(), w.word))
    return out


# ---------------------------------------------------------------------------
# Monoids of cohomological pairs
# ---------------------------------------------------------------------------

@dataclass
class MonoidSample:
    w: WeylElement
    w_tilde: WeylElement
    points: list[tuple[Weight, Weight]]
    flags: list[str] = field(default_factory=list)       # "yes" | "no" | "unknown"
    generators: list[int] = field(default_factory=list)  # indices into points
    observed_k: int | None = None
    violations: list[tuple[int, int]] = field(default_factory=list)

    def flag_of(self, point) -> str:
        try:
            return self.flags[self.points.index(point)]
        except ValueError:
            return "unknown"

    def gaps(self) -> list[tuple[Weight, Weight]]:
        return [p for p, f in zip(self.points, self.flags) if f == "no"]

    def to_json(self):
        return {"w_word": self.w.word_1based(), "wt_word": self.w_tilde.word_1based(),
                "points": [{"mu": p[0].to_json(), "mu_tilde": p[1].to_json(),
                            "in_C": f} for p, f in zip(self.points, self.flags)],
                "generators": self.generators,
                "observed_k": self.observed_k,
                "additivity_violations": self.violations}


def _dominant_box(system: RootSystem, bound: int):
    """All dominant integral weights with coordinate sum at most bound."""
    def rec(prefix, remaining, slots):
        if slots == 0:
            yield Weight.of(*prefix)
            return
        for c in range(remaining + 1):
            yield from rec(prefix + [c], remaining - c, slots - 1)
    yield from rec([], bound, system.rank)


def D_monoid_points(E: EmbeddingDescriptor, w: WeylElement, w_tilde: WeylElement,
                    height_bound: int, config: Config = DEFAULT) -> MonoidSample:
    """Dominant pairs compatible with (w, w_tilde), scanned up to a height."""
    ci = E.condition_i(w_tilde)
    if ci is None or ci[0] != w:
        raise UserError("the pair (w, w_tilde) does not satisfy the wedge condition")
    points = []
    for mu_tilde in _dominant_box(E.big, height_bound):
        mu = w.act_linear(E.restrict_weight(w_tilde.inverse().act_linear(mu_tilde)))
        assert mu.is_integral()
        if mu.is_dominant():
            points.append((mu, mu_tilde))
    points.sort(key=lambda p: (sum(p[1].coords), p[1].coords))
    sample = MonoidSample(w, w_tilde, points)
    index = {p[1].coords: i for i, p in enumerate(points)}
    for i, (mu, mu_tilde) in enumerate(points):
        if mu_tilde.is_zero():
            continue
        decomposable = False
        for j, (_, part) in enumerate(points):
            if part.is_zero() or j == i:
                continue
            rest = mu_tilde - part
            if all(c >= 0 for c in rest.coords) and rest.coords in index \
                    and not rest.is_zero():
                decomposable = True
                break
            if rest.is_zero() and part != mu_tilde:
                decomposable = True
                break
        if not decomposable:
            sample.generators.append(i)
    return sample


def point_in_C(E: EmbeddingDescriptor, w: WeylElement, w_tilde: WeylElement,
               mu: Weight, mu_tilde: Weight, config: Config = DEFAULT) -> str:
    """Condition (ii) verdict for one dominant pair: "yes", "no", "unknown"."""
    if mu_tilde.is_zero():
        return "yes"  # the zero pair is always cohomological once (i) holds
    try:
        if E.variant == "adjoint_into_sl":
            first = mu_tilde.coords[0]
            if all(c == 0 for c in mu_tilde.coords[1:]) and first.denominator == 1 \
                    and w == longest_element(E.small):
                return "yes" if invariant_pairing_nonzero(E.small, E.h1, int(first)) else "no"
        if weyl_dimension(E.big, mu_tilde) > config.max_dim:
            return "unknown"
        mult = condition_ii_multiplicity(E, w, w_tilde, mu_tilde, mu, config)
    except BudgetError:
        return "unknown"
    return "yes" if mult >= 1 else "no"


def C_monoid_probe(E: EmbeddingDescriptor, w: WeylElement, w_tilde: WeylElement,
                   height_bound: int, config: Config = DEFAULT,
                   kmax: int | None = None) -> MonoidSample:
    """Flag every scanned dominant pair and report the saturation data."""
    sample = D_monoid_points(E, w, w_tilde, height_bound, config)
    sample.flags = [point_in_C(E, w, w_tilde, mu, mu_tilde, config)
                    for mu, mu_tilde in sample.points]
    index = {p[1].coords: i for i, p in enumerate(sample.points)}
    for i in range(len(sample.points)):
        if sample.flags[i] != "yes":
            continue
        for j in range(i, len(sample.points)):
            if sample.flags[j] != "yes":
                continue
            total = sample.points[i][1] + sample.points[j][1]
            k = index.get(total.coords)
            if k is not None and sample.flags[k] == "no":
                sample.violations.append((i, j))
    sample.observed_k = saturation_factor(E, sample, config, kmax=kmax)
    return sample


def saturation_factor(E: EmbeddingDescriptor, sample: MonoidSample,
                      config: Config = DEFAULT, ignore=(),
                      kmax: int | None = None) -> int | None:
    """Least k with k times every sampled generator cohomological, if seen.

    This is a lower-bound observation, never claimed minimal for the full
    monoid.  Points listed in `ignore` are skipped; the caller cites the
    finite-complement statement justifying an exclusion.
    """
    if kmax is None:
        kmax = max(2, config.height_bound)
    ignore = {(p[0].coords, p[1].coords) for p in ignore}
    index = {p[1].coords: i for i, p in enumerate(sample.points)}
    gens = [sample.points[i] for i in sample.generators]
    for k in range(1, kmax + 1):
        ok = True
        for mu, mu_tilde in gens:
            if (mu.coords, mu_tilde.coords) in ignore:
                continue
            scaled = (mu * k, mu_tilde * k)
            i = index.get(scaled[1].coords)
            if i is not None and scaled[0] == sample.points[i][0]:
                f = sample.flags[i]
            else:
                f = point_in_C(E, sample.w, sample.w_tilde, scaled[0], scaled[1], config)
            if f == "no":
                ok = False
                break
            if f == "unknown":
                return None
        if ok:
            return k
    return None
