"""Resolver mapping an integral weight to the cohomology degree it supports.

H^q(X, O(lambda)) is V(w.lambda)* when lambda is regular of length q, and
vanishes in all other degrees; singular weights carry no cohomology at all.
The dualization in the realization is kept explicit in the result and is
never silently dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import Config, DEFAULT, UserError
from .liecoh import kostant_cohomology
from .rootdata import Root, RootSystem, Weight
from .weyl import WeylElement, make_dominant


@dataclass(frozen=True)
class BottResult:
    regular: bool
    q: int | None = None
    w: WeylElement | None = None
    mu: Weight | None = None
    witness: Root | None = None  # vanishing pairing, when singular
    dual: bool = True            # the realized module is V(mu)*, not V(mu)

    @property
    def module_note(self) -> str:
        if not self.regular:
            return "H^q(X,O(lambda)) = 0 for all q"
        return f"H^{self.q}(X,O(lambda)) = V({self.mu})*"

    def to_json(self):
        if not self.regular:
            return {"regular": False, "witness_root": list(self.witness)}
        return {"regular": True, "q": self.q, "w_word": self.w.word_1based(),
                "mu": self.mu.to_json(), "dual": self.dual}


def resolve(system: RootSystem, lam: Weight) -> BottResult:
    """Locate the unique nonvanishing degree of lambda, or report singularity."""
    if not lam.is_integral():
        raise UserError(f"{lam} is not an integral weight")
    reg = make_dominant(system, lam)
    if not reg.regular:
        return BottResult(False, witness=reg.witness)
    return BottResult(True, q=reg.length, w=reg.w_lambda, mu=reg.dominant)


def reciprocity_check(system: RootSystem, lam: Weight, mu: Weight, q: int,
                      config: Config = DEFAULT) -> tuple[int, int]:
    """Both sides of the reciprocity law; the contract is that they agree.

    Left: dim Hom(V(mu)*, H^q(X, O(lambda))) read off from the resolver.
    Right: dimension of the lambda weight space of H^q(n, V(mu)).
    """
    if not (mu.is_dominant() and mu.is_integral()):
        raise UserError(f"{mu} is not dominant integral")
    res = resolve(system, lam)
    lhs = 1 if (res.regular and res.q == q and res.mu == mu) else 0
    slice_q = kostant_cohomology(system, mu, q, config)
    rhs = sum(e.dim for e in slice_q.entries if e.weight == lam)
    return lhs, rhs
