"""Structure constants: Jacobi, integrality, and the extraspecial signs."""

from fractions import Fraction
from itertools import combinations

import pytest

from cohomolib.chevalley import chevalley_basis
from cohomolib.rootdata import build_root_system

TYPES = ["A2", "B2", "G2", "A3", "A1xA1", "C3"]


def string_length(system, alpha, beta):
    p = 0
    cur = tuple(b - a for a, b in zip(alpha, beta))
    while system.is_root(cur):
        p += 1
        cur = tuple(c - a for a, c in zip(alpha, cur))
    return p


@pytest.mark.parametrize("name", TYPES)
def test_jacobi_identity_exhaustive(name):
    system = build_root_system(name)
    cb = chevalley_basis(system)
    basis = [{k: Fraction(1)} for k in cb.basis_keys()]
    for x, y, z in combinations(basis, 3):
        acc = {}
        for term in (cb.bracket(cb.bracket(x, y), z),
                     cb.bracket(cb.bracket(y, z), x),
                     cb.bracket(cb.bracket(z, x), y)):
            for k, c in term.items():
                acc[k] = acc.get(k, 0) + c
        assert all(v == 0 for v in acc.values())


@pytest.mark.parametrize("name", TYPES)
def test_constants_are_signed_string_lengths(name):
    system = build_root_system(name)
    cb = chevalley_basis(system)
    for a in system.positive_roots:
        for b in system.positive_roots:
            s = tuple(x + y for x, y in zip(a, b))
            if system.is_root(s):
                n = cb.structure_constant(a, b)
                assert n.denominator == 1
                assert abs(n) == string_length(system, a, b) + 1


@pytest.mark.parametrize("name", TYPES)
def test_extraspecial_pairs_are_positive(name):
    system = build_root_system(name)
    cb = chevalley_basis(system)
    for gamma in system.positive_roots:
        if sum(gamma) == 1:
            continue
        xi, eta = cb.extraspecial_pair(gamma)
        assert tuple(x + e for x, e in zip(xi, eta)) == gamma
        assert cb.structure_constant(xi, eta) > 0


def test_opposite_root_vectors_bracket_to_the_coroot():
    system = build_root_system("G2")
    cb = chevalley_basis(system)
    for alpha in system.positive_roots:
        terms = cb.bracket({("x", alpha): Fraction(1)},
                           {("x", tuple(-x for x in alpha)): Fraction(1)})
        coeffs = [terms.get(("h", i), Fraction(0)) for i in range(system.rank)]
        assert tuple(coeffs) == system.coroot_coeffs(alpha)
        # integrality of the coroot expansion, part of the basis being integral
        assert all(c.denominator == 1 for c in coeffs)


def test_antisymmetry_across_signs():
    system = build_root_system("B2")
    cb = chevalley_basis(system)
    roots = list(system.positive_roots) + \
        [tuple(-x for x in r) for r in system.positive_roots]
    for a in roots:
        for b in roots:
            s = tuple(x + y for x, y in zip(a, b))
            if system.is_root(s):
                assert cb.structure_constant(a, b) == -cb.structure_constant(b, a)
                neg = cb.structure_constant(tuple(-x for x in a), tuple(-x for x in b))
                assert neg == -cb.structure_constant(a, b)
