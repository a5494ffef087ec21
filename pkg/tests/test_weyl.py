"""Weyl group elements: lengths, inversion sets, the two actions."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohomolib.config import BudgetError, Config, UserError
from cohomolib.rootdata import Weight, build_root_system
from cohomolib.weyl import (WeylElement, enumerate_weyl, from_inversion_set,
                            longest_element, make_dominant)


def elements(system):
    return [w for group in enumerate_weyl(system) for w in group]


@pytest.mark.parametrize("name,sizes", [
    ("A1", [1, 1]),
    ("A2", [1, 2, 2, 1]),
    ("A1xA1", [1, 2, 1]),
    ("B2", [1, 2, 2, 2, 1]),
    ("G2", [1, 2, 2, 2, 2, 2, 1]),
])
def test_group_sizes_by_length(name, sizes):
    groups = enumerate_weyl(build_root_system(name))
    assert [len(g) for g in groups] == sizes


def test_enumeration_bound():
    with pytest.raises(BudgetError):
        enumerate_weyl(build_root_system("A3"), Config(weyl_bound=5))


def test_act_affine_rank_one():
    a1 = build_root_system("A1")
    s = WeylElement.simple_reflection(a1, 0)
    assert s.act_affine(Weight.of(-5)) == Weight.of(3)
    assert WeylElement.identity(a1).act_affine(Weight.of(7)) == Weight.of(7)


def test_act_affine_a2_example():
    a2 = build_root_system("A2")
    s1 = WeylElement.simple_reflection(a2, 0)
    assert s1.act_affine(Weight.of(0, 0)) == Weight.of(-2, 1)  # minus alpha_1


def test_rank_mismatch_rejected():
    a2 = build_root_system("A2")
    s1 = WeylElement.simple_reflection(a2, 0)
    with pytest.raises(UserError):
        s1.act_linear(Weight.of(1))


def test_inversion_sets():
    a2 = build_root_system("A2")
    assert WeylElement.identity(a2).inversion_set() == frozenset()
    w = WeylElement.from_word(a2, [0, 1])
    assert w.inversion_set() == {(0, 1), (1, 1)}


def test_from_inversion_set():
    a2 = build_root_system("A2")
    assert from_inversion_set(a2, [(1, 1)]) is None
    w = from_inversion_set(a2, [(0, 1), (1, 1)])
    assert w is not None and w.word == (0, 1)
    assert from_inversion_set(a2, []).is_identity()
    # non-roots rejected, non-closed sets rejected
    assert from_inversion_set(a2, [(2, 0)]) is None


def test_inversion_set_characterizes_element():
    for name in ["A2", "B2", "A1xA1", "G2"]:
        system = build_root_system(name)
        seen = {}
        for w in elements(system):
            phi = w.inversion_set()
            assert phi not in seen
            seen[phi] = w
            assert from_inversion_set(system, phi) == w
            assert w.length() == len(phi) == len(w.word)


def test_dot_action_identities():
    # both displayed identities, exhaustively over W at rank <= 3
    rng = random.Random(20210 + 7)
    for name in ["A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA2"]:
        system = build_root_system(name)
        zero = system.zero_weight()
        for w in elements(system):
            winv = w.inverse()
            assert winv.act_affine(zero) == -system.sum_of(w.inversion_set())
            for _ in range(3):
                lam = Weight.of(*[rng.randint(-8, 8) for _ in range(system.rank)])
                assert winv.act_linear(w.act_affine(lam)) == \
                    lam - winv.act_affine(zero)


def test_dot_action_is_group_action():
    a2 = build_root_system("B2")
    rng = random.Random(99)
    ws = elements(a2)
    for _ in range(40):
        v, w = rng.choice(ws), rng.choice(ws)
        lam = Weight.of(rng.randint(-6, 6), rng.randint(-6, 6))
        assert (v * w).act_affine(lam) == v.act_affine(w.act_affine(lam))


def test_canonical_word_is_lex_least():
    a2 = build_root_system("A2")
    w0 = longest_element(a2)
    assert w0.word == (0, 1, 0)  # least among the two reduced words
    b2 = build_root_system("B2")
    for w in elements(b2):
        assert WeylElement.from_word(b2, w.word) == w


@pytest.mark.parametrize("name,lam,regular,length,dominant", [
    ("A1", (-1,), False, None, None),
    ("A1", (-2,), True, 1, (0,)),
    ("A2", (3, 1), True, 0, (3, 1)),
    ("A2", (-3, 1), True, 1, (1, 0)),
])
def test_make_dominant(name, lam, regular, length, dominant):
    system = build_root_system(name)
    res = make_dominant(system, Weight.of(*lam))
    assert res.regular is regular
    if regular:
        assert res.length == length
        assert res.dominant == Weight.of(*dominant)
        assert res.w_lambda.act_affine(Weight.of(*lam)) == res.dominant
    else:
        assert res.witness is not None
        assert system.pairing(Weight.of(*lam) + system.rho, res.witness) == 0


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-12, 12), min_size=2, max_size=2))
def test_make_dominant_idempotent(coords):
    system = build_root_system("B2")
    res = make_dominant(system, Weight.of(*coords))
    if res.regular:
        again = make_dominant(system, res.dominant)
        assert again.regular and again.w_lambda.is_identity()
        assert again.dominant == res.dominant


def test_singular_witness_reported():
    a2 = build_root_system("A2")
    res = make_dominant(a2, Weight.of(-2, 0))  # lambda + rho lands on a wall
    assert not res.regular
    assert a2.is_positive_root(res.witness)
