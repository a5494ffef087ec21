"""Root systems: closure, counts, the invariant form, and conversions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohomolib.config import UserError
from cohomolib.rootdata import CartanType, Weight, build_root_system

COUNTS = [("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("B3", 9), ("C3", 9),
          ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36), ("A1xA1", 2), ("A1xA2", 4)]


@pytest.mark.parametrize("name,count", COUNTS)
def test_positive_root_counts(name, count):
    system = build_root_system(name)
    assert len(system.positive_roots) == count


@pytest.mark.parametrize("name", ["A0", "B1", "C2", "D3", "E9", "F5", "G3", "H2", ""])
def test_inadmissible_types_rejected(name):
    with pytest.raises(UserError):
        CartanType.parse(name)


def test_c2_admissible_by_config():
    assert CartanType.parse("C2", allow_c2=True).factors == (("C", 2),)


def test_cartan_matrix_shape():
    system = build_root_system("B2")
    assert system.cartan == [[2, -1], [-2, 2]]
    for row in system.cartan:
        assert row[row.index(2)] == 2
    system = build_root_system("A1xA1")
    assert system.cartan == [[2, 0], [0, 2]]


def test_a2_positive_roots_closure():
    system = build_root_system("A2")
    assert system.positive_roots == [(0, 1), (1, 0), (1, 1)]


def test_roots_closed_under_addition():
    for name in ["A2", "B2", "G2", "A3"]:
        system = build_root_system(name)
        pos = set(system.positive_roots)
        for a in pos:
            for b in pos:
                s = tuple(x + y for x, y in zip(a, b))
                if system.is_root(s):
                    assert s in pos


def test_rho_and_half_sum():
    a1 = build_root_system("A1")
    assert a1.rho == Weight.of(1)
    a2 = build_root_system("A2")
    assert a2.sum_of(a2.positive_roots) == a2.rho * 2 == Weight.of(2, 2)
    assert a2.sum_of([(0, 1), (1, 1)]) == Weight.of(0, 3)
    assert a2.half_sum([(0, 1), (1, 1)]) == Weight.of(0, Fraction(3, 2))


def test_pairing_examples():
    a1 = build_root_system("A1")
    assert a1.pairing(Weight.of(5), (1,)) == 5
    a2 = build_root_system("A2")
    assert a2.pairing(a2.rho, (1, 1)) == 2
    assert a2.pairing(Weight.of(1, 0), (0, 1)) == 0
    with pytest.raises(UserError):
        a2.pairing(Weight.of(1, 0), (2, 0))


def test_rho_pairs_to_one_with_simple_coroots():
    for name in ["A2", "B3", "G2", "F4", "A1xA2"]:
        system = build_root_system(name)
        for i in range(system.rank):
            assert system.pairing(system.rho, system.simple_root(i)) == 1


def test_reflections_permute_roots():
    # exhaustive at rank <= 4
    for name in ["A2", "B2", "G2", "A3", "B3", "C3", "D4", "F4", "A1xA2"]:
        system = build_root_system(name)
        all_roots = set(system.positive_roots) | \
            {tuple(-x for x in r) for r in system.positive_roots}
        for alpha in all_roots:
            coeffs = system.coroot_coeffs(alpha)
            for beta in all_roots:
                pair = sum(c * x for c, x in
                           zip(coeffs, system.root_to_weight(beta).coords))
                image = tuple(b - pair * a for a, b in zip(alpha, beta))
                assert system.is_root(image)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_coordinate_round_trip(coords):
    system = build_root_system("A3")
    w = system.root_to_weight(coords)
    assert [int(c) for c in system.to_root_coords(w)] == coords


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=2),
       st.lists(st.integers(-9, 9), min_size=2, max_size=2))
def test_form_is_symmetric_and_pairing_linear(u, v):
    system = build_root_system("G2")
    wu, wv = Weight.of(*u), Weight.of(*v)
    assert system.inner(wu, wv) == system.inner(wv, wu)
    alpha = system.positive_roots[-1]
    assert system.pairing(wu + wv, alpha) == \
        system.pairing(wu, alpha) + system.pairing(wv, alpha)


def test_weight_json_round_trip():
    w = Weight.of(Fraction(3, 2), -4)
    assert Weight.from_json(w.to_json()) == w
    with pytest.raises(UserError):
        Weight.from_json(["not-a-number"])


def test_factor_spans():
    system = build_root_system("A1xA2")
    assert system.factor_spans == [(0, 1), (1, 3)]
    assert system.factor_of_simple(0) == 0
    assert system.factor_of_simple(2) == 1
