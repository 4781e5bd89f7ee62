import dataclasses

import numpy as np
import pytest

from brandt_nsr import (
    Brandt,
    ValidationError,
    additive_closure,
    additively_generates,
    affine_maps,
    brandt_generators,
    build_nsr,
    count_formula,
    endomorphisms,
    endomorphisms_bruteforce,
    validate_nsr,
)
from brandt_nsr.generation import _is_endomorphism


def test_generators_are_the_cycle_of_pairs():
    bn = Brandt(3)
    gens = brandt_generators(bn)
    assert gens == [bn.pair_code(1, 2), bn.pair_code(2, 3), bn.pair_code(3, 1)]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generators_reach_everything_for_n_at_least_2(n):
    bn = Brandt(n)
    assert additively_generates(bn, brandt_generators(bn))


def test_generators_fail_at_n_1():
    # (1,1) + (1,1) = (1,1), so theta is never produced
    bn = Brandt(1)
    assert not additively_generates(bn, brandt_generators(bn))


def test_endomorphism_counts():
    assert len(endomorphisms(Brandt(1))) == 3
    assert len(endomorphisms(Brandt(2))) == 5


def test_backtracking_matches_brute_force_at_n_2():
    bn = Brandt(2)
    assert endomorphisms(bn) == endomorphisms_bruteforce(bn)


def test_brute_force_is_guarded():
    with pytest.raises(ValueError):
        endomorphisms_bruteforce(Brandt(3))


def test_every_endomorphism_really_is_one():
    for n in (1, 2, 3):
        bn = Brandt(n)
        for f in endomorphisms(bn):
            assert _is_endomorphism(bn, f)
            assert len(f) == bn.size


def test_affine_map_count_at_n_2():
    bn = Brandt(2)
    aff = affine_maps(bn)
    assert len(aff) == 13
    assert len(set(aff)) == 13


def test_additive_closure_of_affine_maps_at_n_2():
    bn = Brandt(2)
    closure = additive_closure(bn, affine_maps(bn))
    assert len(closure) == 29
    assert len(set(closure)) == 29


def test_additive_closure_is_actually_closed():
    bn = Brandt(2)
    closure = set(additive_closure(bn, affine_maps(bn)))
    add = bn.add_table
    for f in closure:
        for g in closure:
            assert tuple(add[a][b] for a, b in zip(f, g)) in closure


def test_additive_closure_needs_a_generator():
    with pytest.raises(ValueError):
        additive_closure(Brandt(2), [])


def test_count_formula_values():
    assert count_formula(2) == 29
    assert count_formula(3) == 145
    assert count_formula(4) == 657


@pytest.mark.parametrize(
    "n,breakdown",
    [
        (2, {"constants": 5, "singletons": 16, "n_support": 8}),
        (3, {"constants": 10, "singletons": 81, "n_support": 54}),
    ],
)
def test_build_breakdown(n, breakdown, tbl2, tbl3):
    tbl = {2: tbl2, 3: tbl3}[n]
    assert tbl.breakdown == breakdown
    assert tbl.size - 1 == count_formula(n)


def test_build_n1_names(tbl1):
    assert tbl1.names == ["0", "c:t", "n:1,1;1", "c:1,1"]


def test_zero_and_theta_constant_are_pinned(tbl2):
    assert tbl2.zero_idx == 0
    assert tbl2.names[0] == "0"
    assert tbl2.elements[0] is None
    assert tbl2.names[tbl2.xi_theta_idx] == "c:t"


def test_theta_constant_absorbs_additively(tbl2):
    # theta is absorbing in B_2, so the all-theta map absorbs pointwise sums
    xi = tbl2.xi_theta_idx
    for a in range(1, tbl2.size):
        assert tbl2.add[xi, a] == xi
        assert tbl2.add[a, xi] == xi


def test_index_and_name_lookup(tbl2):
    f = tbl2.elements[7]
    assert tbl2.index_of(f) == 7
    assert tbl2.name_to_index[tbl2.names[7]] == 7


def test_build_is_deterministic(tbl2):
    again = build_nsr(2)
    assert again.names == tbl2.names
    assert np.array_equal(again.add, tbl2.add)
    assert np.array_equal(again.mul, tbl2.mul)


def test_multiplication_is_composition(tbl2):
    # mul[a][b] must index "a then b" on the underlying tables
    f = tbl2.elements[5]
    g = tbl2.elements[11]
    composite = tuple(g[x] for x in f)
    assert tbl2.elements[int(tbl2.mul[5, 11])] == composite


def test_validate_catches_tampered_mul(tbl2):
    bad = dataclasses.replace(tbl2, mul=tbl2.mul.copy())
    bad.mul[1, 1] = 2
    with pytest.raises(ValidationError):
        validate_nsr(bad)


def test_validate_catches_tampered_add(tbl2):
    bad = dataclasses.replace(tbl2, add=tbl2.add.copy())
    bad.add[0, 3] = 4
    with pytest.raises(ValidationError):
        validate_nsr(bad)


def test_validate_catches_renamed_element(tbl2):
    names = list(tbl2.names)
    names[2], names[3] = names[3], names[2]
    bad = dataclasses.replace(tbl2, names=names, name_to_index={})
    with pytest.raises(ValidationError):
        validate_nsr(bad)
