import pytest
from hypothesis import given, strategies as st

from brandt_nsr import (
    Brandt,
    Const,
    ConstTheta,
    NSupport,
    Other,
    Permutation,
    Singleton,
    canonical_name,
    classify,
    map_add,
    map_compose,
    parse_name,
    realize,
    realize_name,
    support,
    support_size,
)

BN2 = Brandt(2)
BN3 = Brandt(3)


def test_map_add_is_pointwise():
    f = realize(BN2, Const(1, 2))
    g = realize(BN2, Const(2, 1))
    s = map_add(BN2, f, g)
    assert s == realize(BN2, Const(1, 1))
    assert map_add(BN2, f, f) == realize(BN2, ConstTheta())


def test_map_compose_reads_left_to_right():
    f = realize(BN2, Singleton(1, 1, 2, 2))
    g = realize(BN2, Singleton(2, 2, 1, 2))
    # "f then g": (1,1) -> (2,2) -> (1,2); the other order dies because g
    # lands on (1,2), which f does not move
    assert map_compose(f, g) == realize(BN2, Singleton(1, 1, 1, 2))
    assert map_compose(g, f) == realize(BN2, ConstTheta())


def test_constants_absorb_on_the_left_of_composition():
    for p in (1, 2):
        for q in (1, 2):
            c = realize(BN2, Const(p, q))
            g = realize(BN2, Const(2, 1))
            assert map_compose(c, g) == g


def test_support_and_size():
    f = realize(BN3, NSupport(2, 1, Permutation.identity(3)))
    assert support_size(f) == 3
    assert {e.col for e in support(BN3, f)} == {2}
    assert support_size(realize(BN3, ConstTheta())) == 0
    assert support_size(realize(BN3, Const(1, 1))) == BN3.size
    assert support_size(realize(BN3, Singleton(3, 1, 2, 2))) == 1


@pytest.mark.parametrize(
    "form",
    [
        ConstTheta(),
        Const(2, 1),
        Singleton(1, 2, 2, 1),
        NSupport(1, 2, Permutation((2, 1))),
    ],
)
def test_classify_realize_round_trip(form):
    assert classify(BN2, realize(BN2, form)) == form


def test_classify_identity_map_is_other():
    ident = tuple(range(BN2.size))
    assert classify(BN2, ident) == Other()


def test_classify_two_column_support_is_other():
    # support of size n spread over two columns is not the column shape
    t = [0] * BN2.size
    t[BN2.pair_code(1, 1)] = BN2.pair_code(1, 1)
    t[BN2.pair_code(1, 2)] = BN2.pair_code(1, 1)
    assert classify(BN2, tuple(t)) == Other()


def test_classify_theta_moving_map_is_other():
    t = [BN2.pair_code(1, 1)] + [0] * (BN2.size - 1)
    assert classify(BN2, tuple(t)) == Other()


def test_classify_rejects_wrong_length():
    with pytest.raises(ValueError):
        classify(BN3, (0,) * BN2.size)


def test_classify_n1_prefers_column_shape():
    # at n = 1 a single-pair support is also a full-column support
    bn = Brandt(1)
    t = (0, bn.pair_code(1, 1))
    assert classify(bn, t) == NSupport(1, 1, Permutation((1,)))


def test_realize_rejects_other():
    with pytest.raises(ValueError):
        realize(BN2, Other())


def test_canonical_names_are_exact_strings():
    assert canonical_name(BN2, realize(BN2, ConstTheta())) == "c:t"
    assert canonical_name(BN2, realize(BN2, Const(1, 2))) == "c:1,2"
    assert canonical_name(BN2, realize(BN2, Singleton(1, 2, 2, 1))) == "s:1,2>2,1"
    s = NSupport(2, 1, Permutation((2, 1)))
    assert canonical_name(BN2, realize(BN2, s)) == "n:2,1;21"


def test_form_name_rejects_other():
    from brandt_nsr.maps import form_name

    with pytest.raises(ValueError):
        form_name(Other())


@pytest.mark.parametrize(
    "name",
    ["c:t", "c:2,2", "s:1,1>2,2", "s:2,1>1,2", "n:1,1;12", "n:2,2;21"],
)
def test_parse_name_round_trip(name):
    from brandt_nsr.maps import form_name

    assert form_name(parse_name(name)) == name
    assert canonical_name(BN2, realize_name(BN2, name)) == name


@pytest.mark.parametrize(
    "name",
    ["", "x:1,2", "c:", "c:a,b", "s:1,2", "s:1>2", "n:1,2", "n:1,2;13", "0"],
)
def test_parse_name_rejects_malformed(name):
    with pytest.raises(ValueError):
        parse_name(name)


map_tables = st.lists(
    st.integers(min_value=0, max_value=BN2.size - 1),
    min_size=BN2.size,
    max_size=BN2.size,
).map(tuple)


@given(map_tables, map_tables, map_tables)
def test_map_add_is_associative(f, g, h):
    lhs = map_add(BN2, map_add(BN2, f, g), h)
    rhs = map_add(BN2, f, map_add(BN2, g, h))
    assert lhs == rhs


@given(map_tables, map_tables, map_tables)
def test_map_compose_is_associative(f, g, h):
    assert map_compose(map_compose(f, g), h) == map_compose(f, map_compose(g, h))


@given(map_tables, map_tables, map_tables)
def test_composition_distributes_from_the_left(f, g, h):
    # f then (g + h) agrees with (f then g) + (f then h) for arbitrary maps
    lhs = map_compose(f, map_add(BN2, g, h))
    rhs = map_add(BN2, map_compose(f, g), map_compose(f, h))
    assert lhs == rhs


@given(map_tables, map_tables, map_tables)
def test_right_composition_expands_pointwise(f, g, h):
    # the two sides of the (non-)identity (g+h)f vs gf+hf, expanded by hand;
    # pins the argument order of map_compose and map_add
    lhs = map_compose(map_add(BN2, g, h), f)
    rhs = map_add(BN2, map_compose(g, f), map_compose(h, f))
    for x in range(BN2.size):
        assert lhs[x] == f[BN2.add_table[g[x]][h[x]]]
        assert rhs[x] == BN2.add_table[f[g[x]]][f[h[x]]]
