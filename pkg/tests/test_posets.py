"""Poset parsing, ideal enumeration, linear extensions.

Oracles: ideal enumeration is checked against a definition-level subset
filter, extension enumeration against a filter over all d! permutations.
"""

import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from strategies import poset_pairs, posets
from twinpoly.posets import (
    Poset,
    PosetError,
    antichain,
    chain,
    common_linear_extension,
    enumerate_ideals,
    ideal_sort_key,
    is_linear_extension,
    linear_extensions,
    parse_poset,
    poset_from_relations,
    random_poset,
    relabel_by_extension,
    union_cycle,
)
from twinpoly.catalog import counterexample_pair


# -- oracles -----------------------------------------------------------------


def brute_ideals(p):
    """Down-closed subsets straight from the definition."""
    found = set()
    for bits in itertools.product((0, 1), repeat=p.d):
        s = frozenset(i for i in range(p.d) if bits[i])
        if all(i in s for j in s for i in range(p.d) if p.lt[i][j]):
            found.add(s)
    return found


def brute_extensions(p):
    """Permutations that refine the order, straight from the definition."""
    found = set()
    for perm in itertools.permutations(range(p.d)):
        pos = {v: k for k, v in enumerate(perm)}
        if all(
            pos[i] < pos[j]
            for i in range(p.d)
            for j in range(p.d)
            if p.lt[i][j]
        ):
            found.add(perm)
    return found


# -- parsing and serialization -----------------------------------------------


def test_parse_basic():
    p = parse_poset("3; 1<2 2<3")
    assert p.d == 3
    assert p.less(0, 2)  # transitive closure applied
    assert p.to_text() == "3; 1<2 2<3"


def test_parse_empty_relations():
    p = parse_poset("4;")
    assert p.d == 4
    assert not any(p.lt[i][j] for i in range(4) for j in range(4))
    assert p.to_text() == "4;"


def test_parse_noncover_generators_collapse_to_covers():
    # 1<3 is implied, so the canonical text omits it
    p = parse_poset("3; 1<2 2<3 1<3")
    assert p.to_text() == "3; 1<2 2<3"


@pytest.mark.parametrize(
    "text",
    [
        "no semicolon",
        "x; 1<2",
        "0;",
        "-2;",
        "3; 1-2",
        "3; 1<9",
        "3; 0<1",
        "3; a<b",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(PosetError):
        parse_poset(text)


def test_parse_rejects_cycle_and_names_it():
    with pytest.raises(PosetError) as exc:
        parse_poset("3; 1<2 2<3 3<1")
    msg = str(exc.value)
    assert "cycle" in msg
    assert "->" in msg


def test_parse_rejects_self_loop():
    with pytest.raises(PosetError, match="cycle"):
        parse_poset("3; 2<2")


@given(posets(max_d=5))
def test_text_round_trip(p):
    assert parse_poset(p.to_text()) == p


@given(posets(max_d=4))
def test_json_dict_matches_covers(p):
    d = p.to_json_dict()
    assert d["d"] == p.d
    assert d["covers"] == [[a + 1, b + 1] for a, b in sorted(p.covers())]


def test_validate_rejects_broken_matrices():
    with pytest.raises(PosetError, match="irreflexivity"):
        Poset(1, ((True,),))
    with pytest.raises(PosetError, match="antisymmetry"):
        Poset(2, ((False, True), (True, False)))
    with pytest.raises(PosetError, match="transitivity"):
        Poset(
            3,
            (
                (False, True, False),
                (False, False, True),
                (False, False, False),
            ),
        )
    with pytest.raises(PosetError, match="shape"):
        Poset(2, ((False,),))
    with pytest.raises(PosetError, match="at least one"):
        Poset(0, ())


# -- covers and maximal elements ----------------------------------------------


def test_covers_of_chain():
    assert chain(4).covers() == [(0, 1), (1, 2), (2, 3)]


def test_maximal_in():
    p = parse_poset("4; 1<2 1<3")
    assert p.maximal_in(frozenset({0, 1, 2})) == frozenset({1, 2})
    assert p.maximal_in(frozenset({0, 3})) == frozenset({0, 3})
    assert p.maximal_in(frozenset()) == frozenset()


# -- ideal enumeration ---------------------------------------------------------


def test_chain_has_d_plus_one_ideals():
    for d in range(1, 6):
        fam = enumerate_ideals(chain(d))
        assert len(fam) == d + 1
        assert fam.ideals[0] == frozenset()
        assert fam.ideals[-1] == frozenset(range(d))


def test_antichain_has_all_subsets():
    for d in range(1, 5):
        assert len(enumerate_ideals(antichain(d))) == 2**d


def test_counterexample_pair_ideal_counts():
    p, q = counterexample_pair()
    assert len(enumerate_ideals(p)) == 9
    assert len(enumerate_ideals(q)) == 9


@given(posets(max_d=5))
def test_ideals_match_brute_force(p):
    fam = enumerate_ideals(p)
    assert set(fam.ideals) == brute_ideals(p)
    assert list(fam.ideals) == sorted(fam.ideals, key=ideal_sort_key)


@given(posets(max_d=5))
def test_ideals_form_a_lattice(p):
    """Poset ideals are closed under union and intersection."""
    fam = set(enumerate_ideals(p).ideals)
    for a in fam:
        for b in fam:
            assert a | b in fam
            assert a & b in fam


def test_nonempty_drops_only_the_empty_ideal():
    fam = enumerate_ideals(antichain(3))
    assert len(fam.nonempty()) == len(fam) - 1
    assert frozenset() not in fam.nonempty()


# -- linear extensions ----------------------------------------------------------


def test_is_linear_extension_examples():
    p, _ = counterexample_pair()
    assert is_linear_extension(p, (1, 0, 2, 3, 4))  # 2 1 3 4 5 in 1-based labels
    assert not is_linear_extension(p, (2, 1, 0, 3, 4))
    with pytest.raises(PosetError, match="permutation"):
        is_linear_extension(p, (0, 0, 1, 2, 3))


def test_chain_has_exactly_one_extension():
    assert list(linear_extensions(chain(4))) == [(0, 1, 2, 3)]


def test_antichain_has_factorial_many_extensions():
    exts = list(linear_extensions(antichain(4)))
    assert len(exts) == 24
    assert len(set(exts)) == 24


@given(posets(max_d=4))
def test_extensions_match_brute_force(p):
    assert set(linear_extensions(p)) == brute_extensions(p)


@given(posets(max_d=4))
def test_every_enumerated_extension_validates(p):
    for perm in linear_extensions(p):
        assert is_linear_extension(p, perm)


# -- common extensions -----------------------------------------------------------


def test_common_extension_of_chain_and_antichain_is_identity():
    assert common_linear_extension(chain(4), antichain(4)) == (0, 1, 2, 3)


def test_counterexample_pair_has_no_common_extension():
    p, q = counterexample_pair()
    assert common_linear_extension(p, q) is None
    cyc = union_cycle(p, q)
    assert cyc is not None and "->" in cyc


def test_common_extension_rejects_size_mismatch():
    with pytest.raises(PosetError, match="differ"):
        common_linear_extension(chain(3), chain(4))


@given(poset_pairs(max_d=4))
def test_common_extension_matches_brute_force(pair):
    p, q = pair
    ext = common_linear_extension(p, q)
    brute = brute_extensions(p) & brute_extensions(q)
    if ext is None:
        assert not brute
    else:
        assert ext in brute
        assert is_linear_extension(p, ext) and is_linear_extension(q, ext)


@given(poset_pairs(max_d=4))
def test_union_cycle_reported_exactly_when_no_extension(pair):
    p, q = pair
    ext = common_linear_extension(p, q)
    cyc = union_cycle(p, q)
    assert (ext is None) == (cyc is not None)


# -- relabeling -------------------------------------------------------------------


@given(posets(max_d=4))
def test_relabel_along_extension_gives_natural_labeling(p):
    ext = next(iter(linear_extensions(p)))
    r = relabel_by_extension(p, ext)
    assert all(i < j for i in range(r.d) for j in range(r.d) if r.lt[i][j])
    assert is_linear_extension(r, tuple(range(r.d)))


@given(posets(max_d=4))
def test_relabel_preserves_ideal_count(p):
    perm = tuple(reversed(range(p.d)))
    r = relabel_by_extension(p, perm)
    assert len(enumerate_ideals(r)) == len(enumerate_ideals(p))


# -- random posets ------------------------------------------------------------------


def test_random_poset_is_deterministic_per_seed():
    a = random_poset(6, 0.4, seed=11)
    b = random_poset(6, 0.4, seed=11)
    c = random_poset(6, 0.4, seed=12)
    assert a == b
    assert a != c or a.covers() == c.covers()  # different seed usually differs


def test_random_poset_probability_extremes():
    assert random_poset(5, 0, seed=1) == antichain(5)
    assert random_poset(5, 1, seed=1) == chain(5)


def test_random_poset_rejects_bad_probability():
    with pytest.raises(ValueError, match="edge_prob"):
        random_poset(4, 1.5, seed=0)


@given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=999))
def test_random_poset_always_validates(d, seed):
    p = random_poset(d, 0.5, seed=seed)
    p.validate()
    assert is_linear_extension(p, tuple(range(d)))
