"""Built-in fixtures, golden values, and seeded pair samplers.

The counterexample pair is the five-element pair whose quadratic family
fails to be a Groebner basis (the two posets share no linear extension);
the chain/antichain pairs carry the known delta-vector table.  Samplers are
deterministic in their rng and exist so that reproduction runs, fuzzing,
and the acceptance suite draw from one palette.
"""

from __future__ import annotations

from .posets import (
    antichain,
    chain,
    common_linear_extension,
    enumerate_ideals,
    parse_poset,
    poset_from_relations,
    random_poset,
    relabel_by_extension,
)
from .toric import Monomial, Binomial, X_KIND, Y_KIND

COUNTEREXAMPLE_P_TEXT = "5; 1<3 2<3 2<4 3<5 4<5"
COUNTEREXAMPLE_Q_TEXT = "5; 4<3 3<2 2<1 4<5"

# delta-vectors of the chain/antichain pair, d = 2..6
GOLDEN_DELTA = {
    2: (1, 3, 1),
    3: (1, 7, 7, 1),
    4: (1, 15, 33, 15, 1),
    5: (1, 31, 131, 131, 31, 1),
    6: (1, 63, 473, 883, 473, 63, 1),
}


def counterexample_pair():
    return parse_poset(COUNTEREXAMPLE_P_TEXT), parse_poset(COUNTEREXAMPLE_Q_TEXT)


def chain_antichain_pair(d):
    return chain(d), antichain(d)


def counterexample_cubic(vs):
    """The degree-3 element of the counterexample pair's reduced basis.

    Its first monomial is initial under every admissible order: the two
    monomials have equal degree and differ in z, and z is constrained to be
    the lowest-ranked variable, so the z-free monomial always wins the
    reverse-lex tie-break.
    """
    def one(labels):
        return frozenset(i - 1 for i in labels)

    first = Monomial.from_pairs(
        len(vs),
        [
            (vs.find(X_KIND, one({2})), 1),
            (vs.find(X_KIND, one({1, 2, 3, 4})), 1),
            (vs.find(Y_KIND, one({1, 2, 3, 4, 5})), 1),
        ],
    )
    second = Monomial.from_pairs(
        len(vs),
        [
            (vs.find(X_KIND, one({2, 4})), 1),
            (vs.find(Y_KIND, one({4, 5})), 1),
            (vs.z_index, 1),
        ],
    )
    return Binomial(first=first, second=second)


def random_pair(d, rng, edge_prob=0.35):
    """Unconstrained random pair; both interior verdict branches occur.

    random_poset orients all relations along the identity, so each poset is
    scrambled by its own random relabeling; otherwise every pair would share
    the identity extension and the negative branch would never fire.
    """

    def scrambled():
        p = random_poset(d, edge_prob, rng.randrange(1 << 30))
        perm = list(range(d))
        rng.shuffle(perm)
        return relabel_by_extension(p, perm)

    return scrambled(), scrambled()


def random_common_extension_pair(d, rng, edge_prob=0.4, max_variables=None):
    """Random pair that shares a linear extension by construction.

    Both posets orient their relations along one hidden permutation, which
    is therefore a common extension.  max_variables, when set, rejects
    pairs whose ideal lattices are large, keeping downstream Groebner work
    at desk scale; the palette is a sampling choice, not a correctness one.
    """
    while True:
        perm = list(range(d))
        rng.shuffle(perm)

        def sample():
            pairs = []
            for a in range(d):
                for b in range(a + 1, d):
                    if rng.random() < edge_prob:
                        pairs.append((perm[a], perm[b]))
            return poset_from_relations(d, pairs)

        p, q = sample(), sample()
        assert common_linear_extension(p, q) is not None
        if max_variables is not None:
            nvars = len(enumerate_ideals(p)) + len(enumerate_ideals(q)) - 1
            if nvars > max_variables:
                continue
        return p, q
