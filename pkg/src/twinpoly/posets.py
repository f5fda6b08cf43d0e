"""Finite posets on {0, ..., d-1}: ideals, linear extensions, parsing.

Elements are 0-based internally.  The text format ("d; a<b a<c ...") and all
CLI-facing output use 1-based labels.  A poset ideal is a down-closed subset;
the ideals of a poset form a distributive lattice under union/intersection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction


class PosetError(ValueError):
    """Raised for malformed poset text or relation sets that are not orders."""


Ideal = frozenset  # down-closed subset of range(d)
LinearExtension = tuple  # permutation of range(d), earlier = smaller


@dataclass(frozen=True)
class Poset:
    """Strict partial order on range(d), stored as its transitive closure.

    lt[i][j] is True iff element i is strictly below element j.  The matrix
    must be irreflexive, transitive and antisymmetric; `validate` checks all
    three.  Full-closure storage keeps comparability queries O(1), which the
    ideal and extension enumerations lean on.
    """

    d: int
    lt: tuple

    def __post_init__(self):
        if self.d < 1:
            raise PosetError(f"poset needs at least one element, got d={self.d}")
        self.validate()

    def validate(self):
        lt = self.lt
        n = self.d
        if len(lt) != n or any(len(row) != n for row in lt):
            raise PosetError("relation matrix shape does not match d")
        for i in range(n):
            if lt[i][i]:
                raise PosetError(f"irreflexivity violated at element {i + 1}")
            for j in range(n):
                if lt[i][j] and lt[j][i]:
                    raise PosetError(
                        f"antisymmetry violated between {i + 1} and {j + 1}"
                    )
                if lt[i][j]:
                    for k in range(n):
                        if lt[j][k] and not lt[i][k]:
                            raise PosetError(
                                f"transitivity violated: {i + 1}<{j + 1}<{k + 1}"
                            )

    def less(self, i, j):
        return self.lt[i][j]

    def covers(self):
        """Cover pairs (i, j): i < j with nothing strictly between."""
        out = []
        for i in range(self.d):
            for j in range(self.d):
                if self.lt[i][j] and not any(
                    self.lt[i][k] and self.lt[k][j] for k in range(self.d)
                ):
                    out.append((i, j))
        return out

    def maximal_in(self, subset):
        """Elements of `subset` with nothing of `subset` above them."""
        return frozenset(
            i for i in subset if not any(self.lt[i][j] for j in subset)
        )

    def to_text(self):
        """Canonical serialization: "d; a<b ..." over sorted cover pairs, 1-based."""
        pairs = sorted(self.covers())
        body = " ".join(f"{a + 1}<{b + 1}" for a, b in pairs)
        return f"{self.d}; {body}".rstrip()

    def to_json_dict(self):
        return {"d": self.d, "covers": [[a + 1, b + 1] for a, b in sorted(self.covers())]}


@dataclass(frozen=True)
class IdealFamily:
    """All poset ideals of `owner`, sorted by (cardinality, sorted labels)."""

    owner: Poset
    ideals: tuple = field(default=())

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def nonempty(self):
        return tuple(s for s in self.ideals if s)


def ideal_sort_key(subset):
    return (len(subset), tuple(sorted(subset)))


def _closure_with_cycle_check(d, pairs):
    """Transitive closure of the relation `pairs`; raises naming a cycle."""
    lt = [[False] * d for _ in range(d)]
    for a, b in pairs:
        lt[a][b] = True
    # Warshall; equivalent to iterating the boolean matrix product to a fixpoint.
    for k in range(d):
        row_k = lt[k]
        for i in range(d):
            if lt[i][k]:
                row_i = lt[i]
                for j in range(d):
                    if row_k[j]:
                        row_i[j] = True
    for i in range(d):
        if lt[i][i]:
            raise PosetError(f"relations contain the cycle {_find_cycle(d, pairs, i)}")
    return tuple(tuple(row) for row in lt)


def _find_cycle(d, pairs, start):
    """A directed cycle through `start` in the raw relation graph, 1-based text."""
    succ = {i: [] for i in range(d)}
    for a, b in pairs:
        succ[a].append(b)
    path = [start]
    seen = {start}
    node = start
    while True:
        nxt = next(
            (b for b in succ[node] if b == start or b not in seen), None
        )
        if nxt is None:  # pragma: no cover - cycle existence is guaranteed by caller
            return "?"
        if nxt == start:
            break
        path.append(nxt)
        seen.add(nxt)
        node = nxt
    return "->".join(str(v + 1) for v in path + [start])


def parse_poset(text):
    """Parse "d; a<b a<c ..." (1-based labels) into a transitively closed Poset.

    The listed relations may be any generating set, not only covers.
    Raises PosetError for bad labels or cyclic relation sets.
    """
    head, sep, tail = text.partition(";")
    if not sep:
        raise PosetError("expected 'd; relations' with a semicolon")
    try:
        d = int(head.strip())
    except ValueError:
        raise PosetError(f"element count is not an integer: {head.strip()!r}") from None
    if d < 1:
        raise PosetError(f"element count must be positive, got {d}")
    pairs = []
    for token in tail.split():
        a_txt, sep2, b_txt = token.partition("<")
        if not sep2:
            raise PosetError(f"malformed relation {token!r}, expected a<b")
        try:
            a, b = int(a_txt), int(b_txt)
        except ValueError:
            raise PosetError(f"malformed relation {token!r}") from None
        if not (1 <= a <= d and 1 <= b <= d):
            raise PosetError(f"label out of range 1..{d} in {token!r}")
        if a == b:
            raise PosetError(f"relations contain the cycle {a}->{a}")
        pairs.append((a - 1, b - 1))
    return Poset(d, _closure_with_cycle_check(d, pairs))


def poset_from_relations(d, pairs):
    """Poset from 0-based generating relations (transitively closed here)."""
    return Poset(d, _closure_with_cycle_check(d, list(pairs)))


def chain(d):
    return poset_from_relations(d, [(i, i + 1) for i in range(d - 1)])


def antichain(d):
    return poset_from_relations(d, [])


def enumerate_ideals(p):
    """All down-closed subsets of p, as an IdealFamily in canonical order."""
    d = p.d
    # down[j] = j together with everything below it, as a bitmask
    down = []
    for j in range(d):
        mask = 1 << j
        for i in range(d):
            if p.lt[i][j]:
                mask |= 1 << i
        down.append(mask)
    found = []
    for s in range(1 << d):
        ok = True
        m = s
        while m:
            j = (m & -m).bit_length() - 1
            if down[j] & ~s:
                ok = False
                break
            m &= m - 1
        if ok:
            found.append(frozenset(i for i in range(d) if s >> i & 1))
    found.sort(key=ideal_sort_key)
    return IdealFamily(p, tuple(found))


def is_linear_extension(p, perm):
    """True iff listing order of `perm` refines the order of p."""
    if sorted(perm) != list(range(p.d)):
        raise PosetError(f"not a permutation of 0..{p.d - 1}: {perm!r}")
    pos = {v: a for a, v in enumerate(perm)}
    return all(
        pos[i] < pos[j]
        for i in range(p.d)
        for j in range(p.d)
        if p.lt[i][j]
    )


def linear_extensions(p):
    """Yield every linear extension of p (smallest-label-first DFS order)."""
    d = p.d
    below = [frozenset(i for i in range(d) if p.lt[i][j]) for j in range(d)]
    out = []
    used = set()

    def rec():
        if len(out) == d:
            yield tuple(out)
            return
        for j in range(d):
            if j not in used and below[j] <= used:
                used.add(j)
                out.append(j)
                yield from rec()
                out.pop()
                used.remove(j)

    yield from rec()


def common_linear_extension(p, q):
    """A linear extension of both p and q, or None if none exists.

    Topological sort of the union relation, smallest available label first,
    so the result is deterministic (and the identity whenever it is valid).
    """
    if p.d != q.d:
        raise PosetError(f"element counts differ: {p.d} vs {q.d}")
    d = p.d
    indeg = [0] * d
    for j in range(d):
        indeg[j] = sum(1 for i in range(d) if p.lt[i][j] or q.lt[i][j])
    perm = []
    placed = [False] * d
    for _ in range(d):
        j = next((v for v in range(d) if not placed[v] and indeg[v] == 0), None)
        if j is None:
            return None  # the union relation has a cycle
        placed[j] = True
        perm.append(j)
        for k in range(d):
            if not placed[k] and (p.lt[j][k] or q.lt[j][k]):
                indeg[k] -= 1
    return tuple(perm)


def union_cycle(p, q):
    """A cycle of the union relation (as 1-based text), or None if acyclic."""
    d = p.d
    pairs = [
        (i, j) for i in range(d) for j in range(d) if p.lt[i][j] or q.lt[i][j]
    ]
    color = [0] * d  # 0 unvisited, 1 on stack, 2 done
    succ = {i: [j for (a, j) in pairs if a == i] for i in range(d)}
    stack = []

    def dfs(v):
        color[v] = 1
        stack.append(v)
        for w in succ[v]:
            if color[w] == 1:
                cyc = stack[stack.index(w):]
                return "->".join(str(u + 1) for u in cyc + [w])
            if color[w] == 0:
                got = dfs(w)
                if got:
                    return got
        stack.pop()
        color[v] = 2
        return None

    for v in range(d):
        if color[v] == 0:
            got = dfs(v)
            if got:
                return got
    return None


def relabel_by_extension(p, perm):
    """Relabel so that the extension `perm` becomes the identity.

    Element perm[k] gets the new label k; the relabeled poset is naturally
    labeled (i below j implies i < j as integers) whenever perm is a linear
    extension of p.
    """
    newpos = {v: k for k, v in enumerate(perm)}
    pairs = [
        (newpos[i], newpos[j])
        for i in range(p.d)
        for j in range(p.d)
        if p.lt[i][j]
    ]
    return poset_from_relations(p.d, pairs)


def random_poset(d, edge_prob, seed):
    """Seeded random poset: label-increasing relations, transitively closed.

    Drawing only i<j with i<j as integers keeps the relation acyclic without
    rejection; edge_prob 0 gives the antichain and 1 the chain.  Accepts
    float or Fraction probabilities (comparisons against random() are exact).
    """
    if not 0 <= edge_prob <= 1:
        raise ValueError(f"edge_prob must lie in [0,1], got {edge_prob}")
    rng = random.Random(seed)
    pairs = []
    for i in range(d):
        for j in range(i + 1, d):
            r = Fraction(rng.random()) if isinstance(edge_prob, Fraction) else rng.random()
            if r < edge_prob:
                pairs.append((i, j))
    return poset_from_relations(d, pairs)
