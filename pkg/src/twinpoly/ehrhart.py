"""Lattice-point counting in dilates and the delta-vector property checks.

Counting enumerates the box [-t, t]^d against the half-space data, which is
valid because every vertex is a 0/+-1 vector so t-dilates live in that box.
All arithmetic is integer: numpy int64 throughout, with a guard that rules
out overflow (coordinates and normals here are tiny).  The delta-vector is
the (d+1)-fold finite difference of the count sequence; reflexivity,
uniqueness of the interior lattice point, and low-dilate normality are
checked directly from the exact data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np


class EhrhartError(ValueError):
    pass


# keep each slab of the enumeration comfortably in memory
_CHUNK_TARGET = 1 << 21


def _hrep_arrays(hrep):
    a = np.array([h.normal for h in hrep], dtype=np.int64)
    b = np.array([h.offset for h in hrep], dtype=np.int64)
    return a, b


def count_dilate(hrep, t):
    """Number of lattice points v with normal . v <= t * offset for all rows."""
    if t < 0:
        raise EhrhartError("dilation factor must be nonnegative")
    a, b = _hrep_arrays(hrep)
    d = a.shape[1]
    if t == 0:
        return 1 if (b >= 0).all() else 0
    side = 2 * t + 1
    # |normal . v| <= d * max|a| * t must stay far from int64 limits
    assert d * int(np.abs(a).max()) * t < 1 << 40
    prefix = 0
    while side ** (d - prefix) > _CHUNK_TARGET and prefix < d:
        prefix += 1
    tail = d - prefix
    grids = np.meshgrid(
        *[np.arange(-t, t + 1, dtype=np.int64)] * tail, indexing="ij"
    )
    block = np.stack([g.ravel() for g in grids], axis=1) if tail else None
    bt = b * t
    total = 0
    for head in itertools.product(range(-t, t + 1), repeat=prefix):
        if tail:
            partial = bt - (a[:, :prefix] @ np.array(head, dtype=np.int64))
            ok = block @ a[:, prefix:].T <= partial
            total += int(ok.all(axis=1).sum())
        else:
            v = np.array(head, dtype=np.int64)
            total += int((a @ v <= bt).all())
    return total


@dataclass(frozen=True)
class EhrhartCounts:
    values: tuple

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise EhrhartError("count sequence must start with L(0) = 1")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise EhrhartError("count sequence must be nondecreasing")

    def __getitem__(self, t):
        return self.values[t]

    def __len__(self):
        return len(self.values)


def ehrhart_counts(hrep, t_max):
    return EhrhartCounts(
        values=tuple(count_dilate(hrep, t) for t in range(t_max + 1))
    )


@dataclass(frozen=True)
class DeltaVector:
    entries: tuple

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise EhrhartError("delta-vector must start with 1")
        if any(e < 0 for e in self.entries):
            raise EhrhartError(
                "negative delta entry: counting bug or non-polytope input"
            )

    @property
    def normalized_volume(self):
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def delta_vector(counts, d):
    """Alternating-sum transform of L(0..d); errors on negative entries."""
    if len(counts) < d + 1:
        raise EhrhartError(f"need counts up to t = {d}")
    entries = tuple(
        sum(
            (-1) ** j * comb(d + 1, j) * counts[i - j] for j in range(i + 1)
        )
        for i in range(d + 1)
    )
    return DeltaVector(entries=entries)


def ehrhart_from_delta(dv, d, t):
    """L(t) reconstructed from the delta-vector; the round-trip identity."""
    return sum(
        e * comb(t + d - i, d) for i, e in enumerate(dv.entries)
    )


def is_symmetric_unimodal(dv):
    entries = dv.entries
    symmetric = entries == entries[::-1]
    peak = entries.index(max(entries))
    rises = all(a <= b for a, b in zip(entries[: peak + 1], entries[1 : peak + 1]))
    falls = all(a >= b for a, b in zip(entries[peak:], entries[peak + 1 :]))
    return symmetric, rises and falls


def check_reflexive(hrep):
    """True iff the origin is interior and each facet, scaled to offset 1,
    keeps an integer normal.  With primitive facet data that means every
    offset equals 1, but the divisibility form also covers raw inputs."""
    if any(h.offset <= 0 for h in hrep):
        return False
    return all(all(c % h.offset == 0 for c in h.normal) for h in hrep)


def check_fano(hrep, d):
    """True iff the origin is the unique lattice point strictly inside."""
    a, b = _hrep_arrays(hrep)
    interior = 0
    origin_interior = False
    for pt in itertools.product((-1, 0, 1), repeat=d):
        v = np.array(pt, dtype=np.int64)
        if (a @ v < b).all():
            interior += 1
            if not any(pt):
                origin_interior = True
    return origin_interior and interior == 1


def check_normal(cfg, hrep, t_max):
    """Low-dilate normality: for 2 <= t <= t_max every lattice point of the
    t-dilate is a sum of t configuration points.  Sumset sizes are compared
    against exact counts; the sumset is always inside the dilate, which is
    asserted, so equality of sizes is equivalent."""
    if t_max < 1:
        raise EhrhartError("t_max must be at least 1")
    a, b = _hrep_arrays(hrep)
    base = np.array(sorted(cfg.points), dtype=np.int64)
    assert (base @ a.T <= b).all(), "configuration must lie in the polytope"
    current = base
    for t in range(2, t_max + 1):
        sums = current[:, None, :] + base[None, :, :]
        current = np.unique(sums.reshape(-1, base.shape[1]), axis=0)
        assert (current @ a.T <= t * b).all()
        if len(current) != count_dilate(hrep, t):
            return False
    return True
