"""Toric algebra of a twinned ideal configuration.

One ring variable per nonempty ideal of each poset plus a homogenizing
variable z.  The monomial map pi sends x_I to t^rho(I) s, y_J to
t^(-rho(J)) s, and z to s; its kernel is the toric ideal of the
configuration.  This module owns the variable bookkeeping, exponent-vector
monomials and pure-difference binomials, and the distinguished quadratic
binomial family built from lattice meets/joins and shared maximal elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .posets import enumerate_ideals


class ToricError(ValueError):
    pass


X_KIND, Y_KIND, Z_KIND = "x", "y", "z"


@dataclass(frozen=True)
class Variable:
    """Ring variable tagged by its role; image is the pi-exponent vector.

    image layout: d exponents for t_1..t_d, then the s exponent (always 1).
    """

    kind: str
    ideal: frozenset
    index: int
    image: tuple

    @property
    def name(self):
        if self.kind == Z_KIND:
            return "z"
        labels = ",".join(str(i + 1) for i in sorted(self.ideal))
        return "%s{%s}" % (self.kind, labels)


@dataclass(frozen=True)
class VariableSet:
    """Canonically ordered variables: X-block, Y-block, z last.

    Blocks are sorted by (ideal cardinality, label-lex); this fixed column
    order is what exponent tuples index into.  Monomial *order* is a
    separate concern and lives with the Groebner engine.
    """

    d: int
    variables: tuple

    def __post_init__(self):
        index = {}
        for v in self.variables:
            assert v.index == len(index)
            index[(v.kind, v.ideal)] = v.index
        object.__setattr__(self, "_lookup", index)

    def __len__(self):
        return len(self.variables)

    def __iter__(self):
        return iter(self.variables)

    def find(self, kind, ideal=frozenset()):
        key = (kind, frozenset(ideal))
        if key not in self._lookup:
            raise ToricError(f"no variable {kind}{sorted(ideal)}")
        return self._lookup[key]

    @property
    def z_index(self):
        return len(self.variables) - 1

    def names(self):
        return tuple(v.name for v in self.variables)


def build_variables(p, q):
    """Variable set for the pair; raises on element-count mismatch."""
    if p.d != q.d:
        raise ToricError(f"element counts differ: {p.d} vs {q.d}")
    d = p.d
    variables = []

    def rho_image(subset, sign):
        return tuple(sign * (1 if i in subset else 0) for i in range(d)) + (1,)

    for s in enumerate_ideals(p).nonempty():
        variables.append(
            Variable(X_KIND, s, len(variables), rho_image(s, 1))
        )
    for s in enumerate_ideals(q).nonempty():
        variables.append(
            Variable(Y_KIND, s, len(variables), rho_image(s, -1))
        )
    variables.append(
        Variable(Z_KIND, frozenset(), len(variables), (0,) * d + (1,))
    )
    return VariableSet(d=d, variables=tuple(variables))


class Monomial:
    """Exponent tuple over a fixed variable list, with cached degree/support.

    The support bitmask makes divisibility and coprimality tests cheap,
    which is where the Groebner engine spends its time.
    """

    __slots__ = ("exps", "deg", "support")

    def __init__(self, exps):
        self.exps = tuple(exps)
        self.deg = sum(self.exps)
        mask = 0
        for i, e in enumerate(self.exps):
            if e:
                mask |= 1 << i
        self.support = mask

    @classmethod
    def one(cls, nvars):
        return cls((0,) * nvars)

    @classmethod
    def from_pairs(cls, nvars, pairs):
        exps = [0] * nvars
        for idx, e in pairs:
            exps[idx] += e
        return cls(exps)

    @property
    def is_one(self):
        return self.deg == 0

    def mul(self, other):
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other):
        if self.support & ~other.support:
            return False
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def div(self, other):
        """Quotient self / other; caller guarantees divisibility."""
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other):
        return Monomial(
            tuple(max(a, b) for a, b in zip(self.exps, other.exps))
        )

    def coprime(self, other):
        return self.support & other.support == 0

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"Monomial{self.exps}"


@dataclass(frozen=True)
class Binomial:
    """Pure difference of two distinct monomials, first - second.

    Engine outputs orient first as the initial monomial of the active
    order; raw family members are oriented by the emitter.
    """

    first: Monomial
    second: Monomial

    def __post_init__(self):
        if self.first == self.second:
            raise ToricError("binomial monomials must differ")

    def key(self):
        """Orientation-free identity, for dedup and set comparison."""
        a, b = self.first.exps, self.second.exps
        return (a, b) if a >= b else (b, a)

    def flip(self):
        return Binomial(first=self.second, second=self.first)


def pi_eval(vs, m):
    """Image exponent vector of a monomial under pi (t-exponents, then s)."""
    if len(m.exps) != len(vs):
        raise ToricError("monomial does not match the variable set")
    out = [0] * (vs.d + 1)
    for idx, e in enumerate(m.exps):
        if e:
            img = vs.variables[idx].image
            for k in range(vs.d + 1):
                out[k] += e * img[k]
    return tuple(out)


def in_kernel(vs, b):
    return pi_eval(vs, b.first) == pi_eval(vs, b.second)


def _ideal_variable(vs, kind, subset):
    """Variable index for an ideal, with the empty set mapped to z."""
    if not subset:
        return vs.z_index
    return vs.find(kind, subset)


def family_G(p, q):
    """The quadratic binomial family of the pair, deduplicated.

    Three shapes: meet/join straightening among incomparable ideals of P
    (in the x variables), the same for Q (in y), and mixed xy relations
    removing a label that is maximal in both ideals.  The empty ideal is
    identified with z throughout.  Every member lies in the kernel of pi,
    asserted on emission.
    """
    vs = build_variables(p, q)
    nvars = len(vs)
    xs = tuple(enumerate_ideals(p).nonempty())
    ys = tuple(enumerate_ideals(q).nonempty())
    out = []

    def emit(first_pairs, second_pairs):
        first = Monomial.from_pairs(nvars, first_pairs)
        second = Monomial.from_pairs(nvars, second_pairs)
        if first == second:
            return
        b = Binomial(first=first, second=second)
        assert first.deg == 2 and second.deg == 2
        assert in_kernel(vs, b)
        out.append(b)

    for kind, ideals in ((X_KIND, xs), (Y_KIND, ys)):
        for i, a in enumerate(ideals):
            for b in ideals[i + 1 :]:
                if a <= b or b <= a:
                    continue
                emit(
                    [(vs.find(kind, a), 1), (vs.find(kind, b), 1)],
                    [
                        (_ideal_variable(vs, kind, a & b), 1),
                        (_ideal_variable(vs, kind, a | b), 1),
                    ],
                )

    for a in xs:
        max_a = p.maximal_in(a)
        for b in ys:
            shared = max_a & q.maximal_in(b)
            for i in sorted(shared):
                emit(
                    [(vs.find(X_KIND, a), 1), (vs.find(Y_KIND, b), 1)],
                    [
                        (_ideal_variable(vs, X_KIND, a - {i}), 1),
                        (_ideal_variable(vs, Y_KIND, b - {i}), 1),
                    ],
                )

    seen = {}
    for b in out:
        seen.setdefault(b.key(), b)
    return vs, list(seen.values())


def quadratic_kernel_binomials(vs):
    """Every degree-2 binomial of the kernel of pi, deduplicated.

    The kernel is graded by total degree (the s-row), so its degree-2 part
    is spanned by differences of equal-image degree-2 monomials; those are
    found by bucketing all monomials x_i x_j by image.
    """
    n = len(vs)
    groups = {}
    for i in range(n):
        for j in range(i, n):
            m = Monomial.from_pairs(n, [(i, 1), (j, 1)])
            groups.setdefault(pi_eval(vs, m), []).append(m)
    out = []
    for ms in groups.values():
        for k in range(len(ms)):
            for l in range(k + 1, len(ms)):
                out.append(Binomial(first=ms[k], second=ms[l]))
    return out


# ----------------------------------------------------------------------
# rendering
# ----------------------------------------------------------------------

def monomial_text(vs, m):
    if m.is_one:
        return "1"
    parts = []
    for idx, e in enumerate(m.exps):
        if not e:
            continue
        name = vs.variables[idx].name
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def binomial_text(vs, b):
    return f"{monomial_text(vs, b.first)} - {monomial_text(vs, b.second)}"


def monomial_to_json_dict(vs, m):
    return {
        vs.variables[idx].name: e for idx, e in enumerate(m.exps) if e
    }


def binomial_to_json_dict(vs, b):
    return {
        "first": monomial_to_json_dict(vs, b.first),
        "second": monomial_to_json_dict(vs, b.second),
    }
