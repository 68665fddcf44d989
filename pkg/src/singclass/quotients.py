"""Cyclic quotient surface singularities C^2 / mu_d acting by (x, y) -> (z x, z^e y).

Conventions: the Hirzebruch-Jung string of the pair (d, e) is the expansion
d/e = a_1 - 1/(a_2 - ...), so the Gorenstein (A_{d-1}) case e = d - 1 gives a
chain of d - 1 twos.

Invariant monomials x^a y^b are those with a + e*b = 0 mod d.  Their minimal
generators fit in the box [0, d]^2: (d, 0) and (0, d) are always invariant, so
any invariant with a > d (or b > d) is (d, 0) plus another invariant and is not
minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from .exactmath import SparsePoly
from .lnd import Derivation, apply

__all__ = [
    "CyclicQuotientData",
    "DescendedDerivation",
    "hj_expansion",
    "hj_value",
    "invariant_generators",
    "is_gorenstein",
    "descend_lnd",
]


@dataclass(frozen=True)
class CyclicQuotientData:
    d: int
    e: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"order d must be >= 2, got {self.d}")
        if not 1 <= self.e < self.d:
            raise ValueError(f"twist e must satisfy 1 <= e < d, got e={self.e}, d={self.d}")
        if gcd(self.d, self.e) != 1:
            raise ValueError(f"gcd(e, d) must be 1, got gcd({self.e}, {self.d}) = {gcd(self.d, self.e)}")

    def is_invariant(self, a: int, b: int) -> bool:
        return (a + self.e * b) % self.d == 0


def hj_expansion(q: CyclicQuotientData) -> list[int]:
    num, den = q.d, q.e
    out = []
    while den:
        a = -(-num // den)
        out.append(a)
        num, den = den, a * den - num
    return out


def hj_value(string: list[int]) -> Fraction:
    """Evaluate a_1 - 1/(a_2 - 1/(... - 1/a_r))."""
    value = Fraction(string[-1])
    for a in reversed(string[:-1]):
        value = a - 1 / value
    return value


def invariant_generators(q: CyclicQuotientData) -> list[tuple[int, int]]:
    """Hilbert basis of the invariant monomial semigroup, sorted by decreasing x-exponent."""
    box = [
        (a, b)
        for a in range(q.d + 1)
        for b in range(q.d + 1)
        if (a or b) and q.is_invariant(a, b)
    ]
    members = set(box)

    def splits(a: int, b: int) -> bool:
        return any(
            (a - s, b - t) in members
            for s, t in box
            if (s, t) != (a, b) and s <= a and t <= b
        )

    return sorted((g for g in box if not splits(*g)), reverse=True)


def is_gorenstein(q: CyclicQuotientData) -> bool:
    return q.e == q.d - 1


def _generator_names(gens: list[tuple[int, int]], q: CyclicQuotientData) -> tuple[str, ...]:
    if is_gorenstein(q):
        names = {(q.d, 0): "u", (1, 1): "w", (0, q.d): "v"}
        return tuple(names[g] for g in gens)
    return tuple(f"g{i}" for i in range(len(gens)))


def _express(target: tuple[int, int], gens: list[tuple[int, int]]) -> tuple[int, ...] | None:
    """Exponents k with sum k_i * gens[i] == target, searching depth first."""

    def go(i: int, rest: tuple[int, int]) -> tuple[int, ...] | None:
        if rest == (0, 0):
            return (0,) * (len(gens) - i)
        if i == len(gens):
            return None
        a, b = gens[i]
        top = min(rest[0] // a if a else rest[1] // b, rest[1] // b if b else rest[0] // a)
        for k in range(top, -1, -1):
            found = go(i + 1, (rest[0] - k * a, rest[1] - k * b))
            if found is not None:
                return (k,) + found
        return None

    return go(0, target)


@dataclass(frozen=True)
class DescendedDerivation:
    data: CyclicQuotientData
    generators: tuple[tuple[int, int], ...]
    names: tuple[str, ...]
    monomial_images: Mapping[tuple[int, int], tuple[int, tuple[int, int] | None]]
    derivation: Derivation
    relations: tuple[SparsePoly, ...]
    invariance_ok: bool  # images invariant and compatible with D upstairs
    relations_preserved: bool  # D(relation) vanishes in C[x, y]


def _quadratic_relations(gens, names) -> list[SparsePoly]:
    # binomials g_i g_j - g_k g_l with equal exponent sums
    n = len(gens)
    pairs: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(i, n):
            key = (gens[i][0] + gens[j][0], gens[i][1] + gens[j][1])
            pairs.setdefault(key, []).append((i, j))
    rels = []
    for group in pairs.values():
        first = group[0]
        for other in group[1:]:
            lhs = SparsePoly.var(names[first[0]], names) * SparsePoly.var(names[first[1]], names)
            rhs = SparsePoly.var(names[other[0]], names) * SparsePoly.var(names[other[1]], names)
            rels.append(lhs - rhs)
    return rels


def descend_lnd(q: CyclicQuotientData) -> DescendedDerivation:
    """Push D(x) = 0, D(y) = x^e down to the invariant ring.

    D(x^a y^b) = b x^{a+e} y^{b-1}, again invariant.  Each image monomial is
    written as a monomial in the generators; relations are produced for the
    Gorenstein family (uv - w^d) and for (3, 1) (the twisted cubic).
    """
    gens = invariant_generators(q)
    names = _generator_names(gens, q)
    images = {}
    ok = True
    for a, b in gens:
        if b == 0:
            images[(a, b)] = (0, None)
            continue
        target = (a + q.e, b - 1)
        ok = ok and q.is_invariant(*target) and q.is_invariant(a, b)
        images[(a, b)] = (b, target)

    poly_images = {}
    for name, g in zip(names, gens):
        coeff, target = images[g]
        if target is None:
            poly_images[name] = SparsePoly.zero(names)
            continue
        ks = _express(target, gens)
        if ks is None:
            raise ArithmeticError(f"image {target} is not a product of generators")
        poly_images[name] = SparsePoly(names, {ks: coeff})
    derivation = Derivation(names, poly_images)

    relations: list[SparsePoly] = []
    if is_gorenstein(q):
        u, w, v = (SparsePoly.var(n, names) for n in ("u", "w", "v"))
        relations = [u * v - w ** q.d]
    elif (q.d, q.e) == (3, 1):
        relations = _quadratic_relations(gens, names)
    # D(relation) must vanish once generators are replaced by their monomials
    xy = ("x", "y")
    to_monomials = {n: SparsePoly(xy, {g: 1}) for n, g in zip(names, gens)}
    upstairs = Derivation(xy, {"y": SparsePoly(xy, {(q.e, 0): 1})})
    ok = ok and all(
        poly_images[n].compose(to_monomials, xy) == apply(upstairs, to_monomials[n]) for n in names
    )
    preserved = all(apply(derivation, r).compose(to_monomials, xy).is_zero for r in relations)
    return DescendedDerivation(
        data=q,
        generators=tuple(gens),
        names=names,
        monomial_images=images,
        derivation=derivation,
        relations=tuple(relations),
        invariance_ok=ok,
        relations_preserved=preserved,
    )
