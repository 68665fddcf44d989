"""Locally nilpotent derivations of polynomial rings and their exponential flows.

A derivation is given by the images of the ring variables and extends to the
whole ring by the Leibniz rule.  It is locally nilpotent as soon as some
iterate kills every variable, and then exp(t*D) is a polynomial automorphism
whose orbits are polynomial curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactmath import ExactScalar, SparsePoly, as_scalar, parse_poly, poly_gcd, PolyParseError

__all__ = [
    "Derivation",
    "NilpotencyVerdict",
    "FlowMap",
    "OrbitReport",
    "apply",
    "default_cap",
    "is_locally_nilpotent",
    "homogeneous_parts",
    "truly_different",
    "exp_flow",
    "build_suspension",
    "orbit_avoids",
    "parse_derivation",
    "NotNilpotentError",
]


class NotNilpotentError(ValueError):
    """Raised when a flow is requested for a derivation not shown to be nilpotent."""


@dataclass(frozen=True)
class Derivation:
    variables: tuple[str, ...]
    images: Mapping[str, SparsePoly]

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        images = {}
        for v in variables:
            img = self.images.get(v)
            if img is None:
                img = SparsePoly.zero(variables)
            elif img.variables != variables:
                img = img.in_ring(variables)
            images[v] = img
        extra = set(self.images) - set(variables)
        if extra:
            raise ValueError(f"images given for unknown variables {sorted(extra)}")
        object.__setattr__(self, "images", images)

    def __call__(self, f: SparsePoly) -> SparsePoly:
        return apply(self, f)

    def __add__(self, other: Derivation) -> Derivation:
        if self.variables != other.variables:
            raise ValueError("derivations live on different rings")
        return Derivation(self.variables, {v: self.images[v] + other.images[v] for v in self.variables})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.variables == other.variables and all(
            self.images[v] == other.images[v] for v in self.variables
        )

    def __hash__(self):
        return hash((self.variables, tuple(self.images[v] for v in self.variables)))

    def __str__(self) -> str:
        return "\n".join(f"{v} -> {self.images[v]}" for v in self.variables)


def apply(d: Derivation, f: SparsePoly) -> SparsePoly:
    """Image of f under d by the Leibniz rule."""
    if f.variables != d.variables:
        raise ValueError(f"polynomial ring {f.variables} differs from derivation ring {d.variables}")
    total = SparsePoly.zero(d.variables, f.radicand)
    for v in d.variables:
        img = d.images[v]
        if img.is_zero:
            continue
        partial = f.diff(v)
        if not partial.is_zero:
            total = total + partial * img
    return total


@dataclass(frozen=True)
class NilpotencyVerdict:
    status: str  # "nilpotent" | "not-nilpotent" | "inconclusive"
    steps: Mapping[str, int | None]
    cap: int

    @property
    def nilpotent(self) -> bool:
        return self.status == "nilpotent"


def default_cap(d: Derivation) -> int:
    return 2 + sum(max(img.degree(), 0) for img in d.images.values()) + len(d.variables)


def _scalar_ratio(nxt: SparsePoly, cur: SparsePoly) -> ExactScalar | None:
    # c with nxt == c * cur, if it exists and is nonzero
    if cur.is_zero or nxt.is_zero or len(nxt) != len(cur):
        return None
    exps, c0 = cur.leading()
    c = nxt.coeff(exps) / c0
    if not c:
        return None
    return c if nxt == cur.scale(c) else None


def is_locally_nilpotent(d: Derivation, cap: int | None = None) -> NilpotencyVerdict:
    """Iterate d on each variable until it dies, repeats up to a scalar, or hits ``cap``."""
    if cap is None:
        cap = default_cap(d)
    if cap < 1:
        raise ValueError("cap must be positive")
    steps: dict[str, int | None] = {}
    status = "nilpotent"
    for v in d.variables:
        cur = SparsePoly.var(v, d.variables)
        found = None
        for k in range(1, cap + 1):
            nxt = apply(d, cur)
            if nxt.is_zero:
                found = k
                break
            if _scalar_ratio(nxt, cur) is not None:
                status = "not-nilpotent"
                break
            cur = nxt
        steps[v] = found
        if status == "not-nilpotent":
            break
        if found is None:
            status = "inconclusive"
    return NilpotencyVerdict(status, steps, cap)


def _split_weighted(f: SparsePoly, weights: Sequence[int]) -> dict[int, SparsePoly]:
    pieces: dict[int, dict] = {}
    for exps, c in f.items():
        w = sum(a * b for a, b in zip(weights, exps))
        pieces.setdefault(w, {})[exps] = c
    return {w: SparsePoly(f.variables, t, f.radicand) for w, t in pieces.items()}


def homogeneous_parts(d: Derivation, weights: Sequence[int]) -> list[tuple[int, Derivation]]:
    """Split d = sum_i d_i with d_i raising weighted degree by exactly i."""
    if len(weights) != len(d.variables):
        raise ValueError("one weight per variable required")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    parts: dict[int, dict[str, SparsePoly]] = {}
    for v, w in zip(d.variables, weights):
        for weight, piece in _split_weighted(d.images[v], weights).items():
            parts.setdefault(weight - w, {})[v] = piece
    return [(i, Derivation(d.variables, parts[i])) for i in sorted(parts)]


def truly_different(weights_1: Sequence[int], weights_2: Sequence[int]) -> bool:
    """True when two weight vectors are not proportional."""
    if len(weights_1) != len(weights_2):
        raise ValueError("weight vectors differ in length")
    n = len(weights_1)
    return any(
        weights_1[i] * weights_2[j] != weights_1[j] * weights_2[i]
        for i in range(n)
        for j in range(i + 1, n)
    )


def _fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    name = base
    while name in taken:
        name += "_"
    return name


@dataclass(frozen=True)
class FlowMap:
    """x -> sum_k t^k D^k(x) / k!, with images over ``variables + (param,)``."""

    variables: tuple[str, ...]
    param: str
    images: Mapping[str, SparsePoly]

    @property
    def ring(self) -> tuple[str, ...]:
        return self.variables + (self.param,)

    def pullback(self, f: SparsePoly) -> SparsePoly:
        """f composed with the flow, a polynomial in the variables and the parameter."""
        return f.compose(dict(self.images), self.ring)

    def at(self, value) -> dict[str, SparsePoly]:
        """Specialise the parameter to a constant."""
        c = SparsePoly.constant(value, self.variables)
        sub = {v: SparsePoly.var(v, self.variables) for v in self.variables}
        sub[self.param] = c
        return {v: img.compose(sub, self.variables) for v, img in self.images.items()}

    def orbit(self, start: Mapping[str, object]) -> dict[str, SparsePoly]:
        """Coordinates of the orbit through ``start`` as polynomials in the parameter."""
        ring = (self.param,)
        sub = {v: SparsePoly.constant(as_scalar(start[v]), ring) for v in self.variables}
        sub[self.param] = SparsePoly.var(self.param, ring)
        return {v: img.compose(sub, ring) for v, img in self.images.items()}

    def __str__(self) -> str:
        return "\n".join(f"{v} -> {self.images[v]}" for v in self.variables)


def exp_flow(d: Derivation, cap: int | None = None, param: str = "t") -> FlowMap:
    verdict = is_locally_nilpotent(d, cap)
    if not verdict.nilpotent:
        raise NotNilpotentError(f"derivation is {verdict.status} within cap {verdict.cap}; refusing to truncate")
    param = _fresh_name(param, d.variables)
    ring = d.variables + (param,)
    t = SparsePoly.var(param, ring)
    images = {}
    for v in d.variables:
        cur = SparsePoly.var(v, d.variables)
        total = cur.in_ring(ring)
        k = 0
        while True:
            cur = apply(d, cur)
            k += 1
            if cur.is_zero:
                break
            total = total + cur.in_ring(ring).scale(Fraction(1, math.factorial(k))) * t ** k
        images[v] = total
    return FlowMap(d.variables, param, images)


def build_suspension(p: SparsePoly, u: str = "u", v: str = "v") -> tuple[Derivation, SparsePoly]:
    """Derivation u -> 0, v -> dp/dx_1, x_1 -> u, x_i -> 0 annihilating uv - p."""
    if p.is_constant:
        raise ValueError("the suspension needs a non-constant polynomial p")
    if u in p.variables or v in p.variables:
        raise ValueError(f"variable names {u!r}, {v!r} clash with {p.variables}")
    ring = (u, v) + p.variables
    x1 = p.variables[0]
    pp = p.in_ring(ring)
    images = {u: SparsePoly.zero(ring), v: pp.diff(x1), x1: SparsePoly.var(u, ring)}
    relation = SparsePoly.var(u, ring) * SparsePoly.var(v, ring) - pp
    return Derivation(ring, images), relation


@dataclass(frozen=True)
class OrbitReport:
    on_variety: bool
    avoids: bool
    meeting_gcd: SparsePoly
    orbit: Mapping[str, SparsePoly]


def orbit_avoids(
    flow: FlowMap,
    relations: Sequence[SparsePoly],
    avoid: Mapping[str, object],
    start: Mapping[str, object],
) -> OrbitReport:
    """Decide whether the orbit through ``start`` stays on the variety and misses ``avoid``.

    The orbit meets ``avoid`` iff all coordinate differences share a root in t,
    i.e. iff their gcd is non-constant (or they all vanish identically).
    """
    for rel in relations:
        if rel.evaluate(start):
            raise ValueError(f"start point does not satisfy relation {rel}")
    orbit = flow.orbit(start)
    ring = (flow.param,)
    sub = {v: orbit[v] for v in flow.variables}
    on_variety = all(rel.in_ring(flow.variables).compose(sub, ring).is_zero for rel in relations)
    g = SparsePoly.zero(ring)
    for v in flow.variables:
        diff = orbit[v] - SparsePoly.constant(as_scalar(avoid[v]), ring)
        g = poly_gcd(g, diff)
    avoids = not g.is_zero and g.degree() == 0
    return OrbitReport(on_variety, avoids, g, orbit)


def parse_derivation(text: str) -> Derivation:
    """Parse lines ``var -> expression`` (newline or ';' separated)."""
    entries = []
    offset = 0
    for chunk in text.replace(";", "\n").split("\n"):
        line_offset = offset
        offset += len(chunk.encode()) + 1
        if not chunk.strip():
            continue
        lhs, arrow, rhs = chunk.partition("->")
        if not arrow:
            raise PolyParseError("expected 'var -> expression'", line_offset)
        name = lhs.strip()
        if not name.isidentifier():
            raise PolyParseError(f"bad variable name {name!r}", line_offset)
        entries.append((name, rhs, line_offset + len((lhs + arrow).encode())))
    variables = tuple(name for name, _, _ in entries)
    if len(set(variables)) != len(variables):
        raise ValueError("a variable is assigned twice")
    images = {}
    for name, rhs, base in entries:
        try:
            images[name] = parse_poly(rhs, variables)
        except PolyParseError as exc:
            raise PolyParseError(str(exc).rsplit(" (at", 1)[0], base + exc.offset) from None
    return Derivation(variables, images)
