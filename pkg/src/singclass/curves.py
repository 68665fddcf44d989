"""Polynomial solutions of the generalized Fermat equation x^p + y^q + z^r = 0.

An identity is stored as three (constant, polynomial) components with
exponents (p, q, r) and claims

    c_1 * x(s)^p + c_2 * y(s)^q + c_3 * z(s)^r == 0

exactly.  Constants absorb the normalisation, so no p-th roots are needed and
the tetrahedral identity lives over Q(sqrt(3)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .exactmath import ExactScalar, RingMismatchError, SparsePoly, as_scalar, poly_gcd

__all__ = [
    "Component",
    "WeightedFermatIdentity",
    "VerificationReport",
    "dihedral",
    "tetrahedral",
    "octahedral",
    "octahedral_variant",
    "icosahedral",
    "schwartz_catalog",
    "identity_by_name",
    "CATALOG_NAMES",
    "degree_balance",
    "verify_identity",
    "check_solution",
    "build_trivial",
]

Component = tuple[ExactScalar, SparsePoly]


@dataclass(frozen=True)
class WeightedFermatIdentity:
    name: str
    exponents: tuple[int, int, int]
    components: tuple[Component, Component, Component]
    status: str = "as-printed"
    note: str = ""

    def __post_init__(self):
        if len(self.components) != 3 or len(self.exponents) != 3:
            raise ValueError("an identity has exactly three components")
        if any(poly.is_zero for _, poly in self.components):
            raise ValueError("identity components must be nonzero polynomials")


@dataclass(frozen=True)
class VerificationReport:
    holds: bool
    residual: SparsePoly
    first_mismatch: tuple[int, ExactScalar] | None
    degrees: tuple[int, int, int]
    expanded_degrees: tuple[int, int, int]
    pairwise_coprime: tuple[bool, bool, bool]
    has_constant_component: bool = False
    name: str = ""
    status: str = ""

    @property
    def coprime(self) -> bool:
        return all(self.pairwise_coprime)


_s = SparsePoly.var("s")


def dihedral(d: int) -> WeightedFermatIdentity:
    """(s^d + 1)^2 - (s^d - 1)^2 - 4 s^d = 0, exponents (2, 2, d)."""
    if d < 2:
        raise ValueError("the dihedral family needs d >= 2")
    return WeightedFermatIdentity(
        name=f"dihedral:{d}",
        exponents=(2, 2, d),
        components=(
            (as_scalar(1), _s ** d + 1),
            (as_scalar(-1), _s ** d - 1),
            (as_scalar(-4), _s),
        ),
        note=f"dihedral parameter d={d}",
    )


def tetrahedral() -> WeightedFermatIdentity:
    r3 = ExactScalar.sqrt(3)
    x = (_s * (1 + _s ** 4)).scale(ExactScalar(1, 0, 3))
    y1 = 1 + (_s ** 2).scale(2 * r3) - _s ** 4
    y2 = 1 - (_s ** 2).scale(2 * r3) - _s ** 4
    # 12 sqrt(3) x^2 - y1^3 + y2^3 = 0
    return WeightedFermatIdentity(
        name="tetrahedral",
        exponents=(2, 3, 3),
        components=((12 * r3, x), (ExactScalar(-1, 0, 3), y1), (ExactScalar(1, 0, 3), y2)),
    )


def _octahedral_forms() -> tuple[SparsePoly, SparsePoly, SparsePoly]:
    x = 1 - 33 * _s ** 4 - 33 * _s ** 8 + _s ** 12
    y = 1 + 14 * _s ** 4 + _s ** 8
    z = _s * (1 - _s ** 4)
    return x, y, z


def octahedral() -> WeightedFermatIdentity:
    """The octahedral display transcribed literally: x^2 = y^3 - 4 s^3 z^4."""
    x, y, z = _octahedral_forms()
    # s^3 z^4 is not a fourth power, so the third term enters with exponent 1
    return WeightedFermatIdentity(
        name="octahedral",
        exponents=(2, 3, 1),
        components=((as_scalar(1), x), (as_scalar(-1), y), (as_scalar(4), _s ** 3 * z ** 4)),
        status="as-printed",
        note="literal transcription with constant 4*s^3 in front of (s(1-s^4))^4",
    )


def octahedral_variant() -> WeightedFermatIdentity:
    """Classical form x^2 = y^3 - 108 z^4 with 108 = 4 * 3^3."""
    x, y, z = _octahedral_forms()
    return WeightedFermatIdentity(
        name="octahedral-variant",
        exponents=(2, 3, 4),
        components=((as_scalar(1), x), (as_scalar(-1), y), (as_scalar(4 * 3 ** 3), z)),
        status="documented-variant",
        note="constant 4*3^3 = 108 and factor (s(1-s^4))^4",
    )


def icosahedral() -> WeightedFermatIdentity:
    """phi_30^2 = phi_20^3 - 1728 phi_12^5."""
    phi12 = _s * (1 - 11 * _s ** 5 - _s ** 10)
    phi20 = 1 + 228 * _s ** 5 + 494 * _s ** 10 - 228 * _s ** 15 + _s ** 20
    phi30 = 1 - 522 * _s ** 5 - 10005 * _s ** 10 - 10005 * _s ** 20 + 522 * _s ** 25 + _s ** 30
    return WeightedFermatIdentity(
        name="icosahedral",
        exponents=(2, 3, 5),
        components=((as_scalar(-1), phi30), (as_scalar(1), phi20), (as_scalar(-(4 ** 3) * 3 ** 3), phi12)),
    )


CATALOG_NAMES = ("dihedral", "tetrahedral", "octahedral", "octahedral-variant", "icosahedral")


def schwartz_catalog(dihedral_d: Sequence[int] = (5,)) -> list[WeightedFermatIdentity]:
    """Every catalogue identity; the dihedral family is instantiated at ``dihedral_d``."""
    out = [dihedral(d) for d in dihedral_d]
    out += [tetrahedral(), octahedral(), octahedral_variant(), icosahedral()]
    return out


def identity_by_name(name: str) -> WeightedFermatIdentity:
    """Look up ``dihedral:d``, ``tetrahedral``, ``octahedral``, ``octahedral-variant`` or ``icosahedral``."""
    if name.startswith("dihedral"):
        _, _, d = name.partition(":")
        return dihedral(int(d) if d else 5)
    table = {
        "tetrahedral": tetrahedral,
        "octahedral": octahedral,
        "octahedral-variant": octahedral_variant,
        "icosahedral": icosahedral,
    }
    try:
        return table[name]()
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; choose from dihedral:d, {', '.join(CATALOG_NAMES[1:])}") from None


def _report(components: Sequence[Component], exponents: Sequence[int], name: str = "", status: str = "") -> VerificationReport:
    polys = [poly for _, poly in components]
    variables = polys[0].variables
    for poly in polys[1:]:
        if poly.variables != variables:
            raise RingMismatchError("solution components must share one variable")
    terms = [(poly ** e).scale(c) for (c, poly), e in zip(components, exponents)]
    residual = terms[0] + terms[1] + terms[2]
    mismatch = None
    if not residual.is_zero:
        exps, c = min(residual.items(), key=lambda kv: kv[0])
        mismatch = (exps[0] if len(exps) == 1 else exps, c)
    if len(variables) != 1:
        raise ValueError("coprimality is only decided for univariate components")
    coprime = [poly_gcd(polys[i], polys[j]).degree() == 0 for i, j in ((0, 1), (0, 2), (1, 2))]
    return VerificationReport(
        holds=residual.is_zero,
        residual=residual,
        first_mismatch=mismatch,
        degrees=tuple(p.degree() for p in polys),
        expanded_degrees=tuple(t.degree() for t in terms),
        pairwise_coprime=tuple(coprime),
        has_constant_component=any(p.is_constant for p in polys),
        name=name,
        status=status,
    )


def degree_balance(identity: WeightedFermatIdentity) -> int | None:
    """Common degree D of the three terms once each component is read as a binary form.

    Component i is homogenised to degree D / e_i, where D is the largest
    expanded degree; None if some e_i does not divide D or a component is too
    large for that slot.  Affine leading terms cancel in a true identity, so
    the expanded affine degrees themselves need not agree.
    """
    terms = [poly.degree() * e for (_, poly), e in zip(identity.components, identity.exponents)]
    top = max(terms)
    for (_, poly), e in zip(identity.components, identity.exponents):
        if top % e or poly.degree() > top // e:
            return None
    return top


def verify_identity(identity: WeightedFermatIdentity) -> VerificationReport:
    return _report(identity.components, identity.exponents, identity.name, identity.status)


def check_solution(components: Sequence[tuple[object, SparsePoly]], exponents: Sequence[int]) -> VerificationReport:
    """Check an ad-hoc triple of (constant, polynomial) pairs against exponents (p, q, r)."""
    comps = [(as_scalar(c), poly) for c, poly in components]
    if len(comps) != 3 or len(exponents) != 3:
        raise ValueError("need exactly three components and three exponents")
    if all(not c or poly.is_zero for c, poly in comps):
        raise ValueError("all components are zero")
    return _report(comps, tuple(exponents))


def build_trivial(constants: Sequence, f: SparsePoly, exponents: Sequence[int]) -> list[Component]:
    """Components (alpha, f^{M/p}), (beta, f^{M/q}), (gamma, f^{M/r}) with M = lcm(p, q, r)."""
    alpha, beta, gamma = (as_scalar(c) for c in constants)
    if alpha + beta + gamma:
        raise ValueError("the constants of a trivial solution must sum to zero")
    if f.is_zero:
        raise ValueError("f must be a nonzero polynomial")
    p, q, r = exponents
    m = lcm(p, q, r)
    return [(alpha, f ** (m // p)), (beta, f ** (m // q)), (gamma, f ** (m // r))]
