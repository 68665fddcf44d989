"""Pham-Brieskorn triples, Fermat hypersurfaces and cone surfaces F_d(x, y) = z^m.

V_{p,q,r} = {x^p + y^q + z^r = 0} carries the C*-action with weights
(qr, pr, pq) and the equation has degree pqr, so the rationality and
plurigenus questions reduce to :mod:`singclass.hilbert`.  Reciprocal sums are
always compared with exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .exactmath import SparsePoly, poly_gcd
from .hilbert import WeightedCI, delta_vanishing, graded_dim, log_kodaira, normal_degree, pbar_table

__all__ = [
    "TripleClassification",
    "FermatReport",
    "ConeReport",
    "triple_ci",
    "reciprocal_sum",
    "is_platonic",
    "platonic_type",
    "quasirational_conditions",
    "classify_triple",
    "classify_fermat_hypersurface",
    "classify_cone_surface",
    "is_squarefree_binary_form",
]


@dataclass(frozen=True)
class TripleClassification:
    triple: tuple[int, int, int]
    platonic: bool
    platonic_type: str
    N: int
    is_rational: bool
    is_quotient: bool
    quasirational: bool
    quasirational_cross_check: bool
    log_kodaira: float | int
    admits_cplus: bool
    is_gorenstein: bool
    pbar_table: tuple[int, ...]


@dataclass(frozen=True)
class FermatReport:
    exponents: tuple[int, ...]
    N: int
    is_rational: bool
    steinbrink_no_coprime_solutions: bool


@dataclass(frozen=True)
class ConeReport:
    d: int
    m: int
    N: int
    quasirational: bool
    solutions_exist: bool
    squarefree_checked: bool | None = None


def _check_exponents(exps: Sequence[int]) -> None:
    for e in exps:
        if int(e) != e or e < 2:
            raise ValueError(f"exponents must be integers >= 2, got {tuple(exps)}")


def triple_ci(p: int, q: int, r: int) -> WeightedCI:
    _check_exponents((p, q, r))
    return WeightedCI((q * r, p * r, p * q), (p * q * r,))


def reciprocal_sum(exps: Sequence[int]) -> Fraction:
    return sum((Fraction(1, e) for e in exps), Fraction(0))


def is_platonic(p: int, q: int, r: int) -> bool:
    return reciprocal_sum((p, q, r)) > 1


def platonic_type(p: int, q: int, r: int) -> str:
    t = tuple(sorted((p, q, r)))
    if t[:2] == (2, 2):
        return "dihedral"
    return {
        (2, 3, 3): "tetrahedral",
        (2, 3, 4): "octahedral",
        (2, 3, 5): "icosahedral",
    }.get(t, "none")


def quasirational_conditions(p: int, q: int, r: int) -> bool:
    """Some exponent is coprime to the other two, or gcd = 2 with pairwise coprime halves."""
    _check_exponents((p, q, r))
    if gcd(p, q) == 1 and gcd(p, r) == 1:
        return True
    if gcd(q, p) == 1 and gcd(q, r) == 1:
        return True
    if gcd(r, p) == 1 and gcd(r, q) == 1:
        return True
    if gcd(p, q, r) == 2:
        a, b, c = p // 2, q // 2, r // 2
        return gcd(a, b) == 1 and gcd(a, c) == 1 and gcd(b, c) == 1
    return False


def classify_triple(p: int, q: int, r: int, m_max: int = 12) -> TripleClassification:
    _check_exponents((p, q, r))
    if m_max < 1:
        raise ValueError("m_max must be positive")
    p, q, r = sorted((p, q, r))
    ci = triple_ci(p, q, r)
    n = normal_degree(ci)
    kind = platonic_type(p, q, r)
    return TripleClassification(
        triple=(p, q, r),
        platonic=is_platonic(p, q, r),
        platonic_type=kind,
        N=n,
        is_rational=n < 0,
        is_quotient=all(delta_vanishing(ci, m_max)),
        quasirational=quasirational_conditions(p, q, r),
        quasirational_cross_check=graded_dim(ci, n) == 0,
        log_kodaira=log_kodaira(ci),
        admits_cplus=kind == "dihedral",
        is_gorenstein=True,
        pbar_table=tuple(pbar_table(ci, m_max)),
    )


def classify_fermat_hypersurface(exponents: Sequence[int]) -> FermatReport:
    """Rationality and the Steinbrink bound for sum x_i^{p_i} = 0 in C^n."""
    exps = tuple(int(e) for e in exponents)
    _check_exponents(exps)
    n = len(exps)
    if n < 3:
        raise ValueError("a Fermat hypersurface needs at least three variables")
    m = reduce(lcm, exps)
    ci = WeightedCI(tuple(m // e for e in exps), (m,))
    total = reciprocal_sum(exps)
    return FermatReport(
        exponents=exps,
        N=normal_degree(ci),
        is_rational=total > 1,
        steinbrink_no_coprime_solutions=total <= Fraction(1, n - 2),
    )


def is_squarefree_binary_form(form: SparsePoly) -> bool:
    """Square-freeness of a binary form, the root at infinity included."""
    if len(form.variables) != 2:
        raise ValueError("a binary form needs exactly two variables")
    x, y = form.variables
    if form.is_zero:
        return False
    dehom = SparsePoly(
        (x,), {(e[0],): c for e, c in form.items()}, form.radicand
    )
    if poly_gcd(dehom, dehom.diff(x)).degree() > 0:
        return False
    # multiplicity of the root at infinity = power of y dividing F
    return min(e[1] for e, _ in form.items()) <= 1


def classify_cone_surface(d: int, m: int, form: SparsePoly | None = None) -> ConeReport:
    """Decide the surface F_d(x, y) = z^m with weights (m, m, d) and degree m*d."""
    if d < 1:
        raise ValueError("the form degree d must be >= 1")
    if m < 2:
        raise ValueError("the exponent m must be >= 2")
    checked = None
    if form is not None:
        if len(form.variables) != 2:
            raise ValueError("the form must be in exactly two variables")
        if form.is_zero or any(sum(e) != d for e in form.terms):
            raise ValueError(f"the form must be homogeneous of degree {d}")
        checked = is_squarefree_binary_form(form)
    return ConeReport(
        d=d,
        m=m,
        N=normal_degree(WeightedCI((m, m, d), (m * d,))),
        quasirational=d == 2 or gcd(m, d) == 1,
        solutions_exist=d <= 2 or (d, m) == (3, 2),
        squarefree_checked=checked,
    )
