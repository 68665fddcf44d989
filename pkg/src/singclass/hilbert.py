"""Plurigenera and Kodaira dimension of quasihomogeneous complete intersections.

A complete intersection A = C[x_1..x_{n+s}]/(f_1..f_s) with weights w_j and
weighted degrees d_i has Hilbert series prod(1 - t^d_i) / prod(1 - t^w_j) and
dualizing module A[N_A], where N_A = sum(d_i) - sum(w_j).  Everything here is
read off from that series:

* delta_m = sum_{mu=0}^{m N_A} dim A_mu (empty when m N_A < 0)
* pbar_m  = dim A_{m N_A}
* log Kodaira dimension is -inf, 0 or dim V - 1 according to the sign of N_A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .exactmath import SeriesSpec, series_coeffs

NEG_INF = -math.inf

__all__ = [
    "NEG_INF",
    "WeightedCI",
    "CIReport",
    "VeroneseReport",
    "normal_degree",
    "graded_dim",
    "graded_dims",
    "delta_table",
    "delta_vanishing",
    "pbar_table",
    "log_kodaira",
    "classify_ci",
    "veronese_analysis",
    "min_rational_veronese_degree",
]


@dataclass(frozen=True)
class WeightedCI:
    """Weights of the ambient coordinates and degrees of the defining equations.

    ``isolated`` records the caller's assumption that the origin is an
    isolated singular point; it is carried into reports, never checked.
    """

    weights: tuple[int, ...]
    degrees: tuple[int, ...]
    isolated: bool = True

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(w <= 0 for w in self.weights) or any(d <= 0 for d in self.degrees):
            raise ValueError("weights and degrees must be positive integers")
        if self.dim < 1:
            raise ValueError(
                f"need more variables than equations: {len(self.weights)} weights, "
                f"{len(self.degrees)} degrees"
            )

    @property
    def ambient(self) -> int:
        return len(self.weights)

    @property
    def codim(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return len(self.weights) - len(self.degrees)


@dataclass(frozen=True)
class CIReport:
    ci: WeightedCI
    normal_degree: int
    is_rational: bool
    log_kodaira: float | int
    delta_table: tuple[int, ...]
    pbar_table: tuple[int, ...]
    quasirational_form_test: bool | None = None
    is_quotient_surface: bool | None = None


@dataclass(frozen=True)
class VeroneseReport:
    ci: WeightedCI
    order: int
    delta_table: tuple[int, ...]
    pbar_table: tuple[int, ...]
    is_rational: bool
    is_quotient: bool
    log_kodaira: float | int
    min_rational_order: int | None = field(default=None)


def normal_degree(ci: WeightedCI) -> int:
    return sum(ci.degrees) - sum(ci.weights)


def graded_dims(ci: WeightedCI, top: int) -> list[int]:
    """dim A_0 .. dim A_top (empty list when top < 0)."""
    if top < 0:
        return []
    return series_coeffs(SeriesSpec(ci.degrees, ci.weights, top))


def graded_dim(ci: WeightedCI, nu: int) -> int:
    if nu < 0:
        return 0
    return graded_dims(ci, nu)[nu]


def delta_table(ci: WeightedCI, m_max: int) -> list[int]:
    if m_max < 1:
        raise ValueError("m_max must be positive")
    n = normal_degree(ci)
    if n < 0:
        return [0] * m_max
    dims = graded_dims(ci, m_max * n)
    partial, acc = [], 0
    for d in dims:
        acc += d
        partial.append(acc)
    return [partial[m * n] for m in range(1, m_max + 1)]


def delta_vanishing(ci: WeightedCI, m_max: int) -> list[bool]:
    """Whether delta_1..delta_{m_max} vanish, without expanding the full series.

    The defining sum runs over dim A_mu for 0 <= mu <= m N_A with non-negative
    terms, so it vanishes exactly when each term does; terms are expanded one
    index at a time and the scan stops at the first nonzero one.
    """
    n = normal_degree(ci)
    out = []
    first_nonzero = None
    for m in range(1, m_max + 1):
        top = m * n
        if top < 0:
            out.append(True)
            continue
        if first_nonzero is None:
            mu = 0
            while mu <= top:
                if graded_dim(ci, mu):
                    first_nonzero = mu
                    break
                mu += 1
        out.append(first_nonzero is None or first_nonzero > top)
    return out


def pbar_table(ci: WeightedCI, m_max: int) -> list[int]:
    if m_max < 1:
        raise ValueError("m_max must be positive")
    n = normal_degree(ci)
    if n < 0:
        return [0] * m_max
    dims = graded_dims(ci, m_max * n)
    return [dims[m * n] for m in range(1, m_max + 1)]


def log_kodaira(ci: WeightedCI) -> float | int:
    n = normal_degree(ci)
    if n < 0:
        return NEG_INF
    if n == 0:
        return 0
    return ci.dim - 1


def classify_ci(ci: WeightedCI, m_max: int = 12, surface_flags: bool | None = None) -> CIReport:
    """Rationality, plurigenera and log Kodaira dimension of a complete intersection.

    The quotient and quasirationality flags are defined for surfaces only; they
    are filled in automatically when dim V = 2, and asking for them explicitly
    on higher dimensional input is an error.
    """
    if surface_flags is None:
        surface_flags = ci.dim == 2
    elif surface_flags and ci.dim != 2:
        raise ValueError(f"quotient/quasirational flags need a surface, got dim {ci.dim}")
    n = normal_degree(ci)
    quasi = quotient = None
    if surface_flags:
        # delta_m >= dim A_0 = 1 as soon as m N_A >= 0, so all delta_m vanish iff N_A < 0
        quotient = n < 0
        quasi = graded_dim(ci, n) == 0
    return CIReport(
        ci=ci,
        normal_degree=n,
        is_rational=n < 0,
        log_kodaira=log_kodaira(ci),
        delta_table=tuple(delta_table(ci, m_max)),
        pbar_table=tuple(pbar_table(ci, m_max)),
        quasirational_form_test=quasi,
        is_quotient_surface=quotient,
    )


def _veronese_indices(order: int, shift: int) -> range:
    # i*order + shift for i <= 0, kept while non-negative
    return range(shift, -1, -order)


def min_rational_veronese_degree(ci: WeightedCI) -> int | None:
    """Smallest order d >= 1 whose Veronese quotient has a rational singularity.

    None when dim A_{N_A} != 0, since the i = 0 term then never vanishes.
    """
    n = normal_degree(ci)
    if n < 0:
        return 1
    dims = graded_dims(ci, n)
    if dims[n]:
        return None
    support = [mu for mu in range(n + 1) if dims[mu]]
    # d = n + 1 always works: every n - mu with mu in support lies in 1..n
    return next(d for d in range(1, n + 2) if all((n - mu) % d for mu in support))


def veronese_analysis(ci: WeightedCI, order: int, m_max: int = 12) -> VeroneseReport:
    """Invariants of the quotient W = V / mu_order, i.e. of a Veronese subring.

    ``order`` = 1 gives back V itself.
    """
    if ci.dim != 2:
        raise ValueError(f"Veronese analysis is implemented for surfaces, got dim {ci.dim}")
    if order < 1:
        raise ValueError("the Veronese order must be a positive integer")
    if m_max < 1:
        raise ValueError("m_max must be positive")
    n = normal_degree(ci)
    top = max(m_max * n, n, 0)
    dims = graded_dims(ci, top)

    def dim(nu: int) -> int:
        return dims[nu] if nu >= 0 else 0

    deltas = tuple(sum(dim(k) for k in _veronese_indices(order, m * n)) for m in range(1, m_max + 1))
    rational = all(dim(k) == 0 for k in _veronese_indices(order, n))
    return VeroneseReport(
        ci=ci,
        order=order,
        delta_table=deltas,
        pbar_table=tuple(pbar_table(ci, m_max)),
        is_rational=rational,
        is_quotient=n < 0,
        log_kodaira=log_kodaira(ci),
        min_rational_order=min_rational_veronese_degree(ci),
    )
