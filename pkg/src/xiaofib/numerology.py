"""Closed-form arithmetic for dihedral-cover fibrations.

Everything here is exact integer or rational arithmetic: genera of the
cover tower, self-intersections of the embedded curve in D x D, the
finite/positive-dimensional classification of the moduli fiber, bound
checks (Xiao, BGN, Brill-Noether) and the character-by-character
dimension bookkeeping of the cover's canonical system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

FINITE = "finite"
POSITIVE_DIMENSIONAL = "positive_dimensional"


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class CoverParams:
    """Genus g >= 2 of the hyperelliptic curve and odd prime degree p of the etale cover."""

    g: int
    p: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"hyperelliptic genus must be >= 2, got {self.g}")
        if not _is_odd_prime(self.p):
            raise ValueError(f"cover degree must be an odd prime, got {self.p}")


@dataclass(frozen=True)
class FibrationProfile:
    """Fiber genus, relative irregularity, base genus and total irregularity."""

    g_fiber: int
    q_rel: int
    g_base: int
    q_total: int

    def __post_init__(self):
        if self.q_total != self.q_rel + self.g_base:
            raise ValueError("q_total must equal q_rel + g_base")
        if self.q_rel < 0:
            raise ValueError("relative irregularity must be non-negative")
        if self.g_fiber < 2:
            raise ValueError("fiber genus must be at least 2")


@dataclass(frozen=True)
class FiberClass:
    """Fiber classification of the cover-to-curve moduli map."""

    kind: str  # FINITE or POSITIVE_DIMENSIONAL
    dimension: int | None  # 0 for finite; None when positive but not pinned down

    @property
    def finite(self) -> bool:
        return self.kind == FINITE


@dataclass(frozen=True)
class XiaoReport:
    """Bound comparison for one fibration: q_rel against (g_fiber + 1)/2."""

    bound: Fraction
    is_xiao: bool
    meets_ceiling: bool
    bgn_bound_at_generic_clifford: int


@dataclass(frozen=True)
class ChevalleyWeil:
    """Character-space dimensions of the pushed-forward canonical bundle."""

    dims: tuple[int, ...]
    prym_dim: int
    sym2_invariant_dim: int


def cover_genera(params: CoverParams) -> tuple[int, int]:
    """(g_C, g_D): genus of the cyclic cover and of the involution quotient."""
    g, p = params.g, params.p
    g_c = p * (g - 1) + 1
    g_d = (p - 1) * (g - 1) // 2
    return g_c, g_d


def gamma_self_intersection(params: CoverParams) -> int:
    """Self-intersection 8 - 2(g - 1)(p - 2) of the embedded cover curve in D x D."""
    return 8 - 2 * (params.g - 1) * (params.p - 2)


# Fiber dimensions known from the source analysis of the three surface cases.
_KNOWN_FIBER_DIMS = {(2, 5): 1, (3, 3): 2, (4, 3): 1}


def psi_fiber_class(params: CoverParams) -> FiberClass:
    """Finite fibers iff p >= 7, or p = 5 and g >= 3, or p = 3 and g >= 5."""
    g, p = params.g, params.p
    if p >= 7 or (p == 5 and g >= 3) or (p == 3 and g >= 5):
        return FiberClass(FINITE, 0)
    if (g, p) in _KNOWN_FIBER_DIMS:
        return FiberClass(POSITIVE_DIMENSIONAL, _KNOWN_FIBER_DIMS[(g, p)])
    if (g, p) == (2, 3):
        dim_h, dim_m = moduli_dims(params)
        return FiberClass(POSITIVE_DIMENSIONAL, dim_h - dim_m)
    return FiberClass(POSITIVE_DIMENSIONAL, None)


def moduli_dims(params: CoverParams) -> tuple[int, int]:
    """(dim of the cover moduli, dim of the target curve moduli)."""
    g_d = cover_genera(params)[1]
    dim_h = 2 * params.g - 1
    if g_d >= 2:
        dim_m = 3 * g_d - 3
    else:
        dim_m = g_d  # 1 for genus 1, 0 for genus 0
    return dim_h, dim_m


def bgn_bound(g_fiber: int, clifford_index: int | None = None) -> int:
    """Upper bound g - c for the relative irregularity.

    The Clifford index is a caller-supplied parameter, never computed;
    by default it is the generic value floor((g - 1)/2), for which the
    bound becomes ceil((g + 1)/2).
    """
    if g_fiber < 2:
        raise ValueError("fiber genus must be at least 2")
    if clifford_index is None:
        clifford_index = (g_fiber - 1) // 2
    if clifford_index < 0:
        raise ValueError("Clifford index must be non-negative")
    return g_fiber - clifford_index


def xiao_report(g_fiber: int, q_rel: int) -> XiaoReport:
    """Compare q_rel against the bound (g_fiber + 1)/2 and its ceiling."""
    if g_fiber < 2:
        raise ValueError("fiber genus must be at least 2")
    bound = Fraction(g_fiber + 1, 2)
    return XiaoReport(
        bound=bound,
        is_xiao=q_rel > bound,
        meets_ceiling=q_rel == math.ceil(bound),
        bgn_bound_at_generic_clifford=bgn_bound(g_fiber),
    )


def brill_noether_range(q: int, g_a: int) -> bool:
    """True iff q < g_a < 2q - 1."""
    if q < 0 or g_a < 0:
        raise ValueError("irregularity and arithmetic genus must be non-negative")
    return q < g_a < 2 * q - 1


def chevalley_weil(params: CoverParams) -> ChevalleyWeil:
    """Eigenspace dimensions of the canonical system under the cyclic action.

    The trivial character contributes g; each of the p - 1 nontrivial
    torsion twists contributes g - 1 (Riemann-Roch with no sections for
    nontrivial degree-0 twists).  The dimensions sum to g_C, the Prym
    part has dimension (p - 1)(g - 1), and the invariant part of the
    symmetric square pairs characters {i, p - i}, each pair contributing
    (g - 1)^2.
    """
    g, p = params.g, params.p
    dims = (g,) + (g - 1,) * (p - 1)
    prym_dim = (p - 1) * (g - 1)
    sym2_invariant_dim = (p - 1) // 2 * (g - 1) ** 2
    return ChevalleyWeil(dims, prym_dim, sym2_invariant_dim)


def geometric_genus(p_a: int, nodes: int) -> int:
    """Geometric genus of an irreducible curve with the given number of simple nodes."""
    if nodes < 0:
        raise ValueError("node count must be non-negative")
    if nodes > p_a:
        raise ValueError(f"invalid curve: {nodes} nodes exceed arithmetic genus {p_a}")
    return p_a - nodes
