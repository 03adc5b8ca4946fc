"""Chebyshev maps of the interval [-1, 1]: evaluation, derivatives, the
arcsine invariant density, and the preimage structure used by the
transfer-operator identities.

Maps are evaluated through the three-term recurrence rather than
cos(N*arccos(x)); iterated trig calls are slower and the recurrence is what
the hot kernels use. Outputs are clamped to [-1, 1] so that rounding cannot
push an iterate outside the invariant interval (the polynomial diverges
rapidly under iteration once |x| > 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ChebMap:
    """Degree-`order` Chebyshev map, optionally negated.

    The negated second-order map x -> 1 - 2x**2 (the classic Ulam map) shares
    the preimage structure and invariant density of the plain order-2 map but
    flips the sign of the odd part of the stationary velocity density.
    """

    order: int
    negated: bool = False

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("map order must be >= 2 (order 1 is the identity)")
        if self.negated and self.order != 2:
            raise ValueError("the negated (Ulam) variant exists only at order 2")

    @classmethod
    def chebyshev(cls, order: int) -> "ChebMap":
        return cls(order=order)

    @classmethod
    def ulam(cls) -> "ChebMap":
        return cls(order=2, negated=True)

    @property
    def label(self) -> str:
        return "ulam" if self.negated else f"T{self.order}"

    def __call__(self, x):
        return eval_map(self, x)


def _cheb_recurrence(order: int, x):
    """T_order(x) by the recurrence T_{k+1} = 2x T_k - T_{k-1}; order >= 0."""
    if order == 0:
        return np.ones_like(x) if isinstance(x, np.ndarray) else 1.0
    b_prev = np.ones_like(x) if isinstance(x, np.ndarray) else 1.0
    b = x
    for _ in range(order - 1):
        b_prev, b = b, 2.0 * x * b - b_prev
    return b


def _check_domain(x, closed: bool = True):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("map argument must be finite")
    limit_ok = np.abs(arr) <= 1.0 if closed else np.abs(arr) < 1.0
    if not np.all(limit_ok):
        bound = "[-1, 1]" if closed else "(-1, 1)"
        raise ValueError(f"argument outside the map domain {bound}")


def eval_map(m: ChebMap, x):
    """Apply the map to a scalar or array in [-1, 1]; result clamped to [-1, 1]."""
    _check_domain(x)
    scalar = np.isscalar(x) or np.ndim(x) == 0
    val = _cheb_recurrence(m.order, float(x) if scalar else np.asarray(x, dtype=float))
    if m.negated:
        val = -val
    if scalar:
        return min(1.0, max(-1.0, val))
    return np.clip(val, -1.0, 1.0)


def eval_derivative(order: int, x):
    """Derivative of the degree-`order` Chebyshev polynomial.

    Uses T_N' = N * U_{N-1} with the second-kind recurrence, so no trig calls
    and no singularity at the interval endpoints.
    """
    if order < 2:
        raise ValueError("map order must be >= 2")
    _check_domain(x)
    scalar = np.isscalar(x) or np.ndim(x) == 0
    xv = float(x) if scalar else np.asarray(x, dtype=float)
    # U_{k+1} = 2x U_k - U_{k-1}, U_0 = 1, U_1 = 2x
    u_prev = np.ones_like(xv) if not scalar else 1.0
    u = 2.0 * xv
    for _ in range(order - 2):
        u_prev, u = u, 2.0 * xv * u - u_prev
    return order * u


def invariant_density(x):
    """Arcsine density 1/(pi*sqrt(1-x**2)), the natural invariant law of every
    Chebyshev map; diverges at the endpoints, which are rejected."""
    _check_domain(x, closed=False)
    scalar = np.isscalar(x) or np.ndim(x) == 0
    xv = float(x) if scalar else np.asarray(x, dtype=float)
    return 1.0 / (math.pi * math.sqrt(1.0 - xv * xv)) if scalar else 1.0 / (
        np.pi * np.sqrt(1.0 - xv * xv)
    )


@dataclass(frozen=True)
class PreimageSet:
    """The `order` preimages of a point, with their common transfer weight.

    Preimages are listed with multiplicity (a critical point appears twice),
    keeping every downstream preimage sum an `order`-term sum. The weight is
    the common value of h(x)/|T'(x)| across the set, 1/(N*pi*sqrt(1-x'**2));
    it is None at x' = +-1 where it is singular.
    """

    source: float
    points: tuple[float, ...]
    weight: float | None

    @property
    def singular(self) -> bool:
        return self.weight is None


def _preimage_offsets(order: int) -> range:
    # order even: j = -N/2+1 .. N/2 ; order odd: j = -(N-1)/2 .. (N-1)/2
    if order % 2 == 0:
        return range(-order // 2 + 1, order // 2 + 1)
    return range(-(order - 1) // 2, (order - 1) // 2 + 1)


def preimages(order: int, x_prime: float) -> PreimageSet:
    """All order-many preimages of x_prime under the degree-`order` map."""
    if order < 2:
        raise ValueError("map order must be >= 2")
    _check_domain(x_prime)
    xp = float(x_prime)
    u0 = math.acos(xp) / math.pi
    pts = tuple(math.cos(math.pi * (u0 + 2.0 * j / order)) for j in _preimage_offsets(order))
    if abs(xp) < 1.0:
        weight = 1.0 / (order * math.pi * math.sqrt(1.0 - xp * xp))
    else:
        weight = None
    return PreimageSet(source=xp, points=pts, weight=weight)


def preimage_sum(order: int, sum_order: int, x_prime: float) -> float:
    """Sum of T_M over the preimages of x_prime under T_N, for 1 <= M < N.

    Vanishes identically; this is the cancellation that collapses the
    transfer-operator hierarchy for Chebyshev driving.
    """
    if not 1 <= sum_order < order:
        raise ValueError("need 1 <= summed order < map order")
    pts = preimages(order, x_prime).points
    return math.fsum(_cheb_recurrence(sum_order, p) for p in pts)


@dataclass(frozen=True)
class WeightConstancy:
    """Result of checking that h(x)/|T'(x)| is the same at every preimage."""

    ok: bool
    weight: float
    observed: tuple[float, ...]
    excluded: tuple[float, ...]


# Preimages with |T'| below this are critical points (only reachable from
# x' = +-1 up to rounding) and are excluded from the constancy comparison.
_DEGENERATE_DERIVATIVE = 1e-8


def weight_constancy_check(
    order: int, x_prime: float, rel_tol: float = 1e-9
) -> WeightConstancy:
    """Check h(x)/|T'(x)| = 1/(N*pi*sqrt(1-x'**2)) across all preimages."""
    if order < 2:
        raise ValueError("map order must be >= 2")
    xp = float(x_prime)
    if not abs(xp) < 1.0:
        raise ValueError("weight is singular at x' = +-1")
    expected = 1.0 / (order * math.pi * math.sqrt(1.0 - xp * xp))
    observed = []
    excluded = []
    for p in preimages(order, xp).points:
        deriv = abs(eval_derivative(order, p))
        if deriv < _DEGENERATE_DERIVATIVE or abs(p) >= 1.0:
            excluded.append(p)
            continue
        observed.append(invariant_density(p) / deriv)
    ok = all(abs(w - expected) <= rel_tol * expected for w in observed)
    return WeightConstancy(
        ok=ok, weight=expected, observed=tuple(observed), excluded=tuple(excluded)
    )
