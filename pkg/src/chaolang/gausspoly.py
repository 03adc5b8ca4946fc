"""Exact algebra of polynomial-times-Gaussian functions q(y)*exp(-2*y**2).

Every analytic stationary density and correction term in this package is a
rational-coefficient polynomial multiplying the fixed Gaussian factor
exp(-2*y**2) (the variance-1/4 law). Working with exact fractions lets the
stationarity identities be checked for *exact* zero instead of "residual
smaller than some tolerance".

Key facts used throughout:
    d/dy [q * G] = (q' - 4*y*q) * G            with G = exp(-2*y**2)
    integral of y**(2k) * G over the real line = sqrt(pi/2) * (2k-1)!! / 4**k
(odd powers integrate to zero). Integrals are therefore reported as exact
rational multiples of sqrt(pi/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

RationalLike = Union[Fraction, int, str]


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, coeffs[k] multiplying y**k."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(_as_fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike]) -> "RationalPoly":
        return cls(tuple(_as_fraction(c) for c in coeffs))

    @classmethod
    def from_terms(cls, terms: Mapping[int, RationalLike]) -> "RationalPoly":
        """Build from a {power: coefficient} mapping, e.g. {3: "-8/3", 1: 2}."""
        if not terms:
            return cls.zero()
        coeffs = [Fraction(0)] * (max(terms) + 1)
        for power, coeff in terms.items():
            if power < 0:
                raise ValueError("negative powers are not polynomials")
            coeffs[power] = _as_fraction(coeff)
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for k, c in enumerate(other.coeffs):
            a[k] += c
        return RationalPoly(tuple(a))

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "RationalPoly":
        f = _as_fraction(factor)
        return RationalPoly(tuple(f * c for c in self.coeffs))

    def shift_up(self) -> "RationalPoly":
        """Multiply by y (shift every coefficient one power up)."""
        if self.is_zero():
            return self
        return RationalPoly((Fraction(0),) + self.coeffs)

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def __call__(self, y):
        """Evaluate by Horner's rule; exact for Fraction input, float otherwise."""
        acc = Fraction(0) if isinstance(y, Fraction) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * y + (c if isinstance(y, Fraction) else float(c))
        return acc

    def float_coeffs(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = f"{mag}"
            else:
                yk = "y" if k == 1 else f"y^{k}"
                body = yk if mag == 1 else f"{mag}*{yk}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def double_factorial(n: int) -> int:
    """(n)!! with the empty-product convention (-1)!! = 1."""
    if n < -1:
        raise ValueError("double factorial undefined below -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def gaussian_power_integral(power: int) -> Fraction:
    """Exact c with integral of y**power * exp(-2*y**2) dy = c * sqrt(pi/2)."""
    if power < 0:
        raise ValueError("power must be non-negative")
    if power % 2 == 1:
        return Fraction(0)
    k = power // 2
    return Fraction(double_factorial(2 * k - 1), 4**k)


@dataclass(frozen=True)
class PolyGauss:
    """The function poly(y) * exp(-2*y**2), with exact polynomial part."""

    poly: RationalPoly

    @classmethod
    def from_terms(cls, terms: Mapping[int, RationalLike]) -> "PolyGauss":
        return cls(RationalPoly.from_terms(terms))

    @classmethod
    def zero(cls) -> "PolyGauss":
        return cls(RationalPoly.zero())

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __add__(self, other: "PolyGauss") -> "PolyGauss":
        return PolyGauss(self.poly + other.poly)

    def __neg__(self) -> "PolyGauss":
        return PolyGauss(-self.poly)

    def __sub__(self, other: "PolyGauss") -> "PolyGauss":
        return PolyGauss(self.poly - other.poly)

    def scale(self, factor: RationalLike) -> "PolyGauss":
        return PolyGauss(self.poly.scale(factor))

    def multiply_by_y(self) -> "PolyGauss":
        return PolyGauss(self.poly.shift_up())

    def differentiate(self) -> "PolyGauss":
        # d/dy [q G] = (q' - 4 y q) G
        q = self.poly
        return PolyGauss(q.derivative() - q.shift_up().scale(4))

    def integrate_real_line(self) -> Fraction:
        """Exact c such that the integral over the real line equals c*sqrt(pi/2)."""
        return sum(
            (c * gaussian_power_integral(k) for k, c in enumerate(self.poly.coeffs)),
            Fraction(0),
        )

    def moment(self, power: int) -> Fraction:
        """Exact c with integral of y**power * poly(y) * G equal to c*sqrt(pi/2)."""
        f = self
        for _ in range(power):
            f = f.multiply_by_y()
        return f.integrate_real_line()

    def __call__(self, y: float) -> float:
        return self.poly(float(y)) * math.exp(-2.0 * y * y)

    def __str__(self) -> str:
        return f"({self.poly}) * exp(-2*y^2)"


def stationary_fp_apply(f: PolyGauss, diffusion: RationalLike = Fraction(1, 4)) -> PolyGauss:
    """Stationary relaxation operator d/dy(y*f) + D*d2/dy2(f), exactly.

    Built from the primitive operations rather than a pre-reduced formula;
    the reduced polynomial identity for D = 1/4 is asserted in tests, not
    assumed here.
    """
    d = _as_fraction(diffusion)
    if d <= 0:
        raise ValueError("diffusion constant must be positive")
    drift = f.multiply_by_y().differentiate()
    spread = f.differentiate().differentiate().scale(d)
    return drift + spread
