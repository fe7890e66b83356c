"""Exact polynomials in q and recovery of the Hilbert-Kunz polynomial from
sampled counts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .counting import hilbert_kunz

__all__ = [
    "RationalPolynomial",
    "InterpolationError",
    "interpolate",
    "hk_polynomial",
    "multiplicity",
]

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in q with exact rational coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "RationalPolynomial":
        return cls((c,))

    @classmethod
    def q(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return RationalPolynomial(
            (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(size)
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            mag = abs(c)
            if mono and mag == 1:
                term = mono
            elif mono:
                term = f"({mag})*{mono}" if mag.denominator != 1 else f"{mag}*{mono}"
            else:
                term = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


class InterpolationError(ValueError):
    """Samples are insufficient or disagree with the fitted polynomial."""

    def __init__(self, message: str, q: int | None = None):
        super().__init__(message)
        self.q = q


def interpolate(samples: Sequence[tuple[int, Scalar]], degree_cap: int) -> RationalPolynomial:
    """Fit the first ``degree_cap + 1`` samples exactly (Newton divided
    differences) and insist the fit reproduces every later sample."""
    if degree_cap < 0:
        raise ValueError("degree_cap must be nonnegative")
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise InterpolationError("sample points must be pairwise distinct")
    if len(samples) < degree_cap + 1:
        raise InterpolationError(
            f"need at least {degree_cap + 1} samples, got {len(samples)}"
        )
    fit = samples[: degree_cap + 1]
    nodes = [Fraction(x) for x, _ in fit]
    table = [Fraction(y) for _, y in fit]
    newton = [table[0]]
    for level in range(1, len(fit)):
        table = [
            (table[k + 1] - table[k]) / (nodes[k + level] - nodes[k])
            for k in range(len(table) - 1)
        ]
        newton.append(table[0])

    # Horner in the Newton basis: c0 + (q - x0)(c1 + (q - x1)(c2 + ...)).
    poly = RationalPolynomial.constant(newton[-1])
    for k in range(len(newton) - 2, -1, -1):
        poly = poly * RationalPolynomial((-nodes[k], 1)) + newton[k]

    for x, y in samples[degree_cap + 1 :]:
        if poly(x) != y:
            raise InterpolationError(
                f"degree <= {degree_cap} fit predicts {poly(x)} at q={x}, sample is {y}",
                q=x,
            )
    return poly


def hk_polynomial(m: int, n: int, guard: int = 3) -> RationalPolynomial:
    """HK(m, n, q) as a polynomial in q.

    Fits degree m+n-1 through q = 1..m+n and checks ``guard`` further values.
    """
    if m < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")
    degree = m + n - 1
    samples = [(q, hilbert_kunz(m, n, q)) for q in range(1, degree + 2 + guard)]
    return interpolate(samples, degree)


def multiplicity(m: int, n: int) -> Fraction:
    """Coefficient of q^(m+n-1) in the HK polynomial."""
    poly = hk_polynomial(m, n)
    return poly.coeffs[m + n - 1] if poly.degree >= m + n - 1 else Fraction(0)
