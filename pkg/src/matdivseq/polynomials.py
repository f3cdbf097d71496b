"""Characteristic polynomials, power sums, resultants and discriminants.

Everything here stays in exact integer arithmetic. Eigenvalues are never
materialized: symmetric functions of the roots are pushed around instead,
via Newton's identities and resultants.

Coefficients are stored leading-first, so ``(1, -3, -3, -1)`` is
``x^3 - 3x^2 - 3x - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import IntMatrix, det_bareiss, mat_mul


class NotRealizableError(ValueError):
    """Raised when power sums do not belong to any monic integer polynomial."""


@dataclass(frozen=True)
class MonicIntPolynomial:
    """Monic polynomial with integer coefficients, degree >= 1."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) < 2:
            raise ValueError("degree must be at least 1")
        if coeffs[0] != 1:
            raise ValueError("leading coefficient must be 1")
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError("integer coefficients required")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def derivative(self) -> tuple[int, ...]:
        """Leading-first coefficients of the derivative (not monic)."""
        d = self.degree
        return tuple(self.coefficients[i] * (d - i) for i in range(d))

    def __str__(self) -> str:
        parts = []
        d = self.degree
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = d - i
            mag = abs(c)
            if power == 0:
                term = str(mag)
            elif power == 1:
                term = "x" if mag == 1 else f"{mag}x"
            else:
                term = f"x^{power}" if mag == 1 else f"{mag}x^{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class PowerSums:
    """Power sums p_0..p_N of the roots of a monic integer polynomial.

    ``values[0]`` is p_0, the number of roots, i.e. the polynomial degree.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("p_0 is required")
        if vals[0] < 1:
            raise ValueError("p_0 must equal a positive degree")

    @property
    def count(self) -> int:
        return len(self.values) - 1

    @property
    def degree(self) -> int:
        return self.values[0]


def char_poly(x: IntMatrix) -> MonicIntPolynomial:
    """Characteristic polynomial det(tI - X), monic of degree ``x.dim``.

    Uses the Faddeev-LeVerrier recurrence; the division by the step index
    is exact for every integer matrix, so a remainder is a hard error.
    """
    s = x.dim
    coeffs = [1]
    m = IntMatrix(tuple(tuple(0 for _ in range(s)) for _ in range(s)))
    for k in range(1, s + 1):
        xm = mat_mul(x, m)
        m = IntMatrix(tuple(tuple(xm.entries[i][j] + (coeffs[k - 1] if i == j else 0)
                                  for j in range(s))
                            for i in range(s)))
        t = mat_mul(x, m).trace
        q, r = divmod(-t, k)
        if r:
            raise AssertionError("non-exact division in characteristic polynomial recurrence")
        coeffs.append(q)
    return MonicIntPolynomial(tuple(coeffs))


def power_sums(f: MonicIntPolynomial, count: int) -> PowerSums:
    """Power sums p_0..p_count of the roots of ``f`` via Newton's identities.

    For k beyond the degree the linear recurrence given by the coefficients
    takes over; all values are integers, no division occurs.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    d = f.degree
    # e[i] = i-th elementary symmetric function = (-1)^i * coefficient
    e = [(-1) ** i * f.coefficients[i] for i in range(d + 1)]
    p = [d]
    for k in range(1, count + 1):
        if k <= d:
            acc = sum((-1) ** (i - 1) * e[i] * p[k - i] for i in range(1, k))
            acc += (-1) ** (k - 1) * k * e[k]
        else:
            acc = sum((-1) ** (i - 1) * e[i] * p[k - i] for i in range(1, d + 1))
        p.append(acc)
    return PowerSums(tuple(p))


def poly_from_power_sums(p: PowerSums, degree: int) -> MonicIntPolynomial:
    """The unique monic polynomial of the given degree with power sums p_1..p_d.

    Inverse Newton identities divide by k at step k; when that division is
    not exact no monic integer polynomial has these power sums and
    :class:`NotRealizableError` is raised.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    if p.count < degree:
        raise ValueError("need power sums up to the requested degree")
    e = [1]
    for k in range(1, degree + 1):
        acc = sum((-1) ** (i - 1) * e[k - i] * p.values[i] for i in range(1, k + 1))
        q, r = divmod(acc, k)
        if r:
            raise NotRealizableError(f"power sums are not realizable over the integers "
                                     f"(division by {k} leaves remainder {r})")
        e.append(q)
    return MonicIntPolynomial(tuple((-1) ** i * e[i] for i in range(degree + 1)))


def power_polynomial(f: MonicIntPolynomial, n: int) -> MonicIntPolynomial:
    """Monic polynomial whose roots are the n-th powers of the roots of ``f``.

    The power sums of the new roots are p_n, p_2n, ..., p_dn of the old
    ones, so this is power sum extraction followed by inverse Newton.
    """
    if n < 1:
        raise ValueError("n must be positive")
    d = f.degree
    p = power_sums(f, d * n)
    picked = PowerSums((d,) + tuple(p.values[k * n] for k in range(1, d + 1)))
    return poly_from_power_sums(picked, d)


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> IntMatrix:
    """Sylvester matrix of two leading-first coefficient sequences."""
    m, n = len(f) - 1, len(g) - 1
    if m < 1 or n < 1:
        raise ValueError("both polynomials must have degree at least 1")
    size = m + n
    rows = []
    for i in range(n):
        rows.append(tuple([0] * i + list(f) + [0] * (size - m - 1 - i)))
    for j in range(m):
        rows.append(tuple([0] * j + list(g) + [0] * (size - n - 1 - j)))
    return IntMatrix(tuple(rows))


def _coefficients_of(g) -> tuple[int, ...]:
    coeffs = tuple(getattr(g, "coefficients", g))
    if len(coeffs) < 2:
        raise ValueError("degree must be at least 1")
    if coeffs[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    return coeffs


def resultant(f: MonicIntPolynomial, g) -> int:
    """Exact resultant of ``f`` and ``g`` (a polynomial or coefficient sequence).

    Computed as the determinant of the Sylvester matrix. For monic ``f``
    this equals the product of ``g`` evaluated at the roots of ``f``.
    """
    return det_bareiss(sylvester_matrix(f.coefficients, _coefficients_of(g)))


def discriminant(f: MonicIntPolynomial) -> int:
    """Discriminant of monic ``f``: the squared product of root differences.

    Zero exactly when ``f`` has a repeated root. Sign convention:
    ``(-1)^(d(d-1)/2) * resultant(f, f')``.
    """
    d = f.degree
    if d < 2:
        raise ValueError("discriminant requires degree at least 2")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative())
