"""Determinant divisibility sequences of matrix power maps.

For a square integer matrix X of dimension s, the derivative of the power
map X -> X^n is a linear map on matrix space whose determinant d_n forms a
divisibility sequence: n | m implies d_n | d_m. This module computes d_n
three ways and cross-checks them:

* :func:`jacobian_determinant` takes the exact determinant of the
  s^2 x s^2 derivative matrix. Brute force, valid for every integer X.
* :func:`closed_form_entry` evaluates ``n^s * det(X)^(n-1) * R_n`` where
  ``R_n = discriminant(g_n) / discriminant(f)``, f the characteristic
  polynomial and g_n its power polynomial. Requires distinct eigenvalues
  (nonzero discriminant); otherwise it falls back to the brute-force route
  and flags the entry.
* :func:`lucas_2x2` is the classical Lucas-sequence form, 2x2 only:
  ``n^2 * det(X)^(n-1) * U_n^2``.

An ``n^2`` variant of the closed form (same product but with ``n^2`` in
place of ``n^s``) is carried alongside for comparison; it agrees with the
Jacobian determinant only when s = 2, and verification reports record the
difference as informational rather than as a failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .factorint import Factorization, factorize
from .linalg import IntMatrix, det_bareiss, jacobian_power_map
from .polynomials import MonicIntPolynomial, char_poly, discriminant, power_polynomial


class RepeatedEigenvalueError(ValueError):
    """The characteristic polynomial has a repeated root.

    The discriminant-ratio closed form is undefined here; callers should
    use :func:`jacobian_determinant` (as :func:`closed_form_entry` does
    automatically).
    """


@dataclass(frozen=True)
class SequenceEntry:
    """One row of a computed sequence.

    ``jacobian_det`` is the full determinant d_n. ``reduced`` is
    d_n / n^s, the value the factor tables are built from; it is None only
    when the fallback path ran and d_n was not divisible by n^s.
    ``n_squared_value`` is the n^2 variant (None on the fallback path).
    """

    n: int
    jacobian_det: int
    reduced: int | None
    n_squared_value: int | None
    fallback_used: bool
    factorization: Factorization | None = None


@dataclass(frozen=True)
class PairCheck:
    """Divisibility check of one pair n | m."""

    n: int
    m: int
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of closed-form and divisibility verification.

    ``mismatches`` are hard failures (the closed form disagreeing with the
    Jacobian determinant); ``notes`` are informational only and never fail
    the report.
    """

    fingerprint: str
    n_max: int
    column: str | None = None
    pairs: tuple[PairCheck, ...] = ()
    mismatches: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.mismatches and all(p.passed for p in self.pairs)


def jacobian_determinant(x: IntMatrix, n: int) -> int:
    """Determinant of the power-map derivative, the ground-truth value d_n."""
    return det_bareiss(jacobian_power_map(x, n))


def _spectral(x: IntMatrix) -> tuple[MonicIntPolynomial, int | None, int, bool]:
    """Characteristic polynomial, its discriminant, det(x), eigenvalue distinctness."""
    f = char_poly(x)
    s = x.dim
    det_x = (-1) ** s * f.coefficients[-1]
    if s == 1:
        return f, None, det_x, True
    disc_f = discriminant(f)
    return f, disc_f, det_x, disc_f != 0


def _ratio(f: MonicIntPolynomial, disc_f: int | None, n: int) -> int:
    if f.degree == 1:
        return 1
    g = power_polynomial(f, n)
    q, r = divmod(discriminant(g), disc_f)
    if r:
        raise AssertionError("discriminant ratio is not an integer")
    return q


def discriminant_ratio(x: IntMatrix, n: int) -> int:
    """The squared product of (a_i^n - a_j^n)/(a_i - a_j) over eigenvalue pairs.

    Evaluated exactly as discriminant(g_n) / discriminant(f) without ever
    touching the eigenvalues; the quotient is always an exact integer.
    Raises :class:`RepeatedEigenvalueError` when f has a repeated root.
    """
    if n < 1:
        raise ValueError("n must be positive")
    f, disc_f, _, distinct = _spectral(x)
    if not distinct:
        raise RepeatedEigenvalueError(
            "characteristic polynomial has a repeated root; "
            "compute via jacobian_determinant instead")
    return _ratio(f, disc_f, n)


def _entry(x: IntMatrix, spectral, n: int) -> SequenceEntry:
    f, disc_f, det_x, distinct = spectral
    s = x.dim
    if distinct:
        # det_x ** 0 == 1 even for singular x, so n = 1 is always safe.
        reduced = det_x ** (n - 1) * _ratio(f, disc_f, n)
        return SequenceEntry(n=n, jacobian_det=n ** s * reduced, reduced=reduced,
                             n_squared_value=n * n * reduced, fallback_used=False)
    d = jacobian_determinant(x, n)
    q, r = divmod(d, n ** s)
    return SequenceEntry(n=n, jacobian_det=d, reduced=q if r == 0 else None,
                         n_squared_value=None, fallback_used=True)


def closed_form_entry(x: IntMatrix, n: int) -> SequenceEntry:
    """Compute d_n by the closed form, falling back to brute force if needed.

    With distinct eigenvalues the entry is built from the discriminant
    ratio and never touches the s^2 x s^2 matrix. With a repeated
    eigenvalue the Jacobian determinant is computed directly and
    ``fallback_used`` is set.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return _entry(x, _spectral(x), n)


def lucas_2x2(x: IntMatrix, n: int) -> int:
    """d_n for a 2x2 matrix via the Lucas sequence of its trace and determinant.

    U_1 = 1, U_2 = trace, U_k = trace * U_(k-1) - det * U_(k-2), and
    d_n = n^2 * det^(n-1) * U_n^2. Agrees with
    :func:`jacobian_determinant` for every 2x2 integer matrix.
    """
    if x.dim != 2:
        raise ValueError("lucas_2x2 requires a 2x2 matrix")
    if n < 1:
        raise ValueError("n must be positive")
    a = x.trace
    q = det_bareiss(x)
    u_prev, u = 0, 1
    for _ in range(n - 1):
        u_prev, u = u, a * u - q * u_prev
    return n * n * q ** (n - 1) * u * u


def generate_sequence(x: IntMatrix, n_max: int,
                      with_factorization: bool = False) -> list[SequenceEntry]:
    """Entries for n = 1..n_max, optionally with the reduced value factorized."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    spectral = _spectral(x)
    entries = []
    for n in range(1, n_max + 1):
        entry = _entry(x, spectral, n)
        if with_factorization and entry.reduced is not None:
            entry = SequenceEntry(n=entry.n, jacobian_det=entry.jacobian_det,
                                  reduced=entry.reduced,
                                  n_squared_value=entry.n_squared_value,
                                  fallback_used=entry.fallback_used,
                                  factorization=factorize(entry.reduced))
        entries.append(entry)
    return entries


def _divides(a: int, b: int) -> bool:
    # Every integer divides 0; 0 divides only 0.
    if a == 0:
        return b == 0
    return b % a == 0


def verify_divisibility(entries: list[SequenceEntry], column: str = "reduced",
                        fingerprint: str = "") -> VerificationReport:
    """Check d_n | d_m for every pair n | m covered by ``entries``.

    ``column`` selects which value is checked: "reduced" or "jacobian".
    Pairs with a missing reduced value are skipped and noted.
    """
    if column not in ("reduced", "jacobian"):
        raise ValueError("column must be 'reduced' or 'jacobian'")
    values: dict[int, int | None] = {}
    for e in entries:
        values[e.n] = e.reduced if column == "reduced" else e.jacobian_det
    n_max = max(values) if values else 0
    pairs = []
    notes = []
    for n in sorted(values):
        for m in range(2 * n, n_max + 1, n):
            if m not in values:
                continue
            vn, vm = values[n], values[m]
            if vn is None or vm is None:
                notes.append(f"pair ({n}, {m}) skipped: value missing")
                continue
            pairs.append(PairCheck(n=n, m=m, passed=_divides(vn, vm)))
    return VerificationReport(fingerprint=fingerprint, n_max=n_max, column=column,
                              pairs=tuple(pairs), notes=tuple(notes))


def verify_closed_form(x: IntMatrix, n_max: int) -> VerificationReport:
    """Compare the closed form against the Jacobian determinant for n <= n_max.

    A disagreement of the n^s form is a hard mismatch. The n^2 variant is
    compared as well; for dimensions other than 2 its disagreement is
    expected and recorded as an informational note.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    s = x.dim
    spectral = _spectral(x)
    _f, _disc, _det, distinct = spectral
    mismatches = []
    notes = []
    if not distinct:
        notes.append("repeated eigenvalues: closed form unavailable, "
                     "entries use the Jacobian determinant directly")
    n_squared_note_done = False
    for n in range(1, n_max + 1):
        oracle = jacobian_determinant(x, n)
        if not distinct:
            continue
        entry = _entry(x, spectral, n)
        if entry.jacobian_det != oracle:
            mismatches.append(f"n={n}: closed form {entry.jacobian_det} "
                              f"!= Jacobian determinant {oracle}")
        if entry.n_squared_value != oracle and not n_squared_note_done:
            notes.append(f"informational: n^2 variant gives {entry.n_squared_value} "
                         f"at n={n} but the Jacobian determinant is {oracle} "
                         f"(dim {s} carries n^{s})")
            n_squared_note_done = True
    return VerificationReport(fingerprint=x.fingerprint(), n_max=n_max,
                              mismatches=tuple(mismatches), notes=tuple(notes))
