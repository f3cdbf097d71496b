"""Exact linear algebra over the integers.

Matrices are immutable, square, and hold native Python integers, so every
operation is exact regardless of how large the entries grow. No floats,
no modular shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Square integer matrix with value semantics.

    ``entries`` is stored row-major as a tuple of tuples; any nested
    iterable of ints is accepted and normalized on construction.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows:
            raise ValueError("matrix must have at least one row")
        for row in rows:
            if len(row) != len(rows):
                raise ValueError("matrix must be square")
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ValueError("integer entries required")

    @classmethod
    def identity(cls, dim: int) -> "IntMatrix":
        if dim < 1:
            raise ValueError("dimension must be positive")
        return cls(tuple(tuple(1 if i == j else 0 for j in range(dim))
                         for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.dim))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def fingerprint(self) -> str:
        """Compact canonical description, e.g. ``2x2 [[1,1],[1,0]]``."""
        rows = ",".join("[" + ",".join(str(v) for v in row) + "]"
                        for row in self.entries)
        return f"{self.dim}x{self.dim} [{rows}]"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


def mat_add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    return IntMatrix(tuple(tuple(x + y for x, y in zip(ra, rb))
                           for ra, rb in zip(a.entries, b.entries)))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    bt = tuple(zip(*b.entries))
    return IntMatrix(tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                           for row in a.entries))


def mat_pow(x: IntMatrix, n: int) -> IntMatrix:
    """Exact n-th power by binary exponentiation; ``x**0`` is the identity."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    result = IntMatrix.identity(x.dim)
    base = x
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def kronecker(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Kronecker product: block (i, j) of the result is ``a[i][j] * b``."""
    sa, sb = a.dim, b.dim
    rows = []
    for i in range(sa):
        arow = a.entries[i]
        for p in range(sb):
            brow = b.entries[p]
            rows.append(tuple(aij * bpq for aij in arow for bpq in brow))
    return IntMatrix(tuple(rows))


def vec(a: IntMatrix) -> tuple[int, ...]:
    """Column-stacking embedding of an s x s matrix into a length s^2 vector."""
    s = a.dim
    return tuple(a.entries[i][j] for j in range(s) for i in range(s))


def mat_vec(a: IntMatrix, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != a.dim:
        raise ValueError("dimension mismatch")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a.entries)


def det_bareiss(a: IntMatrix) -> int:
    """Exact signed determinant by fraction-free (Bareiss) elimination.

    Every interior division is exact by construction; a nonzero remainder
    would mean the elimination is broken, so it raises immediately.
    """
    n = a.dim
    m = [list(row) for row in a.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pkk = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                num = row_i[j] * pkk - mik * row_k[j]
                q, r = divmod(num, prev)
                if r:
                    raise AssertionError("non-exact division in fraction-free elimination")
                row_i[j] = q
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def jacobian_power_map(x: IntMatrix, n: int) -> IntMatrix:
    """Derivative of the power map X -> X^n as an s^2 x s^2 integer matrix.

    Computed as the closed sum of Kronecker products
    ``sum_{k=0}^{n-1} (X^T)^k (x) X^(n-1-k)``; with the column-stacking
    ``vec`` convention this matrix satisfies
    ``J_n . vec(E) == vec(power_map_derivative(x, E, n))``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    xt = x.transpose()
    xt_pows = [IntMatrix.identity(x.dim)]
    x_pows = [IntMatrix.identity(x.dim)]
    for _ in range(n - 1):
        xt_pows.append(mat_mul(xt_pows[-1], xt))
        x_pows.append(mat_mul(x_pows[-1], x))
    total = kronecker(xt_pows[0], x_pows[n - 1])
    for k in range(1, n):
        total = mat_add(total, kronecker(xt_pows[k], x_pows[n - 1 - k]))
    return total


def power_map_derivative(x: IntMatrix, e: IntMatrix, n: int) -> IntMatrix:
    """Directional derivative of X -> X^n at ``x`` in direction ``e``.

    Equals ``sum_{k=0}^{n-1} x^k e x^(n-1-k)``; for e = I this collapses
    to ``n * x^(n-1)``.
    """
    if e.dim != x.dim:
        raise ValueError("dimension mismatch")
    if n < 1:
        raise ValueError("n must be positive")
    x_pows = [IntMatrix.identity(x.dim)]
    for _ in range(n - 1):
        x_pows.append(mat_mul(x_pows[-1], x))
    total = None
    for k in range(n):
        term = mat_mul(mat_mul(x_pows[k], e), x_pows[n - 1 - k])
        total = term if total is None else mat_add(total, term)
    return total
