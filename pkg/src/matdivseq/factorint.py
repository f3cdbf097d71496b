"""Integer factorization sized for the sequence tables.

The ladder is: trial division up to one million, perfect-power reduction,
then Brent's variant of Pollard rho with fixed (non-random) parameters and
a step budget. Values whose unfactored part survives the budget come back
with a composite cofactor instead of hanging.

Sequence values are near-perfect squares (the odd part of d_n / n^s is a
square whenever det(X)^(n-1) > 0), so the perfect-power step routinely
halves the digit count before rho has to do any work.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Factorization:
    """Signed factorization ``sign * prod(p^e) * cofactor``.

    ``factors`` is sorted by prime; ``cofactor`` is a composite remainder
    left when the rho budget ran out, or None when the factorization is
    complete. Rendered form: ``2^6 5^2 11^2``, with a cofactor shown in
    square brackets.
    """

    sign: int
    factors: tuple[tuple[int, int], ...] = ()
    cofactor: int | None = None

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        if self.sign == 0 and (self.factors or self.cofactor is not None):
            raise ValueError("zero has no factors")
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError("factors must be ascending primes with positive exponents")
            prev = p
        if self.cofactor is not None and self.cofactor <= 1:
            raise ValueError("cofactor must exceed 1")

    @property
    def complete(self) -> bool:
        return self.cofactor is None

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p ** e
        if self.cofactor is not None:
            v *= self.cofactor
        return v

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.cofactor is not None:
            parts.append(f"[{self.cofactor}]")
        body = " ".join(parts) if parts else "1"
        return f"-{body}" if self.sign < 0 else body


# Bases of primes through 41 decide primality for n < 3317044064679887385961981
# (about 3.3e24); above that the same test with primes through 97 is a strong
# probable-prime check with no known counterexample.
_DETERMINISTIC_BOUND = 3317044064679887385961981
_SMALL_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_LARGE_BASES = _SMALL_BASES + (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

TRIAL_LIMIT = 1_000_000
RHO_STEP_BUDGET = 1 << 22


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test with fixed bases (see module constants).

    Deterministic below 3.3e24, strong probable prime above.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n < 2:
        return False
    for p in _SMALL_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _SMALL_BASES if n < _DETERMINISTIC_BOUND else _LARGE_BASES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, budget: list[int]) -> int | None:
    """One nontrivial factor of odd composite ``n``, or None if the budget ran out.

    Parameters are a fixed sequence (y0 = 2, polynomial constant c = 1, 2, ...)
    so runs are reproducible; gcds are batched 128 steps at a time.
    """
    c = 1
    while budget[0] > 0:
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        while g == 1 and budget[0] > 0:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                g = gcd(q, n)
                k += 128
            budget[0] -= 2 * r
            r *= 2
        if g == n:
            # The batch overshot a factor; replay single steps from the last
            # checkpoint to isolate it.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
        c += 1
    return None


def _exact_root(n: int, k: int) -> int:
    """Floor of the k-th root of ``n`` by bisection."""
    if n < 2:
        return n
    hi = 1 << (n.bit_length() // k + 2)
    lo = 0
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid ** k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def _factor_rough(m: int, mult: int, counts: dict[int, int],
                  leftovers: list[int], budget: list[int]) -> None:
    """Factor ``m`` (no prime factor <= TRIAL_LIMIT), adding ``mult`` per hit."""
    if m == 1:
        return
    if is_prime(m):
        counts[m] = counts.get(m, 0) + mult
        return
    k = 2
    while k <= m.bit_length():
        root = _exact_root(m, k)
        if root ** k == m:
            _factor_rough(root, mult * k, counts, leftovers, budget)
            return
        k += 1
    d = _brent_rho(m, budget)
    if d is None:
        leftovers.extend([m] * mult)
        return
    _factor_rough(d, mult, counts, leftovers, budget)
    _factor_rough(m // d, mult, counts, leftovers, budget)


def factorize(n: int, rho_steps: int = RHO_STEP_BUDGET) -> Factorization:
    """Factor any integer; incompleteness is represented, never raised.

    Factors found past the trial-division bound are certified by
    :func:`is_prime`; ``rho_steps`` bounds the total work spent splitting
    what remains, after which the product of the unsplit pieces is
    reported as a composite cofactor.
    """
    if n == 0:
        return Factorization(sign=0)
    sign = -1 if n < 0 else 1
    m = abs(n)
    counts: dict[int, int] = {}
    p = 2
    while p <= TRIAL_LIMIT and p * p <= m:
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        if p * p > m:
            # No divisor up to sqrt(m) exists, so the remainder is prime.
            counts[m] = counts.get(m, 0) + 1
        else:
            leftovers: list[int] = []
            _factor_rough(m, 1, counts, leftovers, [rho_steps])
            if leftovers:
                co = 1
                for piece in leftovers:
                    co *= piece
                return Factorization(sign=sign, factors=tuple(sorted(counts.items())),
                                     cofactor=co)
    return Factorization(sign=sign, factors=tuple(sorted(counts.items())))
