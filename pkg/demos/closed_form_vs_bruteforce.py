"""Two routes to the same determinant, and why the closed form wins.

The brute-force route builds the s^2 x s^2 derivative matrix of X -> X^n
and takes its determinant. The closed form stays in degree-s polynomial
land: n^s * det(X)^(n-1) * disc(g_n)/disc(f), where f is the
characteristic polynomial and g_n has the n-th powers of its roots.

Both are exact; this script checks they agree and times them as n grows.
It also prints the n^2 variant of the formula, which matches the true
determinant only in dimension 2 (where n^s and n^2 coincide).
"""

import random
import time

from matdivseq import (IntMatrix, char_poly, det_bareiss, discriminant,
                       discriminant_ratio, jacobian_determinant)

x = IntMatrix([[1, -2, -6], [0, 1, 3], [-1, 0, 1]])
s = x.dim
f = char_poly(x)
det_x = det_bareiss(x)
print("X =")
print(x)
print(f"characteristic polynomial: {f}, discriminant {discriminant(f)}")
print()

print(" n   n^2 variant        true determinant     brute (ms)  closed (ms)")
for n in (2, 4, 8, 16, 32, 64):
    t0 = time.perf_counter()
    brute = jacobian_determinant(x, n)
    t1 = time.perf_counter()
    reduced = det_x ** (n - 1) * discriminant_ratio(x, n)
    closed = n ** s * reduced
    t2 = time.perf_counter()
    assert brute == closed
    n_squared = n * n * reduced
    print(f"{n:3d}  {str(n_squared)[:16]:<17}  {str(closed)[:16]:<19}  "
          f"{1000 * (t1 - t0):9.2f}  {1000 * (t2 - t1):10.2f}")

print()
print("The n^2 variant is wrong for this 3x3 matrix (off by a factor n^(s-2));")
print("the n^s form always matches the brute-force determinant.")
print()

rng = random.Random(1)
print("Cross-checking 25 random matrices (dims 2 to 4, n up to 8):")
checked = 0
while checked < 25:
    dim = rng.choice((2, 3, 4))
    y = IntMatrix([[rng.randint(-5, 5) for _ in range(dim)] for _ in range(dim)])
    fy = char_poly(y)
    if dim > 1 and discriminant(fy) == 0:
        continue
    dety = det_bareiss(y)
    for n in range(1, 9):
        assert jacobian_determinant(y, n) == n ** dim * dety ** (n - 1) * discriminant_ratio(y, n)
    checked += 1
print("all agree, exactly.")
