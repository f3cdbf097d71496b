"""Reproduce the two worked sequence tables, factorizations included.

Each row shows the reduced value d_n / n^s for the power-map determinant
sequence of a fixed integer matrix. Entries grow to seventy digits by
n = 16 and still factor in well under a minute because the odd parts are
perfect squares.
"""

import time

from matdivseq import IntMatrix, generate_sequence

MATRICES = [
    ("3x3 example", IntMatrix([[1, -2, -6], [0, 1, 3], [-1, 0, 1]])),
    ("4x4 example", IntMatrix([[-1, 2, 4, -1], [0, 1, -2, 2],
                               [-1, 0, -1, 0], [0, 1, 0, 1]])),
]

for name, x in MATRICES:
    print(f"== {name} ==")
    print(x)
    t0 = time.perf_counter()
    entries = generate_sequence(x, 16, with_factorization=True)
    elapsed = time.perf_counter() - t0
    width = max(len(str(e.reduced)) for e in entries)
    for e in entries:
        print(f"{e.n:2d} | {str(e.reduced):>{width}} | {e.factorization}")
    print(f"(computed and factored in {elapsed:.2f}s)")
    print()
