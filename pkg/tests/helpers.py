"""Shared test utilities: independent oracles and random matrix generators."""

from matdivseq import IntMatrix, mat_mul


def det_cofactor(rows):
    """Naive cofactor-expansion determinant. Exponential; dim <= 4 only.

    Kept deliberately independent of the fraction-free implementation so
    the two can check each other.
    """
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * det_cofactor(minor)
    return total


def random_matrix(rng, dim, lo=-5, hi=5):
    return IntMatrix([[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)])


def unimodular_pair(rng, dim, ops=8):
    """Random unimodular matrix with its exact inverse.

    Built from elementary row operations (adds and swaps), so the
    determinant is +-1 and the inverse is assembled from the inverse
    operations in reverse order.
    """
    p = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    trail = []
    for _ in range(ops):
        if rng.random() < 0.25:
            i, j = rng.sample(range(dim), 2)
            p[i], p[j] = p[j], p[i]
            trail.append(("swap", i, j))
        else:
            i, j = rng.sample(range(dim), 2)
            c = rng.randint(-2, 2)
            for k in range(dim):
                p[i][k] += c * p[j][k]
            trail.append(("add", i, j, c))
    q = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for op in reversed(trail):
        if op[0] == "swap":
            _, i, j = op
            q[i], q[j] = q[j], q[i]
        else:
            _, i, j, c = op
            for k in range(dim):
                q[i][k] -= c * q[j][k]
    pm = IntMatrix(tuple(tuple(r) for r in p))
    qm = IntMatrix(tuple(tuple(r) for r in q))
    assert mat_mul(pm, qm) == IntMatrix.identity(dim)
    return pm, qm
