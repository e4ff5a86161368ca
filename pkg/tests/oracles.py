"""Independent double-precision reference implementations used by the tests.

Nothing here imports the package under test.
"""

import cmath
import math
import random


def qnum(n, r, s):
    return math.sin(n * s * math.pi / r) / math.sin(s * math.pi / r)


def qfact(n, r, s):
    out = 1.0
    for k in range(1, n + 1):
        out *= qnum(k, r, s)
    return out


def admissible(i2, j2, k2, r):
    return i2 + j2 >= k2 and j2 + k2 >= i2 and i2 + k2 >= j2 and (i2 + j2 + k2) % 2 == 0 and i2 + j2 + k2 <= 2 * (r - 2)


def delta(i2, j2, k2, r, s):
    ratio = (
        qfact((i2 + j2 - k2) // 2, r, s)
        * qfact((i2 - j2 + k2) // 2, r, s)
        * qfact((j2 + k2 - i2) // 2, r, s)
        / qfact((i2 + j2 + k2) // 2 + 1, r, s)
    )
    return cmath.sqrt(complex(ratio, 0.0))


def sixj(t, r, s):
    """|i j k; l m n| on doubled colours, I^(2S) prefactor convention."""
    i, j, k, l, m, n = t
    pre = delta(i, j, k, r, s) * delta(j, l, n, r, s) * delta(i, m, n, r, s) * delta(k, l, m, r, s)
    T = [(i + j + k) // 2, (j + l + n) // 2, (i + m + n) // 2, (k + l + m) // 2]
    Q = [(i + j + l + m) // 2, (i + k + l + n) // 2, (j + k + m + n) // 2]
    total = 0.0
    for z in range(max(T), min(Q) + 1):
        den = 1.0
        for t_ in T:
            den *= qfact(z - t_, r, s)
        for q in Q:
            den *= qfact(q - z, r, s)
        total += (-1) ** z * qfact(z + 1, r, s) / den
    return 1j ** (sum(t) % 4) * pre * total


def random_admissible_tuple(rng: random.Random, r: int):
    while True:
        t = tuple(rng.randint(0, r - 2) for _ in range(6))
        i, j, k, l, m, n = t
        if all(admissible(a, b, c, r) for a, b, c in ((i, j, k), (j, l, n), (i, m, n), (k, l, m))):
            return t


def tv_double(g, r, s):
    """Brute-force TV over the full colour product, in double precision."""
    from itertools import product

    top = r - 2
    total = 0.0
    weight = lambda x: (-1) ** x * qnum(x + 1, r, s)  # noqa: E731
    cache = {}

    def sym(t):
        if t not in cache:
            cache[t] = sixj(t, r, s)
        return cache[t]

    for a, b in product(range(top + 1), repeat=2):
        if not admissible(a, b, b, r):
            continue
        for c in product(range(top + 1), repeat=g + 1):
            n = g + 1
            ok = all(admissible(b, x, x, r) for x in c) and all(
                admissible(a, c[i], c[(i + 1) % n], r) and admissible(b, c[i], c[(i + 1) % n], r) for i in range(n)
            )
            if not ok:
                continue
            term = weight(a) * weight(b)
            for i in range(n):
                term *= weight(c[i]) * sym((a, b, b, c[i], c[i], c[i - 1])) * sym((a, b, b, c[i], c[i], c[(i + 1) % n]))
            total += term
    return total
