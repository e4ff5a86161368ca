"""Admissible colourings of Frigerio's triangulation T_g.

T_g has g + 3 edge classes coloured (a, b, c_0, ..., c_g).  Two enumerators
are provided:

* :func:`enumerate_fast` walks the nested bounds derived from the
  admissibility conditions: a and b integral with a/2 <= b <= (r-2-a)/2, then
  a chain c_0, ..., c_g of uniform parity where each c_{i+1} lies between
  ``max(b/2, a - c_i, c_i - min(a, b))`` and
  ``min((r-2-b)/2, r-2-a-c_i, c_i + min(a, b))``, closed by the same test on
  the pair (c_g, c_0).
* :func:`enumerate_oracle` filters the full product I_r^(g+3) through the
  raw triple admissibility test.  It exists to check the first one.

Both work on doubled integers and yield :class:`Coloring` values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError
from .halfint import HalfInt, admissible_doubled

ORACLE_LIMIT = 10**9


@dataclass(frozen=True, order=True)
class Coloring:
    """One admissible colouring, stored as doubled integers.

    ``a2``, ``b2`` and ``c2`` hold twice the colours of the edge classes
    a, b and c_0..c_g.
    """

    a2: int
    b2: int
    c2: tuple[int, ...]

    @classmethod
    def of(cls, a, b, c) -> "Coloring":
        return cls(HalfInt.of(a).doubled, HalfInt.of(b).doubled, tuple(HalfInt.of(x).doubled for x in c))

    @property
    def g(self) -> int:
        return len(self.c2) - 1

    @property
    def a(self) -> HalfInt:
        return HalfInt(self.a2)

    @property
    def b(self) -> HalfInt:
        return HalfInt(self.b2)

    @property
    def c(self) -> list[HalfInt]:
        return [HalfInt(x) for x in self.c2]

    def as_row(self) -> list[str]:
        return [str(self.a), str(self.b)] + [str(x) for x in self.c]

    def rotated(self, k: int) -> "Coloring":
        k %= len(self.c2)
        return Coloring(self.a2, self.b2, self.c2[k:] + self.c2[:k])


def _check(g, r):
    if g < 2:
        raise DomainError(f"genus must be >= 2, got {g}")
    if r < 3:
        raise DomainError(f"r must be >= 3, got {r}")


def outer_pairs(r: int) -> list[tuple[int, int]]:
    """The (a, b) pairs (doubled) that open the enumeration, in order.

    These are the work partitions of the state sum.
    """
    top = r - 2
    pairs = []
    for a2 in range(0, top + 1, 2):
        # a/2 <= b <= (r-2-a)/2  <=>  a2 <= 2*b2 <= 2(r-2) - a2
        for b2 in range(0, top + 1, 2):
            if a2 <= 2 * b2 <= 2 * top - a2:
                pairs.append((a2, b2))
    return pairs


def _first_with_parity(lo: int, parity: int) -> int:
    return lo + ((lo - parity) % 2)


def enumerate_partition(g: int, r: int, a2: int, b2: int) -> Iterator[Coloring]:
    """Colourings with fixed outer pair (a, b): integer chains, then half-odd ones."""
    top = r - 2
    m = min(a2, b2)
    # c bounds from (b, c, c): b/2 <= c <= (r-2-b)/2, in doubled units
    c_lo, c_hi = b2 // 2, top - b2 // 2
    rim = 2 * top - a2
    last = g

    for parity in (0, 1):
        chain = [0] * (g + 1)

        def extend(i):
            prev = chain[i - 1]
            lo = max(c_lo, a2 - prev, prev - m)
            hi = min(c_hi, rim - prev, prev + m)
            for x in range(_first_with_parity(lo, parity), hi + 1, 2):
                chain[i] = x
                if i == last:
                    c0 = chain[0]
                    if abs(x - c0) <= m and a2 <= x + c0 <= rim:
                        yield Coloring(a2, b2, tuple(chain))
                else:
                    yield from extend(i + 1)

        for c0 in range(_first_with_parity(c_lo, parity), c_hi + 1, 2):
            chain[0] = c0
            yield from extend(1)


def enumerate_fast(g: int, r: int) -> Iterator[Coloring]:
    """Stream every admissible colouring of T_g at level r exactly once.

    Order: a, then b, then the integer c-chains, then the half-odd c-chains,
    each chain in lexicographic order.
    """
    _check(g, r)
    for a2, b2 in outer_pairs(r):
        yield from enumerate_partition(g, r, a2, b2)


def required_triples(col: Coloring) -> list[tuple[int, int, int]]:
    """The 3g + 4 triples whose admissibility defines A_r(M_g, T_g)."""
    a, b, c = col.a2, col.b2, col.c2
    g = len(c) - 1
    triples = [(a, b, b), (a, c[g], c[0]), (b, c[g], c[g]), (b, c[g], c[0])]
    for i in range(g):
        triples += [(a, c[i], c[i + 1]), (b, c[i], c[i]), (b, c[i], c[i + 1])]
    return triples


def is_admissible_coloring(col: Coloring, r: int) -> bool:
    return all(admissible_doubled(x, y, z, r) for x, y, z in required_triples(col))


def enumerate_oracle(g: int, r: int) -> Iterator[Coloring]:
    """Brute-force filter of I_r^(g+3); only for small (g, r)."""
    _check(g, r)
    size = (r - 1) ** (g + 3)
    if size > ORACLE_LIMIT:
        raise DomainError(f"oracle enumeration of (r-1)^(g+3) = {size} colourings exceeds {ORACLE_LIMIT}")
    colours = range(r - 1)
    for a2, b2 in itertools.product(colours, repeat=2):
        # cheap prefilter on (a, b, b); the full test below repeats it
        if not admissible_doubled(a2, b2, b2, r):
            continue
        for c in itertools.product(colours, repeat=g + 1):
            col = Coloring(a2, b2, c)
            if is_admissible_coloring(col, r):
                yield col


def count_admissible(g: int, r: int) -> int:
    return sum(1 for _ in enumerate_fast(g, r))
