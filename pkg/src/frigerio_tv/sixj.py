"""Quantum integers, Delta coefficients, edge weights and quantum 6j symbols.

Everything is evaluated at a fixed level ``(r, s)`` and precision, bundled in
:class:`QuantumLevel`.  Colours are passed around as doubled integers
internally; the public functions also accept :class:`~frigerio_tv.halfint.HalfInt`.
"""

from __future__ import annotations

import functools
import logging
import threading

from .errors import AdmissibilityError, DomainError
from .halfint import HalfInt, admissible_doubled
from .numerics import PrecisionContext, as_context, principal_sqrt

log = logging.getLogger(__name__)

# Generators: the five non-trivial rearrangements
#   |i j k; l m n| = |j i k; m l n| = |i k j; l n m| = |i m n; l j k|
#                  = |l m k; i j n| = |l j n; i m k|
_GENERATORS = (
    (1, 0, 2, 4, 3, 5),
    (0, 2, 1, 3, 5, 4),
    (0, 4, 5, 3, 1, 2),
    (3, 4, 2, 0, 1, 5),
    (3, 1, 5, 0, 4, 2),
)


def _closure(generators):
    group = {tuple(range(6))}
    frontier = list(group)
    while frontier:
        p = frontier.pop()
        for g in generators:
            q = tuple(p[g[i]] for i in range(6))
            if q not in group:
                group.add(q)
                frontier.append(q)
    return tuple(sorted(group))


SYMMETRY_GROUP = _closure(_GENERATORS)
ALLOWED_PERMUTATIONS = ((0, 1, 2, 3, 4, 5),) + _GENERATORS


def canonical_key(t: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest rearrangement of a doubled 6-tuple.

    The minimum is taken over the whole group generated by the allowed
    permutations (24 elements), so the key is idempotent and every tuple in
    one symmetry orbit maps to the same key.
    """
    return min(tuple(t[i] for i in p) for p in SYMMETRY_GROUP)


class QuantumLevel:
    """Tables of [n], [n]! and Delta at level (r, s) and a fixed precision.

    Parameters
    ----------
    r, s : int
        Level; ``[n] = sin(n s pi / r) / sin(s pi / r)``.
    ctx : PrecisionContext or int, optional
        Working precision (default 256 bits).
    phase : {"plus", "minus"}
        Exponent sign of the ``sqrt(-1)^(+-2S)`` prefactor of the 6j symbol.
        The two agree whenever 2S is even.
    """

    def __init__(self, r: int, s: int, ctx=None, phase: str = "plus"):
        if r < 3:
            raise DomainError(f"r must be >= 3, got {r}")
        if s < 1:
            raise DomainError(f"s must be >= 1, got {s}")
        if s % r == 0:
            raise DomainError(f"sin(s*pi/r) vanishes for r={r}, s={s}")
        if phase not in ("plus", "minus"):
            raise ValueError(f"unknown phase convention {phase!r}")
        self.r = r
        self.s = s
        self.ctx = as_context(ctx)
        self.phase = phase
        mp = self.ctx.mp
        self._one = mp.mpf(1)
        self._denominator = self._sin_ratio_numerator(1)
        self._numbers = [mp.mpf(0), mp.mpf(1)]
        self._factorials = [mp.mpf(1), mp.mpf(1)]
        self._deltas: dict[tuple[int, int, int], object] = {}
        self._weights: dict[int, object] = {}
        self._odd_phase_logged = False

    def __repr__(self):
        return f"QuantumLevel(r={self.r}, s={self.s}, bits={self.ctx.mantissa_bits})"

    @property
    def key(self):
        return (self.r, self.s, self.ctx.mantissa_bits, self.phase)

    def _sin_ratio_numerator(self, n):
        mp = self.ctx.mp
        num = (n * self.s) % (2 * self.r)
        if num % self.r == 0:
            return mp.mpf(0)
        return mp.sinpi(mp.mpf(num) / self.r)

    def quantum_number(self, n: int):
        if n < 0:
            raise DomainError(f"quantum number index must be >= 0, got {n}")
        nums = self._numbers
        while len(nums) <= n:
            nums.append(self._sin_ratio_numerator(len(nums)) / self._denominator)
        return nums[n]

    def quantum_factorial(self, n: int):
        if n < 0:
            raise AdmissibilityError(f"quantum factorial of negative integer {n}")
        facts = self._factorials
        while len(facts) <= n:
            k = len(facts)
            facts.append(facts[-1] * self.quantum_number(k))
        return facts[n]

    def delta(self, i2: int, j2: int, k2: int):
        """Delta(i, j, k) for doubled colours; real or purely imaginary."""
        key = (i2, j2, k2)
        value = self._deltas.get(key)
        if value is None:
            if not admissible_doubled(i2, j2, k2, self.r):
                raise AdmissibilityError(
                    f"Delta needs an admissible triple, got ({HalfInt(i2)}, {HalfInt(j2)}, {HalfInt(k2)})"
                )
            f = self.quantum_factorial
            den = f((i2 + j2 + k2) // 2 + 1)
            if den == 0:
                # only possible when gcd(r, s) > 1
                raise DomainError(f"vanishing quantum factorial in Delta at r={self.r}, s={self.s}")
            arg = f((i2 + j2 - k2) // 2) * f((i2 - j2 + k2) // 2) * f((-i2 + j2 + k2) // 2) / den
            value = principal_sqrt(arg, self.ctx)
            self._deltas[key] = value
        return value

    def edge_weight(self, i2: int):
        """w_i = (-1)^(2i) [2i + 1] for doubled colour ``i2``."""
        value = self._weights.get(i2)
        if value is None:
            if i2 < 0 or i2 > self.r - 2:
                raise DomainError(f"colour {HalfInt(max(i2, 0))} outside I_{self.r}")
            value = self.quantum_number(i2 + 1)
            if i2 % 2:
                value = -value
            self._weights[i2] = value
        return value

    def evaluate_sixj(self, t: tuple[int, ...]):
        """Direct evaluation of the 6j symbol on a doubled 6-tuple, no caching."""
        i2, j2, k2, l2, m2, n2 = t
        r = self.r
        for a, b, c in ((i2, j2, k2), (j2, l2, n2), (i2, m2, n2), (k2, l2, m2)):
            if not admissible_doubled(a, b, c, r):
                raise AdmissibilityError(
                    f"6j symbol |{' '.join(str(HalfInt(x)) for x in t[:3])}; "
                    f"{' '.join(str(HalfInt(x)) for x in t[3:])}| has inadmissible triple "
                    f"({HalfInt(a)}, {HalfInt(b)}, {HalfInt(c)}) at r={r}"
                )
        mp = self.ctx.mp
        prefactor = self.delta(i2, j2, k2) * self.delta(j2, l2, n2) * self.delta(i2, m2, n2) * self.delta(k2, l2, m2)

        lows = (i2 + j2 + k2, j2 + l2 + n2, i2 + m2 + n2, k2 + l2 + m2)
        highs = (i2 + j2 + l2 + m2, i2 + k2 + l2 + n2, j2 + k2 + m2 + n2)
        # admissibility makes every doubled bound even
        assert all(v % 2 == 0 for v in lows + highs)
        t1, t2, t3, t4 = (v // 2 for v in lows)
        q1, q2, q3 = (v // 2 for v in highs)

        f = self.quantum_factorial
        total = mp.mpf(0)
        for z in range(max(t1, t2, t3, t4), min(q1, q2, q3) + 1):
            den = f(z - t1) * f(z - t2) * f(z - t3) * f(z - t4) * f(q1 - z) * f(q2 - z) * f(q3 - z)
            if den == 0:
                raise DomainError(f"vanishing quantum factorial in 6j denominator at r={r}, s={self.s}")
            term = f(z + 1) / den
            total = total - term if z % 2 else total + term

        value = prefactor * total
        two_s = sum(t)
        if two_s % 2 and not self._odd_phase_logged:
            self._odd_phase_logged = True
            log.info("odd 2S=%d met in 6j symbol %s at r=%d; prefactor is imaginary", two_s, t, r)
        power = two_s % 4
        if self.phase == "minus":
            power = (-power) % 4
        return _times_i_power(value, power, mp)

    def sixj(self, t: tuple[int, ...], cache: "SixJCache | None" = None):
        """6j symbol via its canonical arrangement, memoised in ``cache``."""
        if cache is None:
            return self.evaluate_sixj(canonical_key(t))
        return cache.lookup(self, t)


def _times_i_power(x, power, mp):
    # exact multiplication by I**power
    if power == 0:
        return x
    if power == 1:
        return mp.mpc(-x.imag, x.real)
    if power == 2:
        return -x
    return mp.mpc(x.imag, -x.real)


class SixJCache:
    """Memo of 6j symbols for one level, keyed by the canonical 6-tuple.

    Values are always computed from the canonical arrangement, so a cached
    value is bit-identical to an uncached :meth:`QuantumLevel.sixj` call.
    A second dict maps raw (non-canonical) tuples straight to values, which
    skips the 24-element canonicalisation on repeat lookups.  Writes take a
    lock; duplicate concurrent computation of one key is harmless.
    """

    def __init__(self, level: QuantumLevel | None = None):
        self.level = level
        self._values: dict[tuple[int, ...], object] = {}
        self._aliases: dict[tuple[int, ...], object] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._values)

    def lookup(self, level: QuantumLevel, t: tuple[int, ...]):
        if self.level is None:
            self.level = level
        elif self.level.key != level.key:
            raise ValueError(f"cache bound to {self.level!r}, asked for {level!r}")
        value = self._aliases.get(t)
        if value is not None:
            self.hits += 1
            return value
        key = canonical_key(t)
        value = self._values.get(key)
        if value is None:
            self.misses += 1
            value = level.evaluate_sixj(key)
            with self._lock:
                self._values.setdefault(key, value)
        else:
            self.hits += 1
        with self._lock:
            self._aliases[t] = value
        return value

    def stats(self) -> dict[str, int]:
        return {"hits": self.hits, "misses": self.misses, "size": len(self._values)}


@functools.lru_cache(maxsize=64)
def get_level(r: int, s: int, bits: int = 256, phase: str = "plus") -> QuantumLevel:
    return QuantumLevel(r, s, PrecisionContext(bits), phase)


def _level_for(level=None, r=None, s=None, ctx=None) -> QuantumLevel:
    if isinstance(level, QuantumLevel):
        return level
    if level is not None:
        r, s = level
    return get_level(r, s, as_context(ctx).mantissa_bits)


def _d(x) -> int:
    return HalfInt.of(x).doubled


def quantum_number(r: int, s: int, n: int, ctx=None):
    """[n] = sin(n s pi / r) / sin(s pi / r)."""
    return _level_for(r=r, s=s, ctx=ctx).quantum_number(n)


def quantum_factorial(r: int, s: int, n: int, ctx=None):
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    return _level_for(r=r, s=s, ctx=ctx).quantum_factorial(n)


def delta_coeff(i, j, k, level, ctx=None):
    """Delta(i, j, k) at ``level`` (a QuantumLevel or an ``(r, s)`` pair)."""
    return _level_for(level, ctx=ctx).delta(_d(i), _d(j), _d(k))


def edge_weight(i, level, ctx=None):
    return _level_for(level, ctx=ctx).edge_weight(_d(i))


def sixj_symbol(i, j, k, l, m, n, level, cache: SixJCache | None = None, ctx=None):
    """Quantum 6j symbol |i j k; l m n| at ``level``.

    The four triples (i,j,k), (j,l,n), (i,m,n), (k,l,m) must be admissible,
    otherwise :class:`~frigerio_tv.errors.AdmissibilityError` is raised.
    """
    lvl = _level_for(level, ctx=ctx)
    return lvl.sixj(tuple(_d(x) for x in (i, j, k, l, m, n)), cache)
