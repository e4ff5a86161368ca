"""State sum TV_{r,s}(M_g, T_g) and the logarithmic invariant QV_{r,s}(M_g).

T_g has no regular vertices, so the normalisation factor is 1 and

    TV = sum over colourings of  w_a w_b prod_i w_{c_i}
         * prod_i |a b b; c_i c_i c_{i-1}| |a b b; c_i c_i c_{i+1}|

with the c indices read cyclically mod g + 1.

The serial sum, taken in enumeration order, is the reference result.  The
parallel path splits the work by the outer (a, b) pair, sums each partition
in a worker process and adds the partial sums in partition order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coloring import Coloring, enumerate_fast, enumerate_partition, outer_pairs
from .errors import DomainError
from .halfint import admissible_doubled
from .numerics import as_context
from .sixj import QuantumLevel, SixJCache

ARRANGEMENTS = ("canonical", "direct", "swapped")


@dataclass
class TVResult:
    g: int
    r: int
    s: int
    precision_bits: int
    tv: object
    qv: object
    term_count: int
    wall_time: float
    # max |term| / |tv|; large values flag cancellation in the sum
    cancellation: object = None
    cache_stats: dict = field(default_factory=dict)

    def csv_row(self, digits: int = 20) -> list[str]:
        from .tables import fmt

        return [
            str(self.g),
            str(self.r),
            str(self.s),
            str(self.precision_bits),
            fmt(self.tv.real, digits),
            fmt(self.tv.imag, digits),
            fmt(self.qv.real, digits),
            fmt(self.qv.imag, digits),
            str(self.term_count),
            f"{self.wall_time:.3f}",
        ]


class _RawSymbols:
    # direct (non-canonicalised) evaluation, memoised on the literal tuple
    def __init__(self, level):
        self.level = level
        self.memo = {}

    def __call__(self, t):
        v = self.memo.get(t)
        if v is None:
            v = self.memo[t] = self.level.evaluate_sixj(t)
        return v


def _symbol_source(level, cache, arrangement):
    if arrangement == "canonical":
        if cache is None:
            return level.sixj
        return lambda t: cache.lookup(level, t)
    if arrangement in ("direct", "swapped"):
        return _RawSymbols(level)
    raise ValueError(f"arrangement must be one of {ARRANGEMENTS}, got {arrangement!r}")


def _term(col: Coloring, level: QuantumLevel, symbol, arrangement: str):
    w = level.edge_weight
    a, b, c = col.a2, col.b2, col.c2
    n = len(c)
    res = w(a) * w(b)
    for i in range(n):
        ci, prev, nxt = c[i], c[i - 1], c[(i + 1) % n]
        if arrangement == "swapped":
            # the tetrahedron terms as read off the triangulation, before
            # the symbol symmetries are used to bring them to |a b b; ...|
            first = symbol((b, a, b, ci, ci, prev))
            second = symbol((b, a, b, nxt, ci, ci))
        else:
            first = symbol((a, b, b, ci, ci, prev))
            second = symbol((a, b, b, ci, ci, nxt))
        res = res * w(ci) * first * second
    return res


def coloring_term(col: Coloring, level: QuantumLevel, cache: SixJCache | None = None, arrangement: str = "canonical"):
    """Contribution of one admissible colouring to the state sum."""
    return _term(col, level, _symbol_source(level, cache, arrangement), arrangement)


def _sum_terms(colorings, level, cache, arrangement):
    symbol = _symbol_source(level, cache, arrangement)
    mp = level.ctx.mp
    total = mp.mpc(0)
    count = 0
    biggest = mp.mpf(0)
    for col in colorings:
        term = _term(col, level, symbol, arrangement)
        total += term
        count += 1
        size = abs(term)
        if size > biggest:
            biggest = size
    return total, count, biggest


def _partition_worker(args):
    g, r, s, bits, phase, arrangement, pairs = args
    level = QuantumLevel(r, s, bits, phase)
    cache = SixJCache(level)
    out = []
    for a2, b2 in pairs:
        total, count, biggest = _sum_terms(enumerate_partition(g, r, a2, b2), level, cache, arrangement)
        # mpmath values are tied to their context; ship raw (sign, man, exp, bc) tuples
        out.append((total.real._mpf_, total.imag._mpf_, count, biggest._mpf_))
    return out


def _chunks(seq, n):
    k, extra = divmod(len(seq), n)
    start = 0
    for i in range(n):
        stop = start + k + (1 if i < extra else 0)
        if stop > start:
            yield seq[start:stop]
        start = stop


def log_branch_0_2pi(z, mp):
    """Complex log with the argument taken in [0, 2*pi)."""
    if z == 0:
        raise DomainError("log of zero")
    arg = mp.atan2(z.imag, z.real)
    if arg < 0:
        arg += 2 * mp.pi
    return mp.mpc(mp.log(abs(z)), arg)


def qv_from_tv(tv, r: int, s: int, ctx):
    """(s pi / (r - 2)) log(tv), with arg(tv) in [0, 2 pi)."""
    mp = as_context(ctx).mp
    if r == 2:
        raise DomainError("QV needs r > 2")
    return (s * mp.pi / (r - 2)) * log_branch_0_2pi(mp.mpc(tv), mp)


def tv_invariant(
    g: int,
    r: int,
    s: int,
    ctx=None,
    *,
    threads: int = 1,
    use_cache: bool = True,
    arrangement: str = "canonical",
    phase: str = "plus",
) -> TVResult:
    """Evaluate TV_{r,s}(M_g, T_g) (and QV when TV is non-zero).

    Parameters
    ----------
    threads : int
        1 runs the deterministic serial reference.  Larger values spread the
        (a, b) partitions over that many worker processes.
    use_cache : bool
        Memoise 6j symbols under their canonical key.  Results are
        bit-identical either way in serial mode.
    arrangement : {"canonical", "direct", "swapped"}
        "canonical" evaluates every symbol through its canonical key;
        "direct" and "swapped" evaluate the literal tuples of the two written
        forms of the summand, with no symmetry reduction.
    """
    ctx = as_context(ctx)
    if g < 2:
        raise DomainError(f"genus must be >= 2, got {g}")
    level = QuantumLevel(r, s, ctx, phase)
    mp = ctx.mp
    started = time.perf_counter()
    stats = {}
    if threads <= 1:
        cache = SixJCache(level) if use_cache and arrangement == "canonical" else None
        total, count, biggest = _sum_terms(enumerate_fast(g, r), level, cache, arrangement)
        if cache is not None:
            stats = cache.stats()
    else:
        pairs = outer_pairs(r)
        jobs = [(g, r, s, ctx.mantissa_bits, phase, arrangement, chunk) for chunk in _chunks(pairs, threads)]
        total = mp.mpc(0)
        count = 0
        biggest = mp.mpf(0)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for chunk_result in pool.map(_partition_worker, jobs):
                for re_, im_, n, big in chunk_result:
                    total += mp.mpc(mp.make_mpf(re_), mp.make_mpf(im_))
                    count += n
                    big = mp.make_mpf(big)
                    if big > biggest:
                        biggest = big
    elapsed = time.perf_counter() - started
    qv = qv_from_tv(total, r, s, ctx) if total != 0 else mp.mpc(mp.nan, mp.nan)
    cancellation = biggest / abs(total) if total != 0 else mp.inf
    return TVResult(g, r, s, ctx.mantissa_bits, total, qv, count, elapsed, cancellation, stats)


def qv_invariant(g: int, r: int, s: int, ctx=None, **kwargs):
    """QV_{r,s}(M_g) = (s pi / (r - 2)) log TV_{r,s}(M_g)."""
    res = tv_invariant(g, r, s, ctx, **kwargs)
    if res.tv == 0:
        raise DomainError(f"TV_{{{r},{s}}}(M_{g}) vanishes; QV is undefined")
    return res.qv


def _transfer_blocks(r: int):
    # (a, b, allowed chain colours) for every admissible outer pair
    top = r - 2
    for a2 in range(top + 1):
        for b2 in range(top + 1):
            if admissible_doubled(a2, b2, b2, r):
                xs = [x for x in range(top + 1) if admissible_doubled(b2, x, x, r)]
                if xs:
                    yield a2, b2, xs


def _matrix_power_trace(mat, k, zero):
    # trace(mat^k) by repeated squaring on plain nested lists
    n = len(mat)

    def mul(p, q):
        return [[sum((p[i][m] * q[m][j] for m in range(n)), zero) for j in range(n)] for i in range(n)]

    result = None
    base = mat
    while k:
        if k & 1:
            result = base if result is None else mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return sum((result[i][i] for i in range(n)), zero)


def tv_transfer_matrix(g: int, r: int, s: int, ctx=None):
    """TV via cycle transfer matrices, independent of the colouring enumerators.

    For fixed (a, b) the summand factorises over consecutive pairs of the
    cyclic c-chain, so the inner sum is trace(T^(g+1)) with
    ``T[x, y] = w_x |a b b; x x y| |a b b; y y x|`` on admissible pairs.
    The cost grows like r^5 log g instead of with the number of colourings.
    """
    return tv_transfer_result(g, r, s, ctx).tv


def tv_transfer_result(g: int, r: int, s: int, ctx=None, phase: str = "plus") -> TVResult:
    """:class:`TVResult` computed with :func:`tv_transfer_matrix`.

    ``term_count`` is the number of admissible colourings, obtained as the
    trace of the matching 0/1 adjacency matrix power.
    """
    ctx = as_context(ctx)
    if g < 2:
        raise DomainError(f"genus must be >= 2, got {g}")
    level = QuantumLevel(r, s, ctx, phase)
    mp = ctx.mp
    w = level.edge_weight
    started = time.perf_counter()
    total = mp.mpc(0)
    count = 0
    for a2, b2, xs in _transfer_blocks(r):
        n = len(xs)
        T = [[mp.mpc(0)] * n for _ in range(n)]
        A = [[0] * n for _ in range(n)]
        for p, x in enumerate(xs):
            for q, y in enumerate(xs):
                if admissible_doubled(a2, x, y, r) and admissible_doubled(b2, x, y, r):
                    A[p][q] = 1
                    T[p][q] = (
                        w(x)
                        * level.evaluate_sixj((a2, b2, b2, x, x, y))
                        * level.evaluate_sixj((a2, b2, b2, y, y, x))
                    )
        total += w(a2) * w(b2) * _matrix_power_trace(T, g + 1, mp.mpc(0))
        count += _matrix_power_trace(A, g + 1, 0)
    elapsed = time.perf_counter() - started
    qv = qv_from_tv(total, r, s, ctx) if total != 0 else mp.mpc(mp.nan, mp.nan)
    # no per-term magnitudes on this route
    return TVResult(g, r, s, ctx.mantissa_bits, total, qv, count, elapsed, None, {})
