"""Arbitrary-precision scalars, the principal square root and the dilogarithm.

All real and complex scalars are mpmath ``mpf``/``mpc`` values owned by a
private :class:`mpmath.MPContext`.  Every :class:`PrecisionContext` builds its
own mpmath context, so no code path ever touches ``mpmath.mp`` and values
computed at different precisions never interfere.
"""

from __future__ import annotations

import threading

import mpmath
from mpmath.libmp import bernfrac

from .errors import DomainError

DEFAULT_BITS = 256
MIN_BITS = 64
_GUARD_BITS = 32

_registry: dict[int, "PrecisionContext"] = {}
_registry_lock = threading.Lock()


class PrecisionContext:
    """Binary precision shared by every scalar created through it.

    Instances are interned per ``mantissa_bits`` and treated as read-only.
    """

    __slots__ = ("mantissa_bits", "mp", "_bernoulli", "_guarded")

    def __new__(cls, mantissa_bits: int = DEFAULT_BITS):
        mantissa_bits = int(mantissa_bits)
        if mantissa_bits < MIN_BITS:
            raise DomainError(f"mantissa_bits must be >= {MIN_BITS}, got {mantissa_bits}")
        with _registry_lock:
            inst = _registry.get(mantissa_bits)
            if inst is None:
                inst = object.__new__(cls)
                mp = mpmath.MPContext()
                mp.prec = mantissa_bits
                inst.mantissa_bits = mantissa_bits
                inst.mp = mp
                inst._bernoulli = []
                inst._guarded = None
                _registry[mantissa_bits] = inst
        return inst

    def __reduce__(self):
        return (PrecisionContext, (self.mantissa_bits,))

    def __repr__(self):
        return f"PrecisionContext(mantissa_bits={self.mantissa_bits})"

    @property
    def guarded(self) -> "PrecisionContext":
        """Context with a few extra guard bits for internal accumulation."""
        if self._guarded is None:
            self._guarded = PrecisionContext(self.mantissa_bits + _GUARD_BITS)
        return self._guarded

    @property
    def eps(self):
        return self.mp.mpf(2) ** (-self.mantissa_bits)

    def real(self, x):
        return self.mp.mpf(x)

    def complex(self, re, im=0):
        return self.mp.mpc(re, im)


def as_context(ctx) -> PrecisionContext:
    if ctx is None:
        return PrecisionContext(DEFAULT_BITS)
    if isinstance(ctx, PrecisionContext):
        return ctx
    return PrecisionContext(int(ctx))


def principal_sqrt(x, ctx=None):
    """Principal square root, with sqrt(-x) = I*sqrt(x) for real x > 0.

    Real input gives a purely real result for ``x >= 0`` and a purely
    imaginary one with positive imaginary part for ``x < 0``; no rounding
    noise leaks into the other component.  Complex input uses the
    principal branch (argument in (-pi/2, pi/2]).
    """
    ctx = as_context(ctx)
    mp = ctx.mp
    x = mp.convert(x)
    if isinstance(x, mp.mpc):
        if x.imag != 0:
            return mp.sqrt(x)
        x = x.real
    if x >= 0:
        return mp.mpc(mp.sqrt(x), 0)
    return mp.mpc(0, mp.sqrt(-x))


def _bernoulli_terms(gctx: PrecisionContext, count: int):
    # B_n / (n+1)! at list index k, with n = 0, 1, 2, 4, 6, ...; odd n > 1 vanish
    coeffs = gctx._bernoulli
    mp = gctx.mp
    while len(coeffs) < count:
        n = len(coeffs)
        order = n if n < 2 else 2 * (n - 1)
        p, q = bernfrac(order)
        coeffs.append(mp.mpf(p) / q / mp.factorial(order + 1))
    return coeffs


def _dilog_series(z, gctx: PrecisionContext):
    # |z| <= 1/2: sum z^k / k^2
    mp = gctx.mp
    tol = mp.mpf(2) ** (-(gctx.mantissa_bits - _GUARD_BITS) - 8)
    total = mp.mpc(0)
    power = z
    k = 1
    while True:
        term = power / (k * k)
        total += term
        if abs(term) < tol:
            return total
        k += 1
        power *= z


def _dilog_bernoulli(z, gctx: PrecisionContext):
    # Li2(z) = sum_n B_n u^(n+1)/(n+1)!, u = -log(1-z), valid for |u| < 2 pi
    mp = gctx.mp
    tol = mp.mpf(2) ** (-(gctx.mantissa_bits - _GUARD_BITS) - 8)
    u = -mp.log(1 - z)
    u2 = u * u
    total = u - u2 / 4
    power = u2 * u  # u^(n+1) for n = 2
    k = 2
    while True:
        coeffs = _bernoulli_terms(gctx, k + 1)
        term = coeffs[k] * power
        total += term
        if abs(term) < tol:
            return total
        k += 1
        power *= u2


def _dilog_core(z, gctx):
    # requires |z| <= 1 and Re z <= 1/2
    if abs(z) <= 0.5:
        return _dilog_series(z, gctx)
    return _dilog_bernoulli(z, gctx)


def _dilog_unit_disk(z, gctx):
    mp = gctx.mp
    if z.real > 0.5:
        w = 1 - z
        return mp.pi ** 2 / 6 - mp.log(z) * mp.log(w) - _dilog_core(w, gctx)
    return _dilog_core(z, gctx)


def dilog(z, ctx=None):
    """Principal-branch dilogarithm Li2(z) with cut [1, inf).

    The argument is moved into the closed unit disk with the inversion
    identity, then into Re z <= 1/2 with the reflection identity.  Points of
    modulus <= 1/2 use the defining power series, the rest use the Bernoulli
    expansion in ``-log(1 - z)``.  Intermediate work carries 32 guard bits.

    Raises
    ------
    DomainError
        If ``z`` is real and strictly greater than one.
    """
    ctx = as_context(ctx)
    gctx = ctx.guarded
    mp = gctx.mp
    z = mp.mpc(z)
    if z.imag == 0:
        if z.real > 1:
            raise DomainError(f"dilog argument {mpmath.nstr(z.real, 15)} lies on the branch cut (1, inf)")
        if z.real == 1:
            return ctx.mp.mpc(ctx.mp.pi ** 2 / 6)
        if z.real == 0:
            return ctx.mp.mpc(0)
    if abs(z) > 1:
        value = -mp.pi ** 2 / 6 - mp.log(-z) ** 2 / 2 - _dilog_unit_disk(1 / z, gctx)
    else:
        value = _dilog_unit_disk(z, gctx)
    if z.imag == 0:
        # real axis below 1: the result is real, drop rounding noise in Im
        value = mp.mpc(value.real, 0)
    return ctx.mp.mpc(value)
