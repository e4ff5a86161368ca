"""Volumes of generalized hyperbolic tetrahedra and of Frigerio's manifolds M_g.

The tetrahedron volume uses Ushijima's formula

    Vol(T) = 1/2 Im(U(z_-, T) - U(z_+, T))

where U is a signed sum of eight dilogarithms and z_+- are the two roots
built from the Gram matrix determinant.  M_g is triangulated by 2g + 2
congruent tetrahedra, so Vol(M_g) is 2g + 2 times one of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .numerics import as_context, dilog, principal_sqrt


@dataclass(frozen=True)
class TetrahedronAngles:
    """Dihedral angles A..F (radians) of a generalized hyperbolic tetrahedron.

    A, B, F sit at the edges of the first vertex; D, E, C are the opposite
    edges of A, B, F respectively (the Gram matrix below fixes the layout).
    """

    A: object
    B: object
    C: object
    D: object
    E: object
    F: object

    def __post_init__(self):
        for name in "ABCDEF":
            value = getattr(self, name)
            # a little slack for pi rounded at another precision
            if not (-1e-12 <= float(value) <= math.pi + 1e-12):
                raise DomainError(f"dihedral angle {name}={value} outside [0, pi]")

    def as_tuple(self):
        return (self.A, self.B, self.C, self.D, self.E, self.F)


@dataclass(frozen=True)
class FrigerioAngles:
    """Angle structure of the tetrahedra of T_g."""

    g: int
    alpha: object
    beta: object
    gamma: object
    delta: object

    def tetrahedron(self) -> TetrahedronAngles:
        # slot order (gamma, delta, gamma, alpha, beta, alpha)
        return TetrahedronAngles(self.gamma, self.delta, self.gamma, self.alpha, self.beta, self.alpha)


def gram_matrix(t: TetrahedronAngles, ctx=None):
    mp = as_context(ctx).mp
    ca, cb, cc, cd, ce, cf = (-mp.cos(mp.mpf(x)) for x in t.as_tuple())
    return mp.matrix(
        [
            [1, ca, cb, cf],
            [ca, 1, cc, ce],
            [cb, cc, 1, cd],
            [cf, ce, cd, 1],
        ]
    )


def gram_det(t: TetrahedronAngles, ctx=None):
    """Determinant of the Gram matrix; negative for hyperbolic tetrahedra."""
    ctx = as_context(ctx)
    return ctx.mp.det(gram_matrix(t, ctx))


def _exponentials(t, mp):
    return [mp.expj(mp.mpf(x)) for x in t.as_tuple()]


def _u_arguments(z, t, mp):
    a, b, c, d, e, f = _exponentials(t, mp)
    plus = (z, a * b * d * e * z, a * c * d * f * z, b * c * e * f * z)
    minus = (-a * b * c * z, -a * e * f * z, -b * d * f * z, -c * d * e * z)
    return plus, minus


def _check_cut(w, ctx):
    # the principal Li2 jumps by 2 pi i log|w| across (1, inf); refuse
    # arguments too close to that interior for the sign of Im to be trusted.
    # Near the branch point 1 itself the jump vanishes, so it is allowed.
    mp = ctx.mp
    eps = mp.ldexp(mp.mpf(1), -(ctx.mantissa_bits // 2))
    if w.real > 1 + eps and abs(w.imag) <= eps:
        raise DomainError(f"dilogarithm argument {mp.nstr(w, 15)} lies on the branch cut")


def u_function(z, t: TetrahedronAngles, ctx=None):
    """U(z, T): half the signed sum of the eight dilogarithms."""
    ctx = as_context(ctx)
    mp = ctx.mp
    z = mp.mpc(z)
    plus, minus = _u_arguments(z, t, mp)
    total = mp.mpc(0)
    for w in plus:
        _check_cut(w, ctx)
        total += dilog(w, ctx)
    for w in minus:
        _check_cut(w, ctx)
        total -= dilog(w, ctx)
    return total / 2


def z_plus_minus(t: TetrahedronAngles, ctx=None):
    """The pair (z_+, z_-) entering the volume formula."""
    ctx = as_context(ctx)
    mp = ctx.mp
    A, B, C, D, E, F = (mp.mpf(x) for x in t.as_tuple())
    a, b, c, d, e, f = _exponentials(t, mp)
    den = a * d + b * e + c * f + a * b * f + a * c * e + b * c * d + d * e * f + a * b * c * d * e * f
    if den == 0:
        raise DomainError("degenerate tetrahedron: z denominator vanishes")
    base = mp.sin(A) * mp.sin(D) + mp.sin(B) * mp.sin(E) + mp.sin(C) * mp.sin(F)
    root = principal_sqrt(gram_det(t, ctx), ctx)
    z_plus = -2 * (base + root) / den
    z_minus = -2 * (base - root) / den
    return z_plus, z_minus


def tetrahedron_volume(t: TetrahedronAngles, ctx=None):
    """Hyperbolic volume 1/2 Im(U(z_-) - U(z_+))."""
    ctx = as_context(ctx)
    z_plus, z_minus = z_plus_minus(t, ctx)
    return ((u_function(z_minus, t, ctx) - u_function(z_plus, t, ctx)) / 2).imag


def frigerio_angles(g: int, ctx=None) -> FrigerioAngles:
    if g < 2:
        raise DomainError(f"genus must be >= 2, got {g}")
    mp = as_context(ctx).mp
    alpha = mp.pi / (2 * g + 2)
    gamma = mp.acos(1 / (2 * mp.cos(alpha)))
    return FrigerioAngles(g, alpha, 2 * alpha, gamma, mp.pi - 2 * gamma)


def manifold_volume(g: int, ctx=None):
    """Vol(M_g) = (2g + 2) Vol(T_g)."""
    ctx = as_context(ctx)
    return (2 * g + 2) * tetrahedron_volume(frigerio_angles(g, ctx).tetrahedron(), ctx)
