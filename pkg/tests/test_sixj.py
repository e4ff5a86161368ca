import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frigerio_tv.errors import AdmissibilityError, DomainError
from frigerio_tv.halfint import HalfInt
from frigerio_tv.numerics import PrecisionContext
from frigerio_tv.sixj import (
    ALLOWED_PERMUTATIONS,
    SYMMETRY_GROUP,
    QuantumLevel,
    SixJCache,
    canonical_key,
    delta_coeff,
    edge_weight,
    quantum_factorial,
    quantum_number,
    sixj_symbol,
)

from . import oracles


def test_quantum_number_basics(ctx):
    assert quantum_number(5, 2, 0, ctx) == 0
    assert quantum_number(5, 2, 1, ctx) == 1
    # exact zero at multiples of r, not a rounding residue
    assert quantum_number(7, 2, 7, ctx) == 0
    assert quantum_factorial(5, 2, 0, ctx) == 1


@pytest.mark.parametrize("r,s", [(5, 1), (5, 2), (7, 3), (11, 2)])
def test_quantum_number_against_double(ctx, r, s):
    for n in range(0, 2 * r):
        assert abs(float(quantum_number(r, s, n, ctx)) - oracles.qnum(n, r, s)) < 1e-12


def test_quantum_number_at_q_equal_one_limit():
    # s/r -> 0 recovers ordinary integers
    lvl = QuantumLevel(10**6, 1, PrecisionContext(128))
    assert abs(lvl.quantum_number(5) - 5) < 1e-9


def test_level_rejects_bad_parameters():
    with pytest.raises(DomainError):
        QuantumLevel(2, 1)
    with pytest.raises(DomainError):
        QuantumLevel(6, 6)
    with pytest.raises(DomainError):
        QuantumLevel(5, 0)


def test_non_coprime_level_vanishing_factorial(ctx):
    lvl = QuantumLevel(6, 2, ctx)
    with pytest.raises(DomainError):
        lvl.delta(2, 2, 2)


def test_edge_weight(ctx):
    lvl = QuantumLevel(7, 2, ctx)
    assert edge_weight(0, lvl) == 1
    assert edge_weight("1/2", lvl) == -lvl.quantum_number(2)
    with pytest.raises(DomainError):
        lvl.edge_weight(6)


def test_delta_real_or_imaginary(ctx):
    lvl = QuantumLevel(9, 2, ctx)
    for i in range(8):
        for j in range(8):
            for k in range(8):
                if oracles.admissible(i, j, k, 9):
                    d = lvl.delta(i, j, k)
                    assert d.real == 0 or d.imag == 0
                    assert abs(complex(d) - oracles.delta(i, j, k, 9, 2)) < 1e-12
    with pytest.raises(AdmissibilityError):
        delta_coeff(1, 0, 0, (9, 2), ctx)


def test_symmetry_group_structure():
    assert len(SYMMETRY_GROUP) == 24
    assert len(ALLOWED_PERMUTATIONS) == 6
    assert set(ALLOWED_PERMUTATIONS) <= set(SYMMETRY_GROUP)


@given(st.lists(st.integers(0, 9), min_size=6, max_size=6))
def test_canonical_key_idempotent_and_orbit_invariant(t):
    t = tuple(t)
    key = canonical_key(t)
    assert canonical_key(key) == key
    for p in SYMMETRY_GROUP:
        assert canonical_key(tuple(t[i] for i in p)) == key


def test_sixj_reference_value(ctx):
    # |1 1 1; 1 1 1| at (r, s) = (7, 2) against the double-precision oracle
    value = sixj_symbol(1, 1, 1, 1, 1, 1, (7, 2), ctx=ctx)
    expected = oracles.sixj((2,) * 6, 7, 2)
    assert value.imag == 0
    assert abs(float(value.real) - expected.real) < 1e-12 * abs(expected)


def test_sixj_trivial_values(ctx):
    assert sixj_symbol(0, 0, 0, 0, 0, 0, (5, 2), ctx=ctx) == 1


@pytest.mark.parametrize("r,s", [(5, 1), (5, 2), (7, 2), (8, 3), (9, 2)])
def test_sixj_matches_double_oracle(ctx, r, s):
    rng = random.Random(r * 100 + s)
    lvl = QuantumLevel(r, s, ctx)
    for _ in range(100):
        t = oracles.random_admissible_tuple(rng, r)
        got = complex(lvl.sixj(t))
        want = oracles.sixj(t, r, s)
        assert abs(got - want) <= 1e-10 * max(1.0, abs(want))


def test_sixj_inadmissible_raises(ctx):
    with pytest.raises(AdmissibilityError):
        sixj_symbol(0, 0, 0, 0, 0, "1/2", (5, 2), ctx=ctx)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([(r, s) for r in range(5, 12) for s in (1, 2, 3) if math.gcd(r, s) == 1]), st.randoms(use_true_random=False))
def test_sixj_tetrahedral_symmetry(level, rng):
    r, s = level
    ctx = PrecisionContext(256)
    lvl = QuantumLevel(r, s, ctx)
    t = oracles.random_admissible_tuple(rng, r)
    base = lvl.evaluate_sixj(t)
    tol = ctx.mp.mpf(2) ** -64 * (1 + abs(base))
    for p in ALLOWED_PERMUTATIONS:
        assert abs(lvl.evaluate_sixj(tuple(t[i] for i in p)) - base) <= tol


def test_sixj_phase_conventions_agree_for_even_2s(ctx):
    plus = QuantumLevel(9, 2, ctx, "plus")
    minus = QuantumLevel(9, 2, ctx, "minus")
    rng = random.Random(3)
    for _ in range(50):
        t = oracles.random_admissible_tuple(rng, 9)
        a, b = plus.evaluate_sixj(t), minus.evaluate_sixj(t)
        if sum(t) % 2 == 0:
            assert a == b
        else:
            assert a == -b


def test_frigerio_shape_symbols_are_real_or_imaginary(ctx):
    # |a b b; c c c'| is not always real (e.g. |0 0 0; 1/2 1/2 1/2| = i at
    # r = 3, s = 1) but is always real or purely imaginary
    lvl = QuantumLevel(3, 1, ctx)
    v = lvl.sixj((0, 0, 0, 1, 1, 1))
    assert v == ctx.mp.mpc(0, 1)
    lvl = QuantumLevel(9, 2, ctx)
    for a in range(0, 8, 2):
        for b in range(8):
            for c in range(8):
                for d in range(8):
                    t = (a, b, b, c, c, d)
                    try:
                        v = lvl.sixj(t)
                    except AdmissibilityError:
                        continue
                    assert v.real == 0 or v.imag == 0


def test_cache_bit_identical(ctx):
    lvl = QuantumLevel(9, 2, ctx)
    cache = SixJCache(lvl)
    rng = random.Random(11)
    tuples = [oracles.random_admissible_tuple(rng, 9) for _ in range(200)]
    for t in tuples + tuples:
        assert cache.lookup(lvl, t) == lvl.sixj(t)
    stats = cache.stats()
    assert stats["hits"] >= 200
    assert stats["size"] == len({canonical_key(t) for t in tuples})


def test_cache_bound_to_one_level(ctx):
    cache = SixJCache(QuantumLevel(5, 2, ctx))
    with pytest.raises(ValueError):
        cache.lookup(QuantumLevel(7, 2, ctx), (0,) * 6)


def test_halfint_inputs(ctx):
    a = sixj_symbol(HalfInt(2), 1, "1", 1.0, 1, 1, (7, 2), ctx=ctx)
    assert a == sixj_symbol(1, 1, 1, 1, 1, 1, (7, 2), ctx=ctx)
