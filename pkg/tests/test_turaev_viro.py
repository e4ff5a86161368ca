import pytest

from frigerio_tv.coloring import enumerate_fast
from frigerio_tv.errors import DomainError
from frigerio_tv.numerics import PrecisionContext
from frigerio_tv.sixj import QuantumLevel
from frigerio_tv.turaev_viro import (
    coloring_term,
    log_branch_0_2pi,
    qv_from_tv,
    qv_invariant,
    tv_invariant,
    tv_transfer_matrix,
)

from . import oracles


@pytest.mark.parametrize("g,r,s", [(2, 5, 2), (2, 7, 2), (3, 5, 2), (2, 6, 1), (3, 7, 3)])
def test_against_double_precision_brute_force(g, r, s):
    res = tv_invariant(g, r, s, PrecisionContext(128))
    want = oracles.tv_double(g, r, s)
    assert abs(complex(res.tv) - want) <= 1e-9 * max(1.0, abs(want))


@pytest.mark.parametrize("g,r", [(2, 9), (3, 9), (4, 7), (5, 7), (2, 13)])
def test_against_transfer_matrix(ctx, g, r):
    res = tv_invariant(g, r, 2, ctx)
    tm = tv_transfer_matrix(g, r, 2, ctx)
    assert abs(res.tv - tm) <= ctx.mp.mpf(10) ** -60 * abs(tm)


def test_smallest_level():
    # two colourings at r = 3, each contributing 1
    res = tv_invariant(2, 3, 1)
    assert res.term_count == 2
    assert res.tv == 2


def test_tv_is_real(ctx):
    for g, r in [(2, 5), (2, 9), (3, 7)]:
        res = tv_invariant(g, r, 2, ctx)
        assert abs(res.tv.imag) <= ctx.mp.mpf(10) ** -60 * (1 + abs(res.tv.real))


def test_terms_real_and_rotation_invariant(ctx):
    lvl = QuantumLevel(8, 3, ctx)
    for col in enumerate_fast(3, 8):
        term = coloring_term(col, lvl)
        assert abs(term.imag) <= ctx.mp.mpf(10) ** -60 * (1 + abs(term))
        for k in range(1, 4):
            assert abs(coloring_term(col.rotated(k), lvl) - term) <= ctx.mp.mpf(10) ** -60 * (1 + abs(term))


def test_cache_is_bit_identical(ctx):
    a = tv_invariant(2, 9, 2, ctx, use_cache=True)
    b = tv_invariant(2, 9, 2, ctx, use_cache=False)
    assert a.tv == b.tv
    assert a.cache_stats["hits"] > 0


@pytest.mark.parametrize("g,r", [(2, 5), (2, 7), (3, 5)])
def test_arrangements_agree(ctx, g, r):
    ref = tv_invariant(g, r, 2, ctx).tv
    tol = ctx.mp.mpf(10) ** -64 * abs(ref)
    for arrangement in ("direct", "swapped"):
        assert abs(tv_invariant(g, r, 2, ctx, arrangement=arrangement).tv - ref) <= tol


def test_phase_convention_does_not_change_tv(ctx):
    # odd-2S symbols come in pairs within every term
    a = tv_invariant(3, 8, 3, ctx, phase="plus").tv
    b = tv_invariant(3, 8, 3, ctx, phase="minus").tv
    assert abs(a - b) <= ctx.mp.mpf(10) ** -64 * abs(a)


def test_precision_stability():
    lo = tv_invariant(2, 11, 2, PrecisionContext(192)).qv
    hi = tv_invariant(2, 11, 2, PrecisionContext(256)).qv
    assert abs(lo - hi) < 1e-50


def test_parallel_matches_serial(ctx):
    serial = tv_invariant(2, 9, 2, ctx)
    parallel = tv_invariant(2, 9, 2, ctx, threads=2)
    assert parallel.term_count == serial.term_count
    assert abs(parallel.tv - serial.tv) <= ctx.mp.mpf(2) ** (-0.2 * 256) * abs(serial.tv)


def test_qv_branch(ctx):
    mp = ctx.mp
    # negative TV: argument pi, so Im QV = s pi^2 / (r - 2)
    qv = qv_from_tv(mp.mpf(-1), 5, 2, ctx)
    assert qv.real == 0
    assert abs(qv.imag - 2 * mp.pi**2 / 3) < mp.mpf(10) ** -70
    assert log_branch_0_2pi(mp.mpc(0, -1), mp).imag > mp.pi
    with pytest.raises(DomainError):
        log_branch_0_2pi(mp.mpc(0), mp)


def test_qv_reference_value(ctx):
    assert abs(qv_invariant(2, 5, 2, ctx).real - 8.14385123663626) < 1e-13


def test_rejects_bad_inputs():
    with pytest.raises(DomainError):
        tv_invariant(1, 5, 2)
    with pytest.raises(DomainError):
        tv_invariant(2, 5, 5)
    with pytest.raises(ValueError):
        tv_invariant(2, 5, 2, arrangement="sideways")


def test_result_row(ctx):
    row = tv_invariant(2, 5, 2, ctx).csv_row(14)
    assert row[:4] == ["2", "5", "2", "256"]
    assert row[6] == "8.1438512366363"
    assert row[8] == "8"


def test_higher_level_stable_across_precision():
    # at r = 21 the sum cancels by about 6 orders of magnitude; the result
    # must not move when precision is raised
    lo = tv_invariant(2, 21, 2, PrecisionContext(192))
    hi = tv_invariant(2, 21, 2, PrecisionContext(384))
    assert hi.cancellation > 1e5
    assert abs(lo.qv - hi.qv) < 1e-40
    assert abs(hi.qv.real - 10.76091340274363) < 1e-13


@pytest.mark.parametrize("g,r,s", [(2, 9, 2), (3, 8, 3), (5, 7, 3)])
def test_transfer_result_counts_colourings(ctx, g, r, s):
    from frigerio_tv.coloring import count_admissible
    from frigerio_tv.turaev_viro import tv_transfer_result

    res = tv_transfer_result(g, r, s, ctx)
    assert res.term_count == count_admissible(g, r)
    assert abs(res.qv - tv_invariant(g, r, s, ctx).qv) < 1e-60
