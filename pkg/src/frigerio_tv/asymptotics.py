"""Least-squares fits of QV data to the volume-conjecture expansion

    QV_r ~ a + b * 2 pi ln(r - 2) / (r - 2) + c / (r - 2)

either with a free, or with a pinned to the hyperbolic volume, plus the
affine fit of b against the genus.  All fits are linear in the
coefficients and are solved with an SVD-based least-squares routine rather
than through the normal equations.

The estimator classes wrap the same fits in the scikit-learn interface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .errors import DomainError, RankDeficiencyError

MODELS = ("free", "fixed_volume", "affine")


@dataclass
class QVSeries:
    """Re QV values of one manifold M_g at odd levels r >= 5."""

    g: int
    points: list[tuple[int, float]] = field(default_factory=list)

    def __post_init__(self):
        self.points = [(int(r), float(v)) for r, v in self.points]
        rs = [r for r, _ in self.points]
        for r in rs:
            if r < 5 or r % 2 == 0:
                raise DomainError(f"QV series levels must be odd and >= 5, got r={r}")
        if any(b <= a for a, b in zip(rs, rs[1:])):
            raise DomainError("QV series levels must be strictly increasing")

    @property
    def r(self) -> np.ndarray:
        return np.array([r for r, _ in self.points], dtype=float)

    @property
    def values(self) -> np.ndarray:
        return np.array([v for _, v in self.points], dtype=float)

    def __len__(self):
        return len(self.points)

    def up_to(self, r_max: int) -> "QVSeries":
        return QVSeries(self.g, [(r, v) for r, v in self.points if r <= r_max])


@dataclass
class FitResult:
    a: float
    b: float
    c: float | None
    rss: float
    r_squared: float | None
    model_tag: str
    g: int | None = None
    n_points: int = 0

    def as_row(self, digits: int = 20) -> list[str]:
        from .tables import fmt

        return [
            "" if self.g is None else str(self.g),
            self.model_tag,
            fmt(self.a, digits),
            fmt(self.b, digits),
            fmt(self.c, digits),
            fmt(self.rss, digits),
            fmt(self.r_squared, digits),
        ]

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "model": self.model_tag,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "rss": self.rss,
            "r2": self.r_squared,
        }


def log_term(r):
    """The 2 pi ln(r - 2) / (r - 2) basis column."""
    r = np.asarray(r, dtype=float)
    return 2 * np.pi * np.log(r - 2) / (r - 2)


def inverse_term(r):
    return 1.0 / (np.asarray(r, dtype=float) - 2)


def design_matrix(r, fixed_volume: bool = False) -> np.ndarray:
    cols = [log_term(r), inverse_term(r)]
    if not fixed_volume:
        cols.insert(0, np.ones_like(cols[0]))
    return np.column_stack(cols)


def _solve(X, y):
    n, k = X.shape
    if n < k:
        raise RankDeficiencyError(f"need at least {k} points for {k} coefficients, got {n}")
    coef, _, rank, _ = np.linalg.lstsq(X, y, rcond=None)
    if rank < k:
        raise RankDeficiencyError(f"design matrix has rank {rank} < {k}; basis columns are collinear")
    resid = y - X @ coef
    return coef, float(resid @ resid)


def _as_series(series, g=None) -> QVSeries:
    if isinstance(series, QVSeries):
        return series
    return QVSeries(g, list(series))


def fit_free(series) -> FitResult:
    """Fit (a, b, c) with all three coefficients free."""
    s = _as_series(series)
    (a, b, c), rss = _solve(design_matrix(s.r), s.values)
    return FitResult(float(a), float(b), float(c), rss, None, "free", s.g, len(s))


def fit_fixed_volume(series, vol) -> FitResult:
    """Fit (b, c) to QV - vol, so that a = vol."""
    s = _as_series(series)
    vol = float(vol)
    (b, c), rss = _solve(design_matrix(s.r, fixed_volume=True), s.values - vol)
    return FitResult(vol, float(b), float(c), rss, None, "fixed_volume", s.g, len(s))


def fit_affine(pairs) -> FitResult:
    """Straight line b = slope * g + intercept through ``(g, b)`` pairs.

    The result stores the intercept in ``a`` and the slope in ``b``.  R^2 is
    1 - SS_res / SS_tot, taken to be 1 when the data have no spread.
    """
    pairs = [(float(g), float(b)) for g, b in pairs]
    if len(pairs) < 2:
        raise RankDeficiencyError(f"affine fit needs at least 2 pairs, got {len(pairs)}")
    gs = np.array([g for g, _ in pairs])
    bs = np.array([b for _, b in pairs])
    if np.all(gs == gs[0]):
        raise RankDeficiencyError("affine fit needs at least two distinct genera")
    (intercept, slope), rss = _solve(np.column_stack([np.ones_like(gs), gs]), bs)
    ss_tot = float(((bs - bs.mean()) ** 2).sum())
    r2 = 1.0 if ss_tot == 0 else 1.0 - rss / ss_tot
    return FitResult(float(intercept), float(slope), None, rss, r2, "affine", None, len(pairs))


def predict(fit: FitResult, r):
    r = np.asarray(r, dtype=float)
    if fit.model_tag == "affine":
        return fit.a + fit.b * r
    return fit.a + fit.b * log_term(r) + fit.c * inverse_term(r)


class VolumeConjectureRegressor(RegressorMixin, BaseEstimator):
    """scikit-learn wrapper around :func:`fit_free` / :func:`fit_fixed_volume`.

    ``X`` is a single column of levels r, ``y`` the matching Re QV values.

    Parameters
    ----------
    volume : float or None
        When given, the constant term is pinned to this value.
    """

    def __init__(self, volume=None):
        self.volume = volume

    def fit(self, X, y):
        X, y = check_X_y(X, y, dtype=float, y_numeric=True)
        if X.shape[1] != 1:
            raise ValueError(f"X must have exactly one column of levels r, got {X.shape[1]}")
        r = X[:, 0]
        if np.any(r <= 2):
            raise DomainError("levels r must exceed 2")
        vol = None if self.volume is None else float(self.volume)
        result = _fit_unchecked(list(zip(r, y)), vol)
        self.result_ = result
        self.coef_ = np.array([result.b, result.c])
        self.intercept_ = result.a
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        check_is_fitted(self, "result_")
        X = check_array(X, dtype=float)
        return predict(self.result_, X[:, 0])


def _fit_unchecked(points, vol):
    # the estimator accepts any r > 2, not only the odd levels of QVSeries
    r = np.array([p[0] for p in points], dtype=float)
    y = np.array([p[1] for p in points], dtype=float)
    if vol is None:
        (a, b, c), rss = _solve(design_matrix(r), y)
        return FitResult(float(a), float(b), float(c), rss, None, "free", None, len(y))
    (b, c), rss = _solve(design_matrix(r, fixed_volume=True), y - vol)
    return FitResult(vol, float(b), float(c), rss, None, "fixed_volume", None, len(y))


class AffineGenusRegressor(RegressorMixin, BaseEstimator):
    """scikit-learn wrapper around :func:`fit_affine`; ``X`` is the genus column."""

    def fit(self, X, y):
        X, y = check_X_y(X, y, dtype=float, y_numeric=True)
        if X.shape[1] != 1:
            raise ValueError(f"X must have exactly one column of genera, got {X.shape[1]}")
        self.result_ = fit_affine(zip(X[:, 0], y))
        self.coef_ = np.array([self.result_.b])
        self.intercept_ = self.result_.a
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        check_is_fitted(self, "result_")
        X = check_array(X, dtype=float)
        return predict(self.result_, X[:, 0])


def gnuplot_script(series_fits, volumes=None, title=None) -> str:
    """A self-contained gnuplot script: data points, fitted curves, and
    the horizontal Vol(M_g) asymptotes.

    ``series_fits`` is a list of ``(QVSeries, FitResult)``; ``volumes`` maps
    g to Vol(M_g).
    """
    volumes = volumes or {}
    lines = [
        "# generated by frigerio-tv",
        "set xlabel 'r'",
        "set ylabel 'Re QV_{r,2}(M_g)'",
        "set key bottom right",
    ]
    if title:
        lines.append(f"set title {_quote(title)}")
    plots = []
    for k, (series, fit) in enumerate(series_fits):
        block = f"$qv{k}"
        lines.append(f"{block} << EOD")
        lines.extend(f"{r} {_num(v)}" for r, v in series.points)
        lines.append("EOD")
        g = series.g
        label = f"M_{g}" if g is not None else f"series {k}"
        expr = f"{_num(fit.a)} + ({_num(fit.b)})*2*pi*log(x-2)/(x-2) + ({_num(fit.c)})/(x-2)"
        lines.append(f"f{k}(x) = {expr}")
        plots.append(f"{block} using 1:2 with points pt 7 title {_quote(label + ' data')}")
        plots.append(f"f{k}(x) with lines title {_quote(label + ' ' + fit.model_tag + ' fit')}")
        if g in volumes:
            plots.append(f"{_num(volumes[g])} with lines dt 2 title {_quote(f'Vol(M_{g})')}")
    if series_fits:
        r_lo = min(s.points[0][0] for s, _ in series_fits if s.points)
        r_hi = max(s.points[-1][0] for s, _ in series_fits if s.points)
        lines.append(f"set xrange [{max(r_lo - 2, 3)}:{r_hi + 2}]")
        lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines) + "\n"


def _num(x) -> str:
    return repr(float(x)) if math.isfinite(float(x)) else "NaN"


def _quote(text: str) -> str:
    return "'" + text.replace("'", "''") + "'"
