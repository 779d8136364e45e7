"""Sample summaries, skewness estimators and two-sample t-tests."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError
from .special import t_cdf, t_two_tailed

__all__ = [
    "Sample", "SummaryStats", "TTestResult", "summarize", "skewness_adjusted",
    "skewness_mean_median", "pooled_t_test", "welch_t_test", "t_cdf", "median",
]


@dataclass(frozen=True)
class Sample:
    """One labeled group of finite measurements."""

    label: str
    values: tuple[float, ...]

    def __init__(self, label: str, values: Iterable[float]):
        vals = tuple(float(v) for v in values)
        if not vals:
            raise DomainError(f"sample {label!r} is empty")
        for v in vals:
            if not math.isfinite(v):
                raise DomainError(f"sample {label!r} contains a non-finite value ({v!r})")
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class SummaryStats:
    n: int
    mean: float
    sd: float
    se: float
    # n == 1: sd is reported as 0 rather than undefined
    single_value: bool = False


@dataclass(frozen=True)
class TTestResult:
    t: float
    df: float
    p: float
    se_diff: float
    mean_diff: float
    pooled_sd: float | None = None
    df_penalty: int = 0
    warnings: tuple[str, ...] = field(default=())


def _values(s) -> Sequence[float]:
    if isinstance(s, Sample):
        return s.values
    vals = [float(v) for v in s]
    if not vals:
        raise DomainError("sample is empty")
    for v in vals:
        if not math.isfinite(v):
            raise DomainError(f"sample contains a non-finite value ({v!r})")
    return vals


def _mean_sd(xs: Sequence[float]) -> tuple[float, float]:
    n = len(xs)
    mean = math.fsum(xs) / n
    if n < 2:
        return mean, 0.0
    var = math.fsum((x - mean) ** 2 for x in xs) / (n - 1)
    return mean, math.sqrt(var)


def summarize(s) -> SummaryStats:
    """Mean, sample SD (n - 1 denominator) and standard error of a sample.

    Accepts a :class:`Sample` or any iterable of numbers.
    """
    xs = _values(s)
    n = len(xs)
    mean, sd = _mean_sd(xs)
    if n >= 2 and all(x == xs[0] for x in xs):
        sd = 0.0
    return SummaryStats(n=n, mean=mean, sd=sd, se=sd / math.sqrt(n), single_value=n == 1)


def median(xs: Iterable[float]) -> float:
    ordered = sorted(xs)
    n = len(ordered)
    if n == 0:
        raise DomainError("median of an empty sample")
    mid = n // 2
    if n % 2:
        return ordered[mid]
    return 0.5 * (ordered[mid - 1] + ordered[mid])


def skewness_adjusted(s) -> float:
    """Adjusted Fisher-Pearson skewness, the spreadsheet ``SKEW`` convention.

    ``n / ((n-1)(n-2)) * sum(((x - mean) / sd) ** 3)`` with the sample SD.
    """
    xs = _values(s)
    n = len(xs)
    if n < 3:
        raise DomainError(f"adjusted skewness needs at least 3 values (got {n})")
    mean, sd = _mean_sd(xs)
    if sd == 0.0 or all(x == xs[0] for x in xs):
        raise DomainError("adjusted skewness is undefined when all values are equal")
    total = math.fsum(((x - mean) / sd) ** 3 for x in xs)
    return n / ((n - 1) * (n - 2)) * total


def skewness_mean_median(s) -> float:
    """Nonparametric skew ``(mean - median) / sd``."""
    xs = _values(s)
    if len(xs) < 2:
        raise DomainError(f"mean-median skewness needs at least 2 values (got {len(xs)})")
    mean, sd = _mean_sd(xs)
    if sd == 0.0 or all(x == xs[0] for x in xs):
        raise DomainError("mean-median skewness is undefined when all values are equal")
    return (mean - median(xs)) / sd


def _as_stats(x) -> SummaryStats:
    return x if isinstance(x, SummaryStats) else summarize(x)


def _finish(t: float, df_test: float, se_diff: float, diff: float, pooled_sd, penalty: int) -> TTestResult:
    notes = []
    if se_diff == 0.0:
        if diff == 0.0:
            t, p = 0.0, 1.0
        else:
            t = math.copysign(math.inf, diff)
            p = 0.0
            notes.append("standard error of the difference is zero; p-value underflows to 0")
    else:
        p = t_two_tailed(t, df_test)
        if p == 0.0:
            notes.append("p-value underflows to 0")
    return TTestResult(t=t, df=df_test, p=p, se_diff=se_diff, mean_diff=diff,
                       pooled_sd=pooled_sd, df_penalty=penalty, warnings=tuple(notes))


def pooled_t_test(a, b, df_penalty: int = 0) -> TTestResult:
    """Student's two-sample t-test with a pooled variance; ``t`` is positive when b > a.

    ``df_penalty`` is subtracted from ``n_a + n_b - 2`` when looking up the
    p-value (the pooled variance itself always uses ``n_a + n_b - 2``).
    """
    sa, sb = _as_stats(a), _as_stats(b)
    df = sa.n + sb.n - 2
    if df < 1:
        raise DomainError(f"pooled t-test needs at least 3 values in total (got {sa.n + sb.n})")
    if df_penalty < 0:
        raise DomainError(f"df penalty must be non-negative (got {df_penalty})")
    df_test = df - df_penalty
    if df_test < 1:
        raise DomainError(f"degrees of freedom after penalty must be >= 1 (got {df_test})")
    pooled_var = ((sa.n - 1) * sa.sd ** 2 + (sb.n - 1) * sb.sd ** 2) / df
    pooled_sd = math.sqrt(pooled_var)
    se_diff = pooled_sd * math.sqrt(1.0 / sa.n + 1.0 / sb.n)
    diff = sb.mean - sa.mean
    t = diff / se_diff if se_diff > 0.0 else 0.0
    return _finish(t, df_test, se_diff, diff, pooled_sd, df_penalty)


def welch_t_test(a, b, df_penalty: int = 0) -> TTestResult:
    """Welch's unequal-variance t-test with Welch-Satterthwaite degrees of freedom."""
    sa, sb = _as_stats(a), _as_stats(b)
    if sa.n < 2 or sb.n < 2:
        raise DomainError("Welch t-test needs at least 2 values per group")
    va, vb = sa.sd ** 2 / sa.n, sb.sd ** 2 / sb.n
    se_diff = math.sqrt(va + vb)
    diff = sb.mean - sa.mean
    if se_diff == 0.0:
        df = float(sa.n + sb.n - 2)
    else:
        df = (va + vb) ** 2 / (va ** 2 / (sa.n - 1) + vb ** 2 / (sb.n - 1))
    df_test = df - df_penalty
    if df_test < 1:
        raise DomainError(f"degrees of freedom after penalty must be >= 1 (got {df_test:g})")
    t = diff / se_diff if se_diff > 0.0 else 0.0
    return _finish(t, df_test, se_diff, diff, None, df_penalty)
