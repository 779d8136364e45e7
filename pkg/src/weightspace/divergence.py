"""How far probability-space mean and SD drift from their Weight-space counterparts.

Base datasets centred on 50% are scaled down towards 0% and, at every scale,
the mean and SD computed directly on the probabilities are compared with the
Weight-space mean and SD mapped back to probability units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .descriptive import summarize
from .errors import DomainError
from .odds import probability_from_weight, weight_from_probability

# Back-mapping of a Weight SD to probability units.
#   "upper":      P(Wmean + Wsd) - P(Wmean)
#   "half-range": (P(Wmean + Wsd) - P(Wmean - Wsd)) / 2
SD_CONVENTIONS = ("upper", "half-range")
DEFAULT_SD_CONVENTION = "upper"


@dataclass(frozen=True)
class BaseDataset:
    name: str
    percents: tuple[float, ...]

    def __post_init__(self):
        if not self.percents:
            raise DomainError(f"dataset {self.name!r} is empty")
        for v in self.percents:
            if not (0.0 < v < 100.0):
                raise DomainError(f"dataset {self.name!r}: percentages must lie in (0, 100) (got {v!r})")


@dataclass(frozen=True)
class DivergencePoint:
    dataset: str
    scale: float
    mean_prob_space: float
    mean_weight_space: float
    sd_prob_space: float
    sd_weight_space: float
    mean_pct_diff: float
    sd_pct_diff: float

    @property
    def mean_pct(self) -> float:
        return 100.0 * self.mean_prob_space


def builtin_datasets() -> list[BaseDataset]:
    return [
        BaseDataset("SD 6.8", (38, 44, 48, 49, 50, 51, 52, 56, 62)),
        BaseDataset("SD 3.4", (44, 47, 49, 49.5, 50, 50.5, 51, 53, 56)),
        BaseDataset("SD 1.7", (47, 48.5, 49.5, 49.75, 50, 50.25, 50.5, 51.5, 53)),
    ]


def weight_space_summary(percents: Sequence[float],
                         sd_convention: str = DEFAULT_SD_CONVENTION) -> tuple[float, float]:
    """Weight-space mean and SD of percentage data, expressed as probabilities."""
    if sd_convention not in SD_CONVENTIONS:
        raise DomainError(f"unknown SD convention {sd_convention!r}; choose from {', '.join(SD_CONVENTIONS)}")
    weights = []
    for v in percents:
        if not (0.0 < v < 100.0):
            raise DomainError(f"percentages must lie in (0, 100) (got {v!r})")
        weights.append(weight_from_probability(v / 100.0))
    stats = summarize(weights)
    mean = probability_from_weight(stats.mean)
    if stats.sd == 0.0:
        return mean, 0.0
    up = probability_from_weight(stats.mean + stats.sd)
    if sd_convention == "upper":
        return mean, up - mean
    down = probability_from_weight(stats.mean - stats.sd)
    return mean, 0.5 * (up - down)


def log_scales(n: int = 60, lo: float = 5e-5, hi: float = 1.0) -> list[float]:
    """``n`` log-spaced scale factors from ``lo`` to ``hi`` inclusive, in descending order."""
    if n < 1:
        raise DomainError(f"scale grid needs at least one point (got {n})")
    if not (0.0 < lo <= hi <= 1.0):
        raise DomainError(f"scale bounds must satisfy 0 < lo <= hi <= 1 (got {lo}, {hi})")
    if n == 1:
        return [hi]
    a, b = math.log10(hi), math.log10(lo)
    out = [10.0 ** (a + (b - a) * i / (n - 1)) for i in range(n)]
    out[0], out[-1] = hi, lo
    return out


def _pct_diff(prob_space: float, weight_space: float) -> float:
    if weight_space == 0.0:
        return 0.0 if prob_space == 0.0 else math.copysign(math.inf, prob_space)
    return 100.0 * (prob_space - weight_space) / weight_space


def divergence_point(base: BaseDataset, scale: float,
                     sd_convention: str = DEFAULT_SD_CONVENTION) -> DivergencePoint:
    if not (0.0 < scale <= 1.0):
        raise DomainError(f"scale must lie in (0, 1] (got {scale!r})")
    scaled = [v * scale for v in base.percents]
    for v in scaled:
        if not (0.0 < v < 100.0):
            raise DomainError(f"scale {scale!r} pushes dataset {base.name!r} outside (0, 100)% (value {v!r})")
    direct = summarize([v / 100.0 for v in scaled])
    mean_w, sd_w = weight_space_summary(scaled, sd_convention)
    return DivergencePoint(
        dataset=base.name, scale=scale,
        mean_prob_space=direct.mean, mean_weight_space=mean_w,
        sd_prob_space=direct.sd, sd_weight_space=sd_w,
        mean_pct_diff=_pct_diff(direct.mean, mean_w),
        sd_pct_diff=_pct_diff(direct.sd, sd_w),
    )


def divergence_curve(base: BaseDataset, scales: Sequence[float] | None = None,
                     sd_convention: str = DEFAULT_SD_CONVENTION) -> list[DivergencePoint]:
    """One :class:`DivergencePoint` per scale, in input order."""
    if scales is None:
        scales = log_scales()
    return [divergence_point(base, s, sd_convention) for s in scales]
