"""Two-group comparison in Weight space: Impact, confidence interval, Certainty, category."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .descriptive import Sample, SummaryStats, pooled_t_test, summarize, welch_t_test
from .errors import DomainError
from .odds import certainty_from_p, clamp_extremes, weight_from_probability
from .special import t_ppf


class Category(str, enum.Enum):
    INDETERMINATE = "Indeterminate"
    MARGINALLY_DIFFERENT = "MarginallyDifferent"
    DIFFERENT = "Different"

    @property
    def label(self) -> str:
        return {"Indeterminate": "Indeterminate",
                "MarginallyDifferent": "Marginally Different",
                "Different": "Different"}[self.value]


@dataclass(frozen=True)
class CertaintyThresholds:
    """Certainty cut points. Defaults sit at p = 0.05 and p = 0.001."""

    indeterminate_above: float = -1.28
    different_below: float = -3.00

    def __post_init__(self):
        if not (self.different_below < self.indeterminate_above < 0.0):
            raise DomainError(
                "thresholds must satisfy different_below < indeterminate_above < 0 "
                f"(got {self.different_below}, {self.indeterminate_above})")


@dataclass(frozen=True)
class WTestConfig:
    ci_multiplier: float = 1.96
    # "normal": fixed multiplier; "t": two-sided t critical value at ci_level
    ci_mode: str = "normal"
    ci_level: float = 0.95
    thresholds: CertaintyThresholds = field(default_factory=CertaintyThresholds)
    equal_var: bool = True

    def __post_init__(self):
        if self.ci_mode not in ("normal", "t"):
            raise DomainError(f"ci_mode must be 'normal' or 't' (got {self.ci_mode!r})")
        if not (self.ci_multiplier >= 0.0 and math.isfinite(self.ci_multiplier)):
            raise DomainError(f"ci multiplier must be finite and >= 0 (got {self.ci_multiplier!r})")
        if not (0.0 < self.ci_level < 1.0):
            raise DomainError(f"ci level must lie in (0, 1) (got {self.ci_level!r})")


@dataclass(frozen=True)
class TestReport:
    impact: float
    ci_low: float
    ci_high: float
    t: float
    df: float
    p: float
    certainty: float
    category: Category
    group_summaries: tuple[SummaryStats, SummaryStats]
    se_diff: float
    pooled_sd: float | None
    ci_multiplier: float
    df_penalty: int = 0
    warnings: tuple[str, ...] = ()

    __test__ = False  # not a pytest class


def confidence_interval(impact: float, se_diff: float, multiplier: float) -> tuple[float, float]:
    if se_diff < 0.0:
        raise DomainError(f"standard error must be >= 0 (got {se_diff!r})")
    half = multiplier * se_diff
    return impact - half, impact + half


def categorize(c: float, th: CertaintyThresholds | None = None) -> Category:
    th = th or CertaintyThresholds()
    if c > th.indeterminate_above:
        return Category.INDETERMINATE
    if c < th.different_below:
        return Category.DIFFERENT
    return Category.MARGINALLY_DIFFERENT


def _certainty(p: float) -> float:
    # p == 0 (underflow) and p == 1 (t == 0) sit at the ends of the log-odds line
    if p == 0.0:
        return -math.inf
    if p == 1.0:
        return math.inf
    return certainty_from_p(p)


def wtest_weights(a, b, cfg: WTestConfig | None = None, df_penalty: int = 0,
                  warnings: tuple[str, ...] = ()) -> TestReport:
    """Compare two groups already expressed as Weights. Impact is ``mean(b) - mean(a)``."""
    cfg = cfg or WTestConfig()
    sa, sb = summarize(a), summarize(b)
    test = pooled_t_test if cfg.equal_var else welch_t_test
    res = test(sa, sb, df_penalty=df_penalty)
    i = sb.mean - sa.mean
    if cfg.ci_mode == "t":
        multiplier = t_ppf(0.5 + 0.5 * cfg.ci_level, res.df)
    else:
        multiplier = cfg.ci_multiplier
    low, high = confidence_interval(i, res.se_diff, multiplier)
    c = _certainty(res.p)
    notes = list(warnings) + list(res.warnings)
    for s, label in ((sa, "first"), (sb, "second")):
        if s.single_value:
            notes.append(f"{label} group has a single value; its SD is taken as 0")
    return TestReport(
        impact=i, ci_low=low, ci_high=high, t=res.t, df=res.df, p=res.p,
        certainty=c, category=categorize(c, cfg.thresholds),
        group_summaries=(sa, sb), se_diff=res.se_diff, pooled_sd=res.pooled_sd,
        ci_multiplier=multiplier, df_penalty=df_penalty, warnings=tuple(notes))


def to_weights(values, label: str = "group") -> tuple[list[float], int]:
    """Clamp exact 0/1 with the group's own n, then convert to Weights.

    Returns the Weights and the number of clamped values.
    """
    vals = list(values.values if isinstance(values, Sample) else values)
    if not vals:
        raise DomainError(f"{label} is empty")
    clamped = clamp_extremes(vals, len(vals), scale=1.0)
    changed = sum(1 for x, y in zip(vals, clamped) if x != y)
    return [weight_from_probability(p) for p in clamped], changed


def wtest_probabilities(a, b, cfg: WTestConfig | None = None) -> TestReport:
    """Two-group test for probability data (values in [0, 1])."""
    notes = []
    wa, ca = to_weights(a, "first group")
    wb, cb = to_weights(b, "second group")
    for count, label in ((ca, "first"), (cb, "second")):
        if count:
            notes.append(f"{count} exact 0/1 value(s) in the {label} group clamped to 0.5/n or 1-0.5/n")
    return wtest_weights(wa, wb, cfg, warnings=tuple(notes))
